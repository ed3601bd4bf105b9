#include "spinlab/cli.hpp"

#include "spinlab/corpus.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/quaternion_models.hpp"
#include "spinlab/spin.hpp"
#include "spinlab/spinc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace spinlab::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

json keyed_bits(const BitVector& v)
{
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[std::to_string(i)] = static_cast<int>(v[i]);
    return out;
}

json keyed_integers(const IntVector& v)
{
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[std::to_string(i)] = integer_json(v[i]);
    return out;
}

json bit_list(const BitVector& v)
{
    json out = json::array();
    for (auto b : v) out.push_back(static_cast<int>(b));
    return out;
}

json group_json(const CohomologyGroup& g)
{
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

std::string group_text(const CohomologyGroup& g)
{
    std::string out;
    if (g.free_rank == 1) out = "Z";
    if (g.free_rank > 1) out = "Z^" + std::to_string(g.free_rank);
    for (const auto& t : g.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.str());
    return out.empty() ? "0" : out;
}

DeltaComplex load_complex(const std::string& source)
{
    if (source.starts_with("builtin:")) return builtin(source.substr(8)).complex;
    std::ifstream in(source);
    if (!in) throw ValidationError("cannot read file", source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_and_validate(buffer.str());
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file", path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), path);
    }
}

// A map from face-class id to integer; absent ids are zero.
IntVector load_cochain(const std::string& path, std::size_t size)
{
    const json doc = load_json(path);
    if (!doc.is_object()) throw ValidationError("cochain file must be a JSON object keyed by class id", path);
    IntVector out(size, 0);
    for (const auto& [key, value] : doc.items()) {
        std::size_t id = 0;
        try {
            std::size_t used = 0;
            id = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ValidationError("key \"" + key + "\" is not a class id", path);
        }
        if (id >= size) throw ValidationError("class id " + key + " out of range (" + std::to_string(size) + " classes)", path);
        if (!value.is_number_integer()) throw ValidationError("value at \"" + key + "\" is not an integer", path);
        out[id] = value.get<std::int64_t>();
    }
    return out;
}

BitVector reduce(const IntVector& v)
{
    BitVector out;
    for (const auto& x : v) out.push_back(static_cast<std::uint8_t>(Integer(x % 2) != 0));
    return out;
}

json orientation_json(const OrientationResult& o)
{
    json out = {{"orientable", o.orientable}, {"w1", keyed_bits(o.w1)}};
    if (!o.orientable)
        out["certificate"] = {{"simplices", o.certificate_simplices}, {"facet_classes", o.certificate_facets}};
    return out;
}

std::string odd_cycle_text(const OrientationResult& o)
{
    std::string out = "non-orientable: odd closed walk through simplices";
    for (int s : o.certificate_simplices) out += " " + std::to_string(s);
    return out;
}

CommandResult cmd_validate(const std::string& file)
{
    const DeltaComplex dc = load_complex(file);
    const DualSkeleton sk = dual_skeleton(dc);
    CommandResult r;
    r.payload = {{"valid", true},
                 {"dimension", dc.dimension},
                 {"simplices", dc.simplex_count()},
                 {"facet_classes", sk.facets.size()},
                 {"codim2_classes", sk.circuits.size()},
                 {"codim3_classes", sk.links.size()},
                 {"orientable", sk.orientation.orientable}};
    r.summary = "valid closed " + std::to_string(dc.dimension) + "-dimensional triangulation with " +
                std::to_string(dc.simplex_count()) + " simplices";
    return r;
}

CommandResult cmd_invariants(const std::string& file)
{
    const DeltaComplex dc = load_complex(file);
    const DualSkeleton sk = dual_skeleton(dc);
    const DualCochains cc = dual_cochains(sk);
    CommandResult r;
    json& p = r.payload;
    p["dimension"] = dc.dimension;
    p["simplices"] = dc.simplex_count();
    p["orientable"] = sk.orientation.orientable;
    p["w1"] = orientation_json(sk.orientation);
    const CohomologyGroup h1 = cohomology(cc.d0, cc.d1, Coefficients::Integers);
    const CohomologyGroup h1_mod2 = cohomology(cc.d0, cc.d1, Coefficients::GF2);
    const CohomologyGroup h2 = cohomology(cc.d1, cc.d2, Coefficients::Integers);
    p["h1"] = group_json(h1);
    p["h1_mod2_rank"] = h1_mod2.free_rank;
    p["h2"] = group_json(h2);
    std::string summary = "H1 = " + group_text(h1) + ", H2 = " + group_text(h2);
    if (!sk.orientation.orientable) {
        p["w2"] = nullptr;
        p["w3"] = nullptr;
        r.summary = odd_cycle_text(sk.orientation) + "; " + summary;
        return r;
    }
    const SpinContext ctx = make_spin_context(dc);
    const SpinStructureSet spin = solve_spin_structures(ctx);
    p["w2"] = {{"cochain", bit_list(spin.w2)}, {"class_zero", spin.exists}};
    const BocksteinResult w3 = bockstein_w3(spin.w2, cc.d2);
    p["w3"] = {{"zero", w3.zero}, {"representative", keyed_integers(w3.representative)}};
    r.summary = std::string("orientable, w2 ") + (spin.exists ? "= 0" : "!= 0") + ", W3 " + (w3.zero ? "= 0" : "!= 0") +
                "; " + summary;
    return r;
}

CommandResult cmd_spin(const std::string& file, bool enumerate, const std::string& act_file)
{
    const SpinContext ctx = make_spin_context(load_complex(file));
    const SpinStructureSet set = solve_spin_structures(ctx);
    CommandResult r;
    json& p = r.payload;
    p["exists"] = set.exists;
    p["w2"] = bit_list(set.w2);
    if (!set.exists) {
        p["count"] = 0;
        p["certificate"] = {{"circuits", keyed_bits(set.certificate)}};
        r.status = infeasible;
        r.summary = "no spin structure: w2 is odd on a mod-2 cycle of dual 2-cells";
        return r;
    }
    p["count"] = integer_json(set.count);
    p["log2_count"] = set.log2_count;
    p["base_signs"] = keyed_bits(set.base_signs);
    json basis = json::array();
    for (const auto& b : set.h1_basis) basis.push_back(keyed_bits(b));
    p["h1_basis"] = basis;
    json gauge = json::array();
    for (const auto& b : set.gauge_basis) gauge.push_back(keyed_bits(b));
    p["gauge_basis"] = gauge;
    const CombinatorialTrivialization t = canonical_trivialization(ctx, set.base_signs);
    json log = json::array();
    for (std::size_t c = 0; c < ctx.skeleton.circuits.size(); ++c)
        log.push_back(static_cast<int>(circuit_obstruction(ctx, static_cast<int>(c), t)));
    p["circuit_products"] = log;
    if (enumerate) {
        json all = json::array();
        const std::size_t k = set.h1_basis.size();
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
            BitVector omega(static_cast<std::size_t>(ctx.facet_count()), 0);
            for (std::size_t i = 0; i < k; ++i)
                if ((x >> i) & 1u)
                    for (std::size_t j = 0; j < omega.size(); ++j) omega[j] ^= set.h1_basis[i][j];
            all.push_back(keyed_bits(act_h1(ctx, set.base_signs, omega)));
        }
        p["structures"] = all;
    }
    if (!act_file.empty()) {
        const BitVector omega = reduce(load_cochain(act_file, static_cast<std::size_t>(ctx.facet_count())));
        BitVector moved;
        try {
            moved = act_h1(ctx, set.base_signs, omega);
        } catch (const AlgebraError& e) {
            throw ValidationError(e.what(), act_file);
        }
        p["acted"] = {{"signs", keyed_bits(moved)}, {"same_class", same_gauge_class(ctx, moved, set.base_signs)}};
    }
    r.summary = "spin structures: " + set.count.str();
    return r;
}

CommandResult cmd_spinc(const std::string& file, const std::string& beta_file)
{
    const SpinContext ctx = make_spin_context(load_complex(file));
    CommandResult r;
    json& p = r.payload;
    const CohomologyGroup h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
    p["h2"] = group_json(h2);
    std::optional<SpinCStructure> found;
    if (beta_file.empty()) {
        const SpinCResult res = find_spinc(ctx);
        p["w3"] = {{"zero", res.w3.zero}, {"representative", keyed_integers(res.w3.representative)}};
        if (res.exists) found = res.structure;
    } else {
        const IntVector beta = load_cochain(beta_file, ctx.skeleton.circuits.size());
        try {
            found = spinc_for_beta(ctx, beta);
        } catch (const AlgebraError& e) {
            throw ValidationError(e.what(), beta_file);
        }
        p["beta_given"] = true;
    }
    p["exists"] = found.has_value();
    if (!found) {
        r.status = infeasible;
        r.summary = beta_file.empty() ? "no spin-c structure: W3 is nonzero" : "no sign vector fits the given beta";
        return r;
    }
    p["beta"] = keyed_integers(found->beta);
    p["signs"] = keyed_bits(found->signs);
    const SpinCCheck check = spinc_check(ctx, canonical_trivialization(ctx, found->signs), found->beta);
    json circuits = json::array();
    for (std::size_t c = 0; c < check.products.size(); ++c)
        circuits.push_back({{"product", static_cast<int>(check.products[c])}, {"pass", static_cast<bool>(check.pass[c])}});
    p["circuits"] = circuits;
    if (!check.all_pass) throw InternalError("spin-c structure fails the circuit condition");
    if (h2.free_rank == 0) p["classes"] = spinc_orbit(ctx, *found).size();
    else p["classes"] = nullptr;
    r.summary = "spin-c structure found; H2 = " + group_text(h2);
    return r;
}

json expected_json(const ExpectedInvariants& e)
{
    return {{"orientable", e.orientable},         {"h1_rank_mod2", e.h1_rank_mod2}, {"spin_count", e.spin_count},
            {"spinc_exists", e.spinc_exists},     {"h2_free_rank", e.h2_free_rank}, {"h2_torsion", e.h2_torsion}};
}

CommandResult cmd_corpus(const std::string& name, bool do_export)
{
    CommandResult r;
    NamedComplex nc;
    try {
        nc = builtin(name);
    } catch (const ValidationError& e) {
        r.status = usage;
        std::string names;
        for (const auto& n : builtin_names()) names += " " + n;
        r.summary = std::string(e.what()) + "; known:" + names;
        return r;
    }
    if (do_export) {
        r.text = serialize(nc.complex);
        r.summary = "exported " + nc.name;
        return r;
    }
    r.payload = {{"name", nc.name},
                 {"dimension", nc.complex.dimension},
                 {"simplices", nc.complex.simplex_count()},
                 {"expected", expected_json(nc.expected)}};
    r.summary = nc.name;
    return r;
}

json histogram_json(const std::map<int, int>& h)
{
    json out = json::object();
    for (const auto& [order, count] : h) out[std::to_string(order)] = count;
    return out;
}

CommandResult cmd_groups(bool model_check)
{
    CommandResult r;
    json& p = r.payload;
    const auto a4 = enumerate_cover(4, true);
    const auto s4 = enumerate_cover(4, false);
    const auto a5 = enumerate_cover(5, true);
    p["groups"] = {
        {"even_cover_4", {{"order", a4.size()}, {"histogram", histogram_json(order_histogram(a4))}}},
        {"full_cover_4", {{"order", s4.size()}, {"histogram", histogram_json(order_histogram(s4))}}},
        {"even_cover_5", {{"order", a5.size()}, {"histogram", histogram_json(order_histogram(a5))}}},
    };
    r.summary = "cover orders " + std::to_string(a4.size()) + ", " + std::to_string(s4.size()) + ", " + std::to_string(a5.size());
    if (!model_check) return r;
    bool all = true;
    json models = json::object();
    for (const auto& [model, cover] : {std::pair{build_sigma4_model(), s4}, std::pair{build_a5_model(), a5}}) {
        const ClosureReport closure = verify_closure(model);
        const IsomorphismReport iso = verify_model_isomorphism(model, cover);
        models[model.name] = {{"elements", model.elements.size()},
                              {"closed", closure.ok()},
                              {"histogram", histogram_json(order_histogram(model))},
                              {"isomorphic", iso.found}};
        all = all && closure.ok() && iso.found;
    }
    p["models"] = models;
    p["model_check"] = all;
    if (!all) {
        r.status = internal;
        r.summary += "; model check FAILED";
    } else {
        r.summary += "; both quaternion models are isomorphic to their covers";
    }
    return r;
}

CommandResult failure(int status, const std::string& kind, const std::string& message)
{
    CommandResult r;
    r.status = status;
    r.payload = {{"error", {{"kind", kind}, {"message", message}}}};
    r.summary = kind + ": " + message;
    return r;
}

} // namespace

CommandResult run(const std::vector<std::string>& args)
{
    CLI::App app{"Combinatorial spin and spin-c structures on triangulated manifolds", "spinlab"};
    app.require_subcommand(1);
    std::string file, act_file, beta_file, name;
    bool enumerate = false, do_export = false, model_check = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a triangulation file");
    validate_cmd->add_option("file", file, "triangulation JSON or builtin:NAME")->required();
    auto* invariants_cmd = app.add_subcommand("invariants", "w1, w2, W3 and low cohomology");
    invariants_cmd->add_option("file", file, "triangulation JSON or builtin:NAME")->required();
    auto* spin_cmd = app.add_subcommand("spin", "Spin structures");
    spin_cmd->add_option("file", file, "triangulation JSON or builtin:NAME")->required();
    spin_cmd->add_flag("--enumerate", enumerate, "List one sign vector per spin structure");
    spin_cmd->add_option("--act", act_file, "Facet-class cocycle to act by (JSON map id -> 0/1)");
    auto* spinc_cmd = app.add_subcommand("spinc", "Spin-c structures");
    spinc_cmd->add_option("file", file, "triangulation JSON or builtin:NAME")->required();
    spinc_cmd->add_option("--beta", beta_file, "Integral 2-cocycle to use (JSON map circuit id -> integer)");
    auto* corpus_cmd = app.add_subcommand("corpus", "Built-in triangulations");
    corpus_cmd->add_option("name", name, "builtin name")->required();
    corpus_cmd->add_flag("--export", do_export, "Print the triangulation JSON");
    auto* groups_cmd = app.add_subcommand("groups", "Orders in the binary groups");
    groups_cmd->add_flag("--model-check", model_check, "Check the quaternion models");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.text = app.help();
        return r;
    } catch (const CLI::CallForAllHelp&) {
        CommandResult r;
        r.text = app.help("", CLI::AppFormatMode::All);
        return r;
    } catch (const CLI::ParseError& e) {
        CommandResult r;
        r.status = usage;
        r.summary = std::string(e.what()) + "\n" + app.help();
        return r;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*invariants_cmd) return cmd_invariants(file);
        if (*spin_cmd) return cmd_spin(file, enumerate, act_file);
        if (*spinc_cmd) return cmd_spinc(file, beta_file);
        if (*corpus_cmd) return cmd_corpus(name, do_export);
        if (*groups_cmd) return cmd_groups(model_check);
    } catch (const ValidationError& e) {
        CommandResult r = failure(validation, "validation", e.what());
        r.payload["valid"] = false;
        if (!e.where().empty()) r.payload["error"]["where"] = e.where();
        return r;
    } catch (const NonOrientableError& e) {
        return failure(non_orientable, "non_orientable", e.what());
    } catch (const std::exception& e) {
        return failure(internal, "internal", e.what());
    }
    return failure(usage, "usage", "no subcommand");
}

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const CommandResult r = run(args);
    if (!r.text.empty()) std::cout << r.text;
    else if (!r.payload.is_null()) std::cout << r.payload.dump(2) << '\n';
    if (!r.summary.empty()) std::cerr << r.summary << '\n';
    return r.status;
}

} // namespace spinlab::cli
