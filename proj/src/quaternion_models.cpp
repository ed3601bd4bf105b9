#include "spinlab/quaternion_models.hpp"

#include "spinlab/errors.hpp"

#include <array>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace spinlab {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

Quaternion make(const QuadraticScalar& r, const std::array<QuadraticScalar, 3>& v)
{
    return {r, v[0], v[1], v[2]};
}

QuadraticScalar zero(int d)
{
    return QuadraticScalar(d);
}

// Axis triples (alpha, beta, gamma) with alpha * beta = gamma.
constexpr std::array<std::array<int, 3>, 3> cyclic_axes{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

} // namespace

UnitQuaternionGroup build_sigma4_model()
{
    const int d = 2;
    UnitQuaternionGroup g{"sigma4", d, 1, {}};
    const QuadraticScalar one = QuadraticScalar::integer(d, 1);
    const QuadraticScalar half = QuadraticScalar(d, 1, 0, 2);
    const QuadraticScalar root_half = QuadraticScalar(d, 0, 1, 2);
    const auto signs = {1, -1};
    auto scaled = [&](const QuadraticScalar& s, int sign) { return sign > 0 ? s : -s; };

    for (int s : signs) g.elements.push_back({make(scaled(one, s), {zero(d), zero(d), zero(d)})});
    for (int a = 0; a < 3; ++a) {
        for (int s : signs) {
            std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
            v[static_cast<std::size_t>(a)] = scaled(one, s);
            g.elements.push_back({make(zero(d), v)});
        }
    }
    for (int a = 0; a < 3; ++a) {
        for (int s0 : signs) {
            for (int s1 : signs) {
                std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
                v[static_cast<std::size_t>(a)] = scaled(root_half, s1);
                g.elements.push_back({make(scaled(root_half, s0), v)});
            }
        }
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            for (int s0 : signs) {
                for (int s1 : signs) {
                    std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
                    v[static_cast<std::size_t>(a)] = scaled(root_half, s0);
                    v[static_cast<std::size_t>(b)] = scaled(root_half, s1);
                    g.elements.push_back({make(zero(d), v)});
                }
            }
        }
    }
    for (int s0 : signs)
        for (int s1 : signs)
            for (int s2 : signs)
                for (int s3 : signs)
                    g.elements.push_back(
                        {make(scaled(half, s0), {scaled(half, s1), scaled(half, s2), scaled(half, s3)})});
    return g;
}

UnitQuaternionGroup build_a5_model()
{
    const int d = 5;
    UnitQuaternionGroup g{"a5", d, 2, {}};
    const QuadraticScalar one = QuadraticScalar::integer(d, 1);
    const QuadraticScalar half = QuadraticScalar(d, 1, 0, 2);
    const QuadraticScalar small = QuadraticScalar(d, -1, 1, 4); // (sqrt5 - 1)/4
    const QuadraticScalar large = QuadraticScalar(d, 1, 1, 4);  // (sqrt5 + 1)/4
    const auto signs = {1, -1};
    auto scaled = [&](const QuadraticScalar& s, int sign) { return sign > 0 ? s : -s; };
    auto pair = [](const Quaternion& p) { return ModelElement{p, p.galois_conjugate()}; };
    auto negate = [](ModelElement x) {
        for (auto& q : x) q = -q;
        return x;
    };

    // +-(1, 1)
    for (int s : signs) g.elements.push_back(pair(make(scaled(one, s), {zero(d), zero(d), zero(d)})));
    // (alpha, alpha), alpha = (+-1 +-i +-j +-k)/2
    for (int s0 : signs)
        for (int s1 : signs)
            for (int s2 : signs)
                for (int s3 : signs)
                    g.elements.push_back(
                        pair(make(scaled(half, s0), {scaled(half, s1), scaled(half, s2), scaled(half, s3)})));
    // +-(1/2 + a alpha + b beta, conjugate), a = +-(sqrt5 - 1)/4, b = +-(sqrt5 + 1)/4
    for (const auto& axes : cyclic_axes) {
        for (int sa : signs) {
            for (int sb : signs) {
                std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
                v[static_cast<std::size_t>(axes[0])] = scaled(small, sa);
                v[static_cast<std::size_t>(axes[1])] = scaled(large, sb);
                const ModelElement x = pair(make(half, v));
                g.elements.push_back(x);
                g.elements.push_back(negate(x));
            }
        }
    }
    // +-(a +- abar alpha +- beta/2, abar +- a alpha +- beta/2), alpha != beta
    for (int alpha = 0; alpha < 3; ++alpha) {
        for (int beta = 0; beta < 3; ++beta) {
            if (alpha == beta) continue;
            const bool cyclic = (beta - alpha + 3) % 3 == 1;
            const QuadraticScalar a = cyclic ? QuadraticScalar(d, 1, -1, 4) : QuadraticScalar(d, 1, 1, 4);
            for (int s1 : signs) {
                for (int s2 : signs) {
                    std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
                    v[static_cast<std::size_t>(alpha)] = scaled(a.galois_conjugate(), s1);
                    v[static_cast<std::size_t>(beta)] = scaled(half, s2);
                    const ModelElement x = pair(make(a, v));
                    g.elements.push_back(x);
                    g.elements.push_back(negate(x));
                }
            }
        }
    }
    // +-(alpha, alpha), alpha in {i, j, k}
    for (int a = 0; a < 3; ++a) {
        for (int s : signs) {
            std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
            v[static_cast<std::size_t>(a)] = scaled(one, s);
            g.elements.push_back(pair(make(zero(d), v)));
        }
    }
    // (a alpha + b beta + c gamma, conjugate), a = +-(1 + sqrt5)/4, b = +-(1 - sqrt5)/4, c = +-1/2
    for (const auto& axes : cyclic_axes) {
        for (int sa : signs) {
            for (int sb : signs) {
                for (int sc : signs) {
                    std::array<QuadraticScalar, 3> v{zero(d), zero(d), zero(d)};
                    v[static_cast<std::size_t>(axes[0])] = scaled(large, sa);
                    v[static_cast<std::size_t>(axes[1])] = scaled(-small, sb);
                    v[static_cast<std::size_t>(axes[2])] = scaled(half, sc);
                    g.elements.push_back(pair(make(zero(d), v)));
                }
            }
        }
    }
    return g;
}

ModelElement model_product(const ModelElement& x, const ModelElement& y)
{
    if (x.size() != y.size()) throw AlgebraError("model_product: component count mismatch");
    ModelElement out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] * y[i]);
    return out;
}

ModelElement model_identity(const UnitQuaternionGroup& group)
{
    return ModelElement(static_cast<std::size_t>(group.components), Quaternion::one(group.radicand));
}

int model_element_order(const ModelElement& x, int limit)
{
    if (x.empty()) throw AlgebraError("model_element_order: empty element");
    const ModelElement id(x.size(), Quaternion::one(x.front().radicand()));
    ModelElement acc = x;
    for (int m = 1; m <= limit; ++m) {
        if (acc == id) return m;
        acc = model_product(acc, x);
    }
    throw AlgebraError("model_element_order: element has no finite order below the limit");
}

namespace {

struct Table {
    std::map<ModelElement, std::size_t> index;
    std::vector<std::vector<std::size_t>> mul;
    bool closed = true;
    std::string failure;
};

Table multiplication_table(const UnitQuaternionGroup& group)
{
    Table t;
    for (std::size_t i = 0; i < group.elements.size(); ++i) {
        if (!t.index.emplace(group.elements[i], i).second) {
            t.closed = false;
            t.failure = "duplicate element " + std::to_string(i);
        }
    }
    const std::size_t n = group.elements.size();
    t.mul.assign(n, std::vector<std::size_t>(n, none));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto it = t.index.find(model_product(group.elements[i], group.elements[j]));
            if (it == t.index.end()) {
                if (t.closed) t.failure = "product of elements " + std::to_string(i) + " and " + std::to_string(j) + " leaves the set";
                t.closed = false;
                continue;
            }
            t.mul[i][j] = it->second;
        }
    }
    return t;
}

} // namespace

ClosureReport verify_closure(const UnitQuaternionGroup& group)
{
    ClosureReport r;
    const Table t = multiplication_table(group);
    r.closed = t.closed;
    r.detail = t.failure;
    const ModelElement id = model_identity(group);
    const QuadraticScalar unit = QuadraticScalar::integer(group.radicand, 1);
    r.unit_norm = true;
    r.has_inverses = true;
    for (const auto& x : group.elements) {
        for (const auto& q : x) r.unit_norm = r.unit_norm && q.norm() == unit;
        ModelElement inv;
        for (const auto& q : x) inv.push_back(q.inverse());
        r.has_inverses = r.has_inverses && t.index.count(inv) > 0;
    }
    ModelElement minus_one = id;
    for (auto& q : minus_one) q = -q;
    r.contains_minus_one = t.index.count(id) > 0 && t.index.count(minus_one) > 0;
    if (r.closed) {
        const std::size_t n = group.elements.size();
        for (std::size_t i = 0; i < n; ++i) {
            bool central = true;
            for (std::size_t j = 0; j < n && central; ++j) central = t.mul[i][j] == t.mul[j][i];
            r.center_size += central ? 1 : 0;
        }
    }
    if (r.detail.empty() && !r.ok()) r.detail = "model fails a group axiom";
    return r;
}

std::map<int, int> order_histogram(const UnitQuaternionGroup& group)
{
    std::map<int, int> h;
    for (const auto& x : group.elements) ++h[model_element_order(x)];
    return h;
}

std::map<int, int> order_histogram(const std::vector<LiftedPermutation>& cover)
{
    std::map<int, int> h;
    for (const auto& x : cover) ++h[element_order(x)];
    return h;
}

std::vector<LiftedPermutation> default_generators(const std::vector<LiftedPermutation>& cover)
{
    if (cover.empty()) throw AlgebraError("default_generators: empty cover");
    const int rank = cover.front().rank();
    bool has_odd = false;
    for (const auto& x : cover) has_odd = has_odd || x.parity() == 1;
    if (has_odd && rank >= 4) return {transposition_lift(0, 1, rank), cycle_lift({1, 2, 3}, rank)};
    if (!has_odd && rank >= 5) return {cycle_lift({0, 1, 2}, rank), cycle_lift({0, 1, 2, 3, 4}, rank)};
    throw AlgebraError("default_generators: no default generators for this cover");
}

IsomorphismReport verify_model_isomorphism(const UnitQuaternionGroup& model, const std::vector<LiftedPermutation>& cover)
{
    return verify_model_isomorphism(model, cover, default_generators(cover));
}

IsomorphismReport verify_model_isomorphism(const UnitQuaternionGroup& model, const std::vector<LiftedPermutation>& cover,
                                           const std::vector<LiftedPermutation>& generators)
{
    IsomorphismReport report;
    report.generators = generators;
    const std::size_t n = cover.size();
    if (model.elements.size() != n) {
        report.detail = "order mismatch: model has " + std::to_string(model.elements.size()) + " elements, cover has " +
                        std::to_string(n);
        return report;
    }
    const Table t = multiplication_table(model);
    if (!t.closed) {
        report.detail = "model is not a group: " + t.failure;
        return report;
    }

    std::map<LiftedPermutation, std::size_t> cover_index;
    for (std::size_t i = 0; i < n; ++i) cover_index.emplace(cover[i], i);
    if (cover_index.size() != n) {
        report.detail = "cover list has duplicates";
        return report;
    }
    const std::size_t ng = generators.size();
    // edge[x][g] = index of cover[x] * generators[g]
    std::vector<std::vector<std::size_t>> edge(n, std::vector<std::size_t>(ng, none));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t g = 0; g < ng; ++g) {
            const auto it = cover_index.find(cover[x] * generators[g]);
            if (it == cover_index.end()) {
                report.detail = "cover list is not closed under the generators";
                return report;
            }
            edge[x][g] = it->second;
        }
    }
    const auto id_it = cover_index.find(LiftedPermutation::identity(cover.front().rank()));
    if (id_it == cover_index.end()) {
        report.detail = "cover list lacks the identity";
        return report;
    }
    // Spanning tree of the Cayley graph.
    std::vector<std::size_t> parent(n, none);
    std::vector<std::size_t> via(n, none);
    std::vector<std::size_t> order{id_it->second};
    std::vector<bool> seen(n, false);
    seen[id_it->second] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::size_t g = 0; g < ng; ++g) {
            const std::size_t y = edge[order[head]][g];
            if (seen[y]) continue;
            seen[y] = true;
            parent[y] = order[head];
            via[y] = g;
            order.push_back(y);
        }
    }
    if (order.size() != n) {
        report.detail = "generators do not generate the cover";
        return report;
    }

    const std::size_t model_id = t.index.at(model_identity(model));
    std::vector<int> model_orders(n);
    for (std::size_t i = 0; i < n; ++i) {
        int m = 1;
        for (std::size_t acc = i; acc != model_id; acc = t.mul[acc][i]) ++m;
        model_orders[i] = m;
    }
    std::vector<std::vector<std::size_t>> candidates(ng);
    for (std::size_t g = 0; g < ng; ++g) {
        const int og = element_order(generators[g]);
        for (std::size_t i = 0; i < n; ++i)
            if (model_orders[i] == og) candidates[g].push_back(i);
    }

    std::vector<std::size_t> choice(ng, 0);
    std::size_t tried = 0;
    const std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
        if (depth < ng) {
            for (std::size_t c : candidates[depth]) {
                choice[depth] = c;
                if (search(depth + 1)) return true;
            }
            return false;
        }
        ++tried;
        std::vector<std::size_t> phi(n, none);
        phi[id_it->second] = model_id;
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t y = order[k];
            phi[y] = t.mul[phi[parent[y]]][choice[via[y]]];
        }
        std::vector<bool> hit(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            if (hit[phi[x]]) return false;
            hit[phi[x]] = true;
        }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t g = 0; g < ng; ++g)
                if (phi[edge[x][g]] != t.mul[phi[x]][choice[g]]) return false;
        report.image = phi;
        return true;
    };

    if (!search(0)) {
        report.detail = "no isomorphism after " + std::to_string(tried) + " generator assignments";
        return report;
    }
    // Full multiplication table check.
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t xy = cover_index.at(cover[x] * cover[y]);
            if (report.image[xy] != t.mul[report.image[x]][report.image[y]]) {
                report.image.clear();
                report.detail = "candidate map fails the multiplication table";
                return report;
            }
        }
    }
    for (std::size_t g = 0; g < ng; ++g) report.generator_images.push_back(model.elements[choice[g]]);
    report.found = true;
    std::ostringstream out;
    out << "isomorphism found after " << tried << " generator assignments";
    report.detail = out.str();
    return report;
}

} // namespace spinlab
