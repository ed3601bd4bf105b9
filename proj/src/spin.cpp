#include "spinlab/spin.hpp"

#include "spinlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace spinlab {

namespace {

std::string join(const std::vector<int>& xs)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    return out.str();
}

// Even permutation of 0..n taking j to images[j] for j < images.size(),
// which must have n - 1 distinct entries.
Permutation even_extension(const std::vector<int>& images, int n)
{
    std::vector<int> full = images;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    for (int x : images) used[static_cast<std::size_t>(x)] = true;
    for (int x = 0; x <= n; ++x)
        if (!used[static_cast<std::size_t>(x)]) full.push_back(x);
    Permutation p(full);
    if (p.parity() == 1) std::swap(full[static_cast<std::size_t>(n - 1)], full[static_cast<std::size_t>(n)]);
    return Permutation(full);
}

Permutation restrict_to(const Permutation& p, int size)
{
    std::vector<int> images(p.images().begin(), p.images().begin() + size);
    return Permutation(images);
}

LiftedPermutation swap_sides(const CombinatorialPath& p, bool forward, bool first)
{
    return (forward == first) ? p.b1 : p.b2;
}

} // namespace

SpinContext make_spin_context(const DeltaComplex& dc)
{
    SpinContext ctx;
    ctx.dimension = dc.dimension;
    ctx.skeleton = dual_skeleton(dc);
    const auto& sk = ctx.skeleton;
    if (!sk.orientation.orientable)
        throw NonOrientableError("complex is not orientable: the closed walk through simplices [" +
                                 join(sk.orientation.certificate_simplices) + "] across facet classes [" +
                                 join(sk.orientation.certificate_facets) + "] reverses orientation");
    ctx.cochains = dual_cochains(sk);
    const int n = dc.dimension;
    for (const auto& f : sk.facets) {
        const Permutation& c1 = sk.charts[static_cast<std::size_t>(f.simplex1)];
        const Permutation& c2 = sk.charts[static_cast<std::size_t>(f.simplex2)];
        FacetChart fc;
        fc.simplex1 = f.simplex1;
        fc.simplex2 = f.simplex2;
        fc.vertex1 = c1.inverse()(f.facet1);
        fc.vertex2 = c2.inverse()(f.facet2);
        fc.phi = c2.inverse() * f.map * c1;
        if (fc.phi.parity() != 1) throw InternalError("orientation charts left an even gluing");
        std::vector<int> images;
        for (int v = 0; v <= n; ++v)
            if (v != fc.vertex1) images.push_back(v);
        images.push_back(fc.vertex1);
        fc.f1 = Permutation(images);
        fc.f2 = fc.phi * fc.f1;
        ctx.facets.push_back(std::move(fc));
    }
    for (const auto& c : sk.circuits) {
        std::vector<Permutation> ws;
        for (const auto& st : c.steps) {
            Permutation w = sk.charts[static_cast<std::size_t>(st.simplex)].inverse() * st.embedding;
            if (w.parity() != 0) throw InternalError("circuit embedding is odd in chart coordinates");
            ws.push_back(std::move(w));
        }
        ctx.embeddings.push_back(std::move(ws));
    }
    return ctx;
}

std::string check_trivialization(const SpinContext& ctx, const CombinatorialTrivialization& t)
{
    const int n = ctx.dimension;
    if (static_cast<int>(t.frames.size()) != ctx.simplex_count()) return "wrong number of frames";
    if (static_cast<int>(t.paths.size()) != ctx.facet_count()) return "wrong number of paths";
    for (int s = 0; s < ctx.simplex_count(); ++s) {
        const Permutation& v = t.frames[static_cast<std::size_t>(s)];
        if (v.size() != n + 1 || v.parity() != 0) return "frame of simplex " + std::to_string(s) + " is not an even extension";
    }
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const FacetChart& fc = ctx.facets[static_cast<std::size_t>(f)];
        const CombinatorialPath& p = t.paths[static_cast<std::size_t>(f)];
        const std::string where = "facet class " + std::to_string(f) + ": ";
        if (p.b1.rank() != n + 1 || p.b2.rank() != n + 1) return where + "motion has the wrong rank";
        if (p.b1.parity() != 0 || p.b2.parity() != 0) return where + "motion is not even";
        const Permutation& v1 = t.frames[static_cast<std::size_t>(fc.simplex1)];
        const Permutation& v2 = t.frames[static_cast<std::size_t>(fc.simplex2)];
        for (int j = 0; j <= n - 2; ++j) {
            const int x1 = p.b1.base()(v1(j));
            const int x2 = p.b2.base()(v2(j));
            if (x1 == fc.vertex1) return where + "side 1 frame is not pushed into the facet";
            if (x2 == fc.vertex2) return where + "side 2 frame is not pushed into the facet";
            if (fc.phi(x1) != x2) return where + "pushed frames do not agree across the facet";
        }
    }
    return {};
}

CombinatorialTrivialization canonical_trivialization(const SpinContext& ctx, const BitVector& signs)
{
    const int n = ctx.dimension;
    if (!signs.empty() && static_cast<int>(signs.size()) != ctx.facet_count())
        throw AlgebraError("canonical_trivialization: sign vector has the wrong length");
    CombinatorialTrivialization t;
    t.frames.assign(static_cast<std::size_t>(ctx.simplex_count()), Permutation::identity(n + 1));
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const FacetChart& fc = ctx.facets[static_cast<std::size_t>(f)];
        const Permutation b1 = (fc.vertex1 >= n - 1) ? Permutation::identity(n + 1)
                                                     : Permutation::cycle(n + 1, {fc.vertex1, n - 1, n});
        std::vector<int> images;
        for (int j = 0; j <= n - 2; ++j) images.push_back(fc.phi(b1(j)));
        const Permutation b2 = even_extension(images, n);
        LiftedPermutation l1 = canonical_lift(b1);
        if (!signs.empty() && signs[static_cast<std::size_t>(f)]) l1 = -l1;
        t.paths.push_back({l1, canonical_lift(b2)});
    }
    return t;
}

GaugeElement gauge_identity(const SpinContext& ctx)
{
    GaugeElement g;
    g.simplex.assign(static_cast<std::size_t>(ctx.simplex_count()), LiftedPermutation::identity(ctx.dimension + 1));
    g.facet.assign(static_cast<std::size_t>(ctx.facet_count()), LiftedPermutation::identity(ctx.dimension));
    return g;
}

GaugeElement gauge_product(const GaugeElement& g, const GaugeElement& h)
{
    if (g.simplex.size() != h.simplex.size() || g.facet.size() != h.facet.size())
        throw AlgebraError("gauge_product: shape mismatch");
    GaugeElement out;
    for (std::size_t i = 0; i < g.simplex.size(); ++i) out.simplex.push_back(g.simplex[i] * h.simplex[i]);
    for (std::size_t i = 0; i < g.facet.size(); ++i) out.facet.push_back(g.facet[i] * h.facet[i]);
    return out;
}

int missed_facet_vertex(const SpinContext& ctx, const CombinatorialTrivialization& t, int facet)
{
    const int n = ctx.dimension;
    const FacetChart& fc = ctx.facets[static_cast<std::size_t>(facet)];
    const CombinatorialPath& p = t.paths[static_cast<std::size_t>(facet)];
    const Permutation& v1 = t.frames[static_cast<std::size_t>(fc.simplex1)];
    const Permutation f1_inv = fc.f1.inverse();
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int j = 0; j <= n - 2; ++j) {
        const int x = f1_inv(p.b1.base()(v1(j)));
        if (x >= n) throw InternalError("missed_facet_vertex: frame is not pushed into the facet");
        hit[static_cast<std::size_t>(x)] = true;
    }
    return static_cast<int>(std::find(hit.begin(), hit.end(), false) - hit.begin());
}

CombinatorialTrivialization apply_gauge(const SpinContext& ctx, const GaugeElement& g, const CombinatorialTrivialization& t)
{
    const int n = ctx.dimension;
    if (static_cast<int>(g.simplex.size()) != ctx.simplex_count() || static_cast<int>(g.facet.size()) != ctx.facet_count())
        throw AlgebraError("apply_gauge: gauge element has the wrong shape");
    for (const auto& a : g.simplex)
        if (a.rank() != n + 1 || a.parity() != 0) throw AlgebraError("apply_gauge: simplex gauge must be even of rank n+1");
    for (const auto& a : g.facet)
        if (a.rank() != n) throw AlgebraError("apply_gauge: facet gauge must have rank n");

    CombinatorialTrivialization out = t;
    for (int s = 0; s < ctx.simplex_count(); ++s)
        out.frames[static_cast<std::size_t>(s)] = g.simplex[static_cast<std::size_t>(s)].base() * t.frames[static_cast<std::size_t>(s)];
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const FacetChart& fc = ctx.facets[static_cast<std::size_t>(f)];
        CombinatorialPath& p = out.paths[static_cast<std::size_t>(f)];
        p.b1 = p.b1 * g.simplex[static_cast<std::size_t>(fc.simplex1)].inverse();
        p.b2 = p.b2 * g.simplex[static_cast<std::size_t>(fc.simplex2)].inverse();
        const LiftedPermutation a = g.facet[static_cast<std::size_t>(f)].widened(n + 1);
        if (a.parity() == 0) {
            p.b1 = conjugate_by_permutation(fc.f1, a) * p.b1;
            p.b2 = conjugate_by_permutation(fc.f2, a) * p.b2;
        } else {
            const int k = missed_facet_vertex(ctx, t, f);
            p.b1 = conjugate_by_permutation(fc.f1, a * transposition_lift(n, k, n + 1)) * p.b1;
            p.b2 = conjugate_by_permutation(fc.f2, a * transposition_lift(k, n, n + 1)) * p.b2;
        }
    }
    const std::string problem = check_trivialization(ctx, out);
    if (!problem.empty()) throw InternalError("apply_gauge produced an invalid trivialization: " + problem);
    return out;
}

LiftedPermutation transition_map(const LiftedPermutation& b1, const LiftedPermutation& b2, const Permutation& w_here,
                                 const Permutation& w_next, const Permutation& frame)
{
    const int n = w_here.size() - 1;
    const Permutation w_inv = w_here.inverse();
    std::vector<bool> pushed(static_cast<std::size_t>(n + 1), false);
    for (int j = 0; j <= n - 2; ++j) pushed[static_cast<std::size_t>(w_inv(b1.base()(frame(j))))] = true;
    if (pushed[static_cast<std::size_t>(n - 1)]) throw AlgebraError("transition_map: pushed frame leaves the facet");
    LiftedPermutation turn = LiftedPermutation::identity(n + 1);
    if (pushed[static_cast<std::size_t>(n)]) {
        const int a = static_cast<int>(std::find(pushed.begin(), pushed.end(), false) - pushed.begin());
        turn = cycle_lift({a, n, n - 1}, n + 1);
    }
    return conjugate_by_permutation(w_next.inverse(), b2).inverse() * turn * conjugate_by_permutation(w_inv, b1);
}

LiftedPermutation transition_map(const SpinContext& ctx, int circuit, int position, const CombinatorialTrivialization& t)
{
    const auto& c = ctx.skeleton.circuits.at(static_cast<std::size_t>(circuit));
    const auto& ws = ctx.embeddings[static_cast<std::size_t>(circuit)];
    const std::size_t i = static_cast<std::size_t>(position);
    const std::size_t next = (i + 1) % ws.size();
    const auto& st = c.steps.at(i);
    const CombinatorialPath& p = t.paths[static_cast<std::size_t>(st.facet_class)];
    const bool forward = st.direction == 1;
    return transition_map(swap_sides(p, forward, true), swap_sides(p, forward, false), ws[i], ws[next],
                          t.frames[static_cast<std::size_t>(st.simplex)]);
}

CentralSign circuit_obstruction(const SpinContext& ctx, int circuit, const CombinatorialTrivialization& t)
{
    LiftedPermutation product = LiftedPermutation::identity(ctx.dimension + 1);
    const int m = ctx.skeleton.circuits.at(static_cast<std::size_t>(circuit)).length();
    for (int i = 0; i < m; ++i) product = transition_map(ctx, circuit, i, t) * product;
    if (!product.is_central())
        throw InternalError("circuit " + std::to_string(circuit) + ": transition maps multiply to the non-central " +
                            product.to_string());
    return product.central_sign();
}

BitVector w2_cochain(const SpinContext& ctx, const CombinatorialTrivialization& t)
{
    BitVector w;
    for (std::size_t c = 0; c < ctx.skeleton.circuits.size(); ++c)
        w.push_back(circuit_obstruction(ctx, static_cast<int>(c), t) == CentralSign::minus ? 0 : 1);
    return w;
}

bool extends_over_two_skeleton(const SpinContext& ctx, const CombinatorialTrivialization& t)
{
    const BitVector w = w2_cochain(ctx, t);
    return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

namespace {

std::vector<BitVector> independent_columns(const GF2Matrix& m)
{
    std::vector<BitVector> basis;
    GF2Matrix rows(0, m.rows());
    const GF2Matrix t = m.transpose();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < t.rows(); ++c) {
        GF2Matrix grown(rows.rows() + 1, m.rows());
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t k = 0; k < m.rows(); ++k) grown.set(r, k, rows.get(r, k));
        const BitVector col = t.row(c);
        for (std::size_t k = 0; k < m.rows(); ++k) grown.set(rows.rows(), k, col[k]);
        const std::size_t r = gf2_rank(grown);
        if (r == rank) continue;
        rank = r;
        rows = std::move(grown);
        basis.push_back(col);
    }
    return basis;
}

BitVector to_bits(const IntVector& v)
{
    BitVector out;
    for (const auto& x : v) out.push_back(static_cast<std::uint8_t>(bit_test(x, 0)));
    return out;
}

} // namespace

SpinStructureSet solve_spin_structures(const SpinContext& ctx)
{
    SpinStructureSet out;
    out.w2 = w2_cochain(ctx, canonical_trivialization(ctx));
    const GF2Matrix d0 = ctx.cochains.d0.mod2();
    const GF2Matrix d1 = ctx.cochains.d1.mod2();
    const auto solution = gf2_solve(d1, out.w2);
    out.gauge_basis = independent_columns(d0);
    if (!solution.feasible) {
        out.certificate = solution.certificate;
        return out;
    }
    out.exists = true;
    out.base_signs = solution.particular;
    for (const auto& g : cohomology(ctx.cochains.d0, ctx.cochains.d1, Coefficients::GF2).free_generators)
        out.h1_basis.push_back(to_bits(g));
    out.log2_count = out.h1_basis.size();
    if (solution.nullspace.size() != out.log2_count + out.gauge_basis.size())
        throw InternalError("spin structure count disagrees with the first cohomology");
    out.count = Integer(1) << out.log2_count;
    const auto check = canonical_trivialization(ctx, out.base_signs);
    if (!extends_over_two_skeleton(ctx, check)) throw InternalError("solved sign vector does not extend");
    return out;
}

BitVector act_h1(const SpinContext& ctx, const BitVector& signs, const BitVector& omega)
{
    if (signs.size() != omega.size() || static_cast<int>(omega.size()) != ctx.facet_count())
        throw AlgebraError("act_h1: vector has the wrong length");
    const BitVector d = ctx.cochains.d1.mod2().apply(omega);
    if (std::any_of(d.begin(), d.end(), [](auto x) { return x != 0; }))
        throw AlgebraError("act_h1: omega is not a cocycle");
    BitVector out = signs;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= omega[i] & 1u;
    return out;
}

BitVector canonical_signs(const SpinContext& ctx, const CombinatorialTrivialization& t)
{
    const int n = ctx.dimension;
    // Gauge the frames to the identity.
    GaugeElement g = gauge_identity(ctx);
    for (int s = 0; s < ctx.simplex_count(); ++s)
        g.simplex[static_cast<std::size_t>(s)] = canonical_lift(t.frames[static_cast<std::size_t>(s)].inverse());
    const CombinatorialTrivialization framed = apply_gauge(ctx, g, t);
    const CombinatorialTrivialization target = canonical_trivialization(ctx);

    // Then the unique facet gauge carrying each motion to the canonical one.
    GaugeElement h = gauge_identity(ctx);
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const FacetChart& fc = ctx.facets[static_cast<std::size_t>(f)];
        const Permutation p = fc.f1.inverse() * target.paths[static_cast<std::size_t>(f)].b1.base() *
                              framed.paths[static_cast<std::size_t>(f)].b1.base().inverse() * fc.f1;
        // p is even; when it moves n the gauge is odd and enters as a[n k].
        Permutation a = p;
        if (p(n) != n) {
            const int k = missed_facet_vertex(ctx, framed, f);
            a = p * Permutation::transposition(n + 1, n, k);
        }
        if (a(n) != n) throw InternalError("canonical_signs: no facet gauge reaches the canonical motion");
        h.facet[static_cast<std::size_t>(f)] = canonical_lift(restrict_to(a, n));
    }
    const CombinatorialTrivialization moved = apply_gauge(ctx, h, framed);
    BitVector signs;
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const auto& got = moved.paths[static_cast<std::size_t>(f)];
        const auto& want = target.paths[static_cast<std::size_t>(f)];
        const LiftedPermutation r1 = got.b1 * want.b1.inverse();
        const LiftedPermutation r2 = got.b2 * want.b2.inverse();
        if (!r1.is_central() || !r2.is_central()) throw InternalError("canonical_signs: motion did not reach the canonical one");
        signs.push_back(r1.central_sign() == r2.central_sign() ? 0 : 1);
    }
    return signs;
}

bool same_gauge_class(const SpinContext& ctx, const BitVector& a, const BitVector& b)
{
    if (a.size() != b.size()) throw AlgebraError("same_gauge_class: length mismatch");
    BitVector diff = a;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] ^= b[i] & 1u;
    return gf2_solve(ctx.cochains.d0.mod2(), diff).feasible;
}

bool homotopic(const SpinContext& ctx, const CombinatorialTrivialization& t1, const CombinatorialTrivialization& t2)
{
    return same_gauge_class(ctx, canonical_signs(ctx, t1), canonical_signs(ctx, t2));
}

} // namespace spinlab
