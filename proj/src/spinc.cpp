#include "spinlab/spinc.hpp"

#include "spinlab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace spinlab {

namespace {

BitVector reduce(const IntVector& v)
{
    BitVector out;
    for (const auto& x : v) out.push_back(static_cast<std::uint8_t>(boost::multiprecision::bit_test(x, 0)));
    return out;
}

BitVector xor_of(BitVector a, const BitVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

void require_cocycle(const SpinContext& ctx, const IntVector& beta, const char* what)
{
    if (beta.size() != ctx.skeleton.circuits.size())
        throw AlgebraError(std::string(what) + ": cochain has " + std::to_string(beta.size()) + " entries, expected " +
                           std::to_string(ctx.skeleton.circuits.size()));
    for (const auto& x : ctx.cochains.d2.apply(beta))
        if (!x.is_zero()) throw AlgebraError(std::string(what) + ": cochain is not a cocycle");
}

} // namespace

bool twisted_condition_holds(CentralSign product, const Integer& beta)
{
    return product == (boost::multiprecision::bit_test(beta, 0) ? CentralSign::plus : CentralSign::minus);
}

SpinCCheck spinc_check(const SpinContext& ctx, const CombinatorialTrivialization& t, const IntVector& beta)
{
    require_cocycle(ctx, beta, "spinc_check");
    SpinCCheck out;
    for (std::size_t c = 0; c < beta.size(); ++c) {
        const CentralSign product = circuit_obstruction(ctx, static_cast<int>(c), t);
        const bool ok = twisted_condition_holds(product, beta[c]);
        out.products.push_back(product);
        out.pass.push_back(ok);
        out.all_pass = out.all_pass && ok;
    }
    return out;
}

std::optional<SpinCStructure> spinc_for_beta(const SpinContext& ctx, const IntVector& beta)
{
    require_cocycle(ctx, beta, "spinc_for_beta");
    const BitVector w2 = w2_cochain(ctx, canonical_trivialization(ctx));
    const GF2Solution s = gf2_solve(ctx.cochains.d1.mod2(), xor_of(w2, reduce(beta)));
    if (!s.feasible) return std::nullopt;
    return SpinCStructure{beta, s.particular};
}

SpinCResult find_spinc(const SpinContext& ctx)
{
    SpinCResult out;
    const BitVector w2 = w2_cochain(ctx, canonical_trivialization(ctx));
    out.w3 = bockstein_w3(w2, ctx.cochains.d2);
    out.h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
    out.exists = out.w3.zero;
    if (!out.exists) return out;
    const auto s = spinc_for_beta(ctx, out.w3.integral_lift);
    if (!s) throw InternalError("find_spinc: the integral lift of w2 admits no sign vector");
    out.structure = *s;
    if (!spinc_check(ctx, canonical_trivialization(ctx, out.structure.signs), out.structure.beta).all_pass)
        throw InternalError("find_spinc: constructed structure fails the circuit condition");
    return out;
}

SpinCStructure act_h2(const SpinContext& ctx, const SpinCStructure& s, const IntVector& c)
{
    require_cocycle(ctx, c, "act_h2");
    SpinCStructure out = s;
    for (std::size_t i = 0; i < c.size(); ++i) out.beta[i] += 2 * c[i];
    return out;
}

SpinCStructure shift_beta(const SpinContext& ctx, const SpinCStructure& s, const IntVector& c)
{
    require_cocycle(ctx, c, "shift_beta");
    IntVector beta = s.beta;
    for (std::size_t i = 0; i < c.size(); ++i) beta[i] += c[i];
    const auto out = spinc_for_beta(ctx, beta);
    if (!out) throw AlgebraError("shift_beta: the shift is not even modulo coboundaries, no sign vector fits");
    return *out;
}

bool spinc_equivalent(const SpinContext& ctx, const SpinCStructure& a, const SpinCStructure& b)
{
    IntVector diff;
    for (std::size_t i = 0; i < a.beta.size(); ++i) diff.push_back(b.beta[i] - a.beta[i]);
    const IntSolution g = int_solve(ctx.cochains.d1, diff);
    if (!g.feasible) return false;
    // Remaining freedom: simplex gauges and integral 1-cocycles.
    GF2Matrix moves(static_cast<std::size_t>(ctx.facet_count()),
                    static_cast<std::size_t>(ctx.simplex_count()) + g.nullspace.size());
    const GF2Matrix d0 = ctx.cochains.d0.mod2();
    for (std::size_t r = 0; r < moves.rows(); ++r) {
        for (std::size_t k = 0; k < d0.cols(); ++k)
            if (d0.get(r, k)) moves.set(r, k, true);
        for (std::size_t k = 0; k < g.nullspace.size(); ++k)
            if (boost::multiprecision::bit_test(g.nullspace[k][r], 0)) moves.set(r, d0.cols() + k, true);
    }
    const BitVector target = xor_of(xor_of(a.signs, b.signs), reduce(g.particular));
    return gf2_solve(moves, target).feasible;
}

std::vector<SpinCStructure> spinc_orbit(const SpinContext& ctx, const SpinCStructure& s)
{
    const CohomologyGroup h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
    if (h2.free_rank > 0) throw AlgebraError("spinc_orbit: H^2 is infinite");
    std::vector<SpinCStructure> out;
    std::vector<Integer> k(h2.torsion.size(), 0);
    while (true) {
        IntVector c(s.beta.size(), 0);
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += k[i] * h2.torsion_generators[i][j];
        const SpinCStructure moved = act_h2(ctx, s, c);
        bool seen = false;
        for (const auto& r : out) seen = seen || spinc_equivalent(ctx, r, moved);
        if (!seen) out.push_back(moved);
        std::size_t i = 0;
        while (i < k.size() && ++k[i] == h2.torsion[i]) k[i++] = 0;
        if (i == k.size()) break;
    }
    return out;
}

} // namespace spinlab
