#include <doctest.h>

#include "spinlab/corpus.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/spinc.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace spinlab;
using namespace spinlab::testing;

namespace {

std::vector<std::string> orientable_builtins()
{
    std::vector<std::string> out;
    for (const auto& name : builtin_names())
        if (builtin(name).expected.orientable) out.push_back(name);
    return out;
}

BitVector reduce(const IntVector& v)
{
    BitVector out;
    for (const auto& x : v) out.push_back(static_cast<std::uint8_t>(Integer(x % 2) != 0));
    return out;
}

IntVector scaled(const IntVector& v, int k)
{
    IntVector out;
    for (const auto& x : v) out.push_back(x * k);
    return out;
}

// Equivalence by search: g ranges over a box of integral 1-cochains, gauges
// over all simplex sign patterns.
bool equivalent_by_search(const SpinContext& ctx, const SpinCStructure& a, const SpinCStructure& b, int bound)
{
    const BruteForceSpin brute = brute_force_spin(ctx);
    const std::size_t nf = static_cast<std::size_t>(ctx.facet_count());
    const int width = 2 * bound + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < nf; ++i) total *= static_cast<std::size_t>(width);
    for (std::size_t x = 0; x < total; ++x) {
        IntVector g;
        std::size_t y = x;
        for (std::size_t i = 0; i < nf; ++i) {
            g.push_back(static_cast<int>(y % static_cast<std::size_t>(width)) - bound);
            y /= static_cast<std::size_t>(width);
        }
        const IntVector dg = ctx.cochains.d1.apply(g);
        bool beta_ok = true;
        for (std::size_t w = 0; w < dg.size(); ++w) beta_ok = beta_ok && a.beta[w] + dg[w] == b.beta[w];
        if (!beta_ok) continue;
        const BitVector rest = xor_of(xor_of(a.signs, b.signs), reduce(g));
        if (brute.gauge_image.count(rest)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("twisted condition on the pentagon patch")
{
    const PentagonPatch p = pentagon_patch();
    LiftedPermutation product = LiftedPermutation::identity(3);
    for (std::size_t i = 0; i < 5; ++i)
        product = transition_map(p.b1[i], p.b2[i], p.embeddings[i], p.embeddings[(i + 1) % 5], p.frames[i]) * product;
    CHECK(twisted_condition_holds(product.central_sign(), 0));
    CHECK_FALSE(twisted_condition_holds(product.central_sign(), 1));
    CHECK(twisted_condition_holds(product.central_sign(), -2));
}

TEST_CASE("spin structures are spin-c structures with zero beta")
{
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const SpinStructureSet set = solve_spin_structures(ctx);
        const IntVector zero(ctx.skeleton.circuits.size(), 0);
        CHECK(spinc_check(ctx, canonical_trivialization(ctx, set.base_signs), zero).all_pass);
    }
}

TEST_CASE("find_spinc on the corpus")
{
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const NamedComplex nc = builtin(name);
        const SpinContext ctx = make_spin_context(nc.complex);
        const SpinCResult r = find_spinc(ctx);
        CHECK(r.exists == nc.expected.spinc_exists);
        CHECK(r.exists == r.w3.zero);
        REQUIRE(r.exists);
        const SpinCCheck check = spinc_check(ctx, canonical_trivialization(ctx, r.structure.signs), r.structure.beta);
        CHECK(check.all_pass);
        // beta agrees with w2 up to a mod-2 coboundary.
        const BitVector w2 = w2_cochain(ctx, canonical_trivialization(ctx));
        CHECK(gf2_solve(ctx.cochains.d1.mod2(), xor_of(w2, reduce(r.structure.beta))).feasible);
        CHECK(r.h2.free_rank == static_cast<std::size_t>(nc.expected.h2_free_rank));
        std::vector<int> torsion;
        for (const auto& t : r.h2.torsion) torsion.push_back(static_cast<int>(t));
        CHECK(torsion == nc.expected.h2_torsion);
    }
}

TEST_CASE("a failing circuit is reported")
{
    const SpinContext ctx = make_spin_context(builtin("torus2").complex);
    const SpinCResult r = find_spinc(ctx);
    IntVector beta = r.structure.beta;
    beta[0] += 1;
    const SpinCCheck check = spinc_check(ctx, canonical_trivialization(ctx, r.structure.signs), beta);
    CHECK_FALSE(check.all_pass);
    CHECK_FALSE(check.pass[0]);
}

TEST_CASE("non-cocycles are rejected")
{
    const SpinContext ctx = make_spin_context(builtin("s3_two_tet").complex);
    const CombinatorialTrivialization t = canonical_trivialization(ctx);
    IntVector beta(ctx.skeleton.circuits.size(), 0);
    beta[0] = 1;
    REQUIRE_FALSE(ctx.cochains.d2.apply(beta) == IntVector(ctx.cochains.d2.rows(), 0));
    CHECK_THROWS_AS(spinc_check(ctx, t, beta), AlgebraError);
    CHECK_THROWS_AS(spinc_for_beta(ctx, beta), AlgebraError);
    CHECK_THROWS_AS(spinc_check(ctx, t, IntVector(1, 0)), AlgebraError);
}

TEST_CASE("H2 action")
{
    std::mt19937 rng(21);
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const SpinCStructure s = find_spinc(ctx).structure;
        const IntVector zero(s.beta.size(), 0);
        CHECK(act_h2(ctx, s, zero) == s);
        const CohomologyGroup h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
        for (const auto& c : h2.free_generators) {
            const SpinCStructure moved = act_h2(ctx, s, c);
            CHECK(moved.signs == s.signs);
            CHECK(moved.beta == [&] {
                IntVector b = s.beta;
                for (std::size_t i = 0; i < b.size(); ++i) b[i] += 2 * c[i];
                return b;
            }());
            CHECK(spinc_check(ctx, canonical_trivialization(ctx, moved.signs), moved.beta).all_pass);
            CHECK_FALSE(spinc_equivalent(ctx, s, moved));
        }
        // Coboundaries act trivially on classes, whether doubled or re-solved.
        for (int trial = 0; trial < 3; ++trial) {
            IntVector g;
            for (int f = 0; f < ctx.facet_count(); ++f) g.push_back(static_cast<int>(rng() % 5) - 2);
            const IntVector dg = ctx.cochains.d1.apply(g);
            CHECK(spinc_equivalent(ctx, s, act_h2(ctx, s, dg)));
            const SpinCStructure shifted = shift_beta(ctx, s, dg);
            CHECK(spinc_check(ctx, canonical_trivialization(ctx, shifted.signs), shifted.beta).all_pass);
            CHECK(spinc_equivalent(ctx, s, shifted));
        }
    }
}

TEST_CASE("shifting beta by an odd class has no sign vector")
{
    const SpinContext ctx = make_spin_context(builtin("t3_six_tet").complex);
    const SpinCStructure s = find_spinc(ctx).structure;
    const CohomologyGroup h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
    REQUIRE(h2.free_generators.size() == 3);
    for (const auto& c : h2.free_generators) {
        CHECK_THROWS_AS(shift_beta(ctx, s, c), AlgebraError);
        const SpinCStructure doubled = shift_beta(ctx, s, scaled(c, 2));
        CHECK(spinc_check(ctx, canonical_trivialization(ctx, doubled.signs), doubled.beta).all_pass);
    }
    CHECK_THROWS_AS(spinc_orbit(ctx, s), AlgebraError);
}

TEST_CASE("spin-c orbits of finite H2")
{
    SUBCASE("two classes on RP3")
    {
        const SpinContext ctx = make_spin_context(builtin("rp3_two_tet").complex);
        const SpinCStructure s = find_spinc(ctx).structure;
        const auto orbit = spinc_orbit(ctx, s);
        REQUIRE(orbit.size() == 2);
        for (const auto& r : orbit) CHECK(spinc_check(ctx, canonical_trivialization(ctx, r.signs), r.beta).all_pass);
        const CohomologyGroup h2 = cohomology(ctx.cochains.d1, ctx.cochains.d2, Coefficients::Integers);
        REQUIRE(h2.torsion_generators.size() == 1);
        const SpinCStructure moved = act_h2(ctx, s, h2.torsion_generators[0]);
        CHECK_FALSE(spinc_equivalent(ctx, s, moved));
        CHECK_FALSE(equivalent_by_search(ctx, s, moved, 2));
        const SpinCStructure twice = act_h2(ctx, moved, h2.torsion_generators[0]);
        CHECK(spinc_equivalent(ctx, s, twice));
        CHECK(equivalent_by_search(ctx, s, twice, 2));
    }
    SUBCASE("one class on spheres")
    {
        for (const std::string name : {"s3_two_tet", "sphere(3)", "sphere(4)", "sphere(5)"}) {
            CAPTURE(name);
            const SpinContext ctx = make_spin_context(builtin(name).complex);
            CHECK(spinc_orbit(ctx, find_spinc(ctx).structure).size() == 1);
        }
    }
}
