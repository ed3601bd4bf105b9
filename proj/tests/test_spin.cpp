#include <doctest.h>

#include "spinlab/corpus.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/spin.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

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

BitVector random_bits(std::size_t n, std::mt19937& rng)
{
    BitVector v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1u);
    return v;
}

bool in_gf2_image(const GF2Matrix& a, const BitVector& b)
{
    return gf2_solve(a, b).feasible;
}

} // namespace

TEST_CASE("pentagon patch transition maps")
{
    const PentagonPatch p = pentagon_patch();
    std::vector<LiftedPermutation> f;
    for (int i = 0; i < 5; ++i)
        f.push_back(transition_map(p.b1[static_cast<std::size_t>(i)], p.b2[static_cast<std::size_t>(i)],
                                   p.embeddings[static_cast<std::size_t>(i)],
                                   p.embeddings[static_cast<std::size_t>((i + 1) % 5)], p.frames[static_cast<std::size_t>(i)]));
    const LiftedPermutation one = LiftedPermutation::identity(3);
    CHECK(f[0] == one);
    CHECK(f[1] == cycle_lift({2, 1, 0}, 3));
    CHECK(f[2] == one);
    CHECK(f[3] == -cycle_lift({0, 1, 2}, 3));
    CHECK(f[4] == one);
    LiftedPermutation product = one;
    for (const auto& x : f) product = x * product;
    REQUIRE(product.is_central());
    CHECK(product.central_sign() == CentralSign::minus);

    SUBCASE("negating one motion twice leaves the product unchanged")
    {
        PentagonPatch q = p;
        q.b1[1] = -q.b1[1];
        q.b1[3] = -q.b1[3];
        LiftedPermutation flipped = one;
        for (int i = 0; i < 5; ++i)
            flipped = transition_map(q.b1[static_cast<std::size_t>(i)], q.b2[static_cast<std::size_t>(i)],
                                     q.embeddings[static_cast<std::size_t>(i)],
                                     q.embeddings[static_cast<std::size_t>((i + 1) % 5)], q.frames[static_cast<std::size_t>(i)]) *
                      flipped;
        CHECK(flipped == product);
    }
    SUBCASE("a single negation changes the verdict")
    {
        PentagonPatch q = p;
        q.b1[0] = -q.b1[0];
        LiftedPermutation flipped = one;
        for (int i = 0; i < 5; ++i)
            flipped = transition_map(q.b1[static_cast<std::size_t>(i)], q.b2[static_cast<std::size_t>(i)],
                                     q.embeddings[static_cast<std::size_t>(i)],
                                     q.embeddings[static_cast<std::size_t>((i + 1) % 5)], q.frames[static_cast<std::size_t>(i)]) *
                      flipped;
        CHECK(flipped == -product);
    }
}

TEST_CASE("canonical trivializations are valid")
{
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const CombinatorialTrivialization t = canonical_trivialization(ctx);
        CHECK(check_trivialization(ctx, t).empty());
        CHECK(t.paths.size() == static_cast<std::size_t>(ctx.facet_count()));
        for (const auto& frame : t.frames) CHECK(frame.is_identity());
    }
    CHECK(canonical_trivialization(make_spin_context(builtin("torus2").complex)).paths.size() == 3);
    CHECK(canonical_trivialization(make_spin_context(builtin("s3_two_tet").complex)).paths.size() == 4);
}

TEST_CASE("non-orientable input is rejected with an odd cycle")
{
    try {
        make_spin_context(builtin("klein").complex);
        FAIL("expected NonOrientableError");
    } catch (const NonOrientableError& e) {
        CHECK(std::string(e.what()).find("closed walk through simplices") != std::string::npos);
    }
}

TEST_CASE("circuit products project to the identity")
{
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const CombinatorialTrivialization t = canonical_trivialization(ctx);
        for (std::size_t c = 0; c < ctx.skeleton.circuits.size(); ++c) {
            const auto& steps = ctx.skeleton.circuits[c].steps;
            LiftedPermutation product = LiftedPermutation::identity(ctx.dimension + 1);
            for (std::size_t i = 0; i < steps.size(); ++i)
                product = transition_map(ctx, static_cast<int>(c), static_cast<int>(i), t) * product;
            CHECK(product.base().is_identity());
            CHECK(product.is_central());
            CHECK(product.central_sign() == circuit_obstruction(ctx, static_cast<int>(c), t));
        }
    }
}

TEST_CASE("gauge action axioms")
{
    std::mt19937 rng(11);
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const CombinatorialTrivialization t0 = canonical_trivialization(ctx, random_bits(static_cast<std::size_t>(ctx.facet_count()), rng));
        CHECK(apply_gauge(ctx, gauge_identity(ctx), t0) == t0);
        for (int trial = 0; trial < 20; ++trial) {
            const CombinatorialTrivialization t = apply_gauge(ctx, random_gauge(ctx, rng), t0);
            const GaugeElement g = random_gauge(ctx, rng);
            const GaugeElement h = random_gauge(ctx, rng);
            CHECK(apply_gauge(ctx, gauge_product(g, h), t) == apply_gauge(ctx, g, apply_gauge(ctx, h, t)));
        }
    }
}

TEST_CASE("gauge action with prescribed parities")
{
    std::mt19937 rng(12);
    const SpinContext ctx = make_spin_context(builtin("s3_two_tet").complex);
    const CombinatorialTrivialization t0 = canonical_trivialization(ctx);
    for (int parities = 0; parities < 4; ++parities) {
        GaugeElement g = random_gauge(ctx, rng);
        GaugeElement h = random_gauge(ctx, rng);
        for (int f = 0; f < ctx.facet_count(); ++f) {
            g.facet[static_cast<std::size_t>(f)] = random_lift(ctx.dimension, false, rng);
            while (g.facet[static_cast<std::size_t>(f)].parity() != (parities & 1))
                g.facet[static_cast<std::size_t>(f)] = random_lift(ctx.dimension, false, rng);
            while (h.facet[static_cast<std::size_t>(f)].parity() != (parities >> 1))
                h.facet[static_cast<std::size_t>(f)] = random_lift(ctx.dimension, false, rng);
        }
        CAPTURE(parities);
        CHECK(apply_gauge(ctx, gauge_product(g, h), t0) == apply_gauge(ctx, g, apply_gauge(ctx, h, t0)));
    }
}

TEST_CASE("central gauge at one simplex flips the motions on its sides")
{
    const SpinContext ctx = make_spin_context(builtin("torus2").complex);
    const CombinatorialTrivialization t = canonical_trivialization(ctx);
    GaugeElement g = gauge_identity(ctx);
    g.simplex[0] = -g.simplex[0];
    const CombinatorialTrivialization u = apply_gauge(ctx, g, t);
    CHECK(u.frames == t.frames);
    for (int f = 0; f < ctx.facet_count(); ++f) {
        const auto& fc = ctx.facets[static_cast<std::size_t>(f)];
        const auto& p = t.paths[static_cast<std::size_t>(f)];
        const auto& q = u.paths[static_cast<std::size_t>(f)];
        CHECK(q.b1 == (fc.simplex1 == 0 ? -p.b1 : p.b1));
        CHECK(q.b2 == (fc.simplex2 == 0 ? -p.b2 : p.b2));
    }
}

TEST_CASE("stabilizers have two elements on a connected complex")
{
    std::mt19937 rng(13);
    for (const auto& name : orientable_builtins()) {
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const int bits = ctx.simplex_count() + ctx.facet_count();
        if (bits > 14) continue;
        CAPTURE(name);
        const CombinatorialTrivialization t = apply_gauge(ctx, random_gauge(ctx, rng), canonical_trivialization(ctx));
        int fixed = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x)
            if (apply_gauge(ctx, sign_gauge(ctx, x), t) == t) ++fixed;
        CHECK(fixed == 2);
        for (int trial = 0; trial < 50; ++trial) {
            const GaugeElement g = random_gauge(ctx, rng);
            bool central = true;
            for (const auto& x : g.simplex) central = central && x.is_central();
            for (const auto& x : g.facet) central = central && x.is_central();
            if (!central) CHECK_FALSE(apply_gauge(ctx, g, t) == t);
        }
    }
}

TEST_CASE("spin structure counts agree with exhaustive enumeration and homology")
{
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const NamedComplex nc = builtin(name);
        const SpinContext ctx = make_spin_context(nc.complex);
        const SpinStructureSet set = solve_spin_structures(ctx);
        REQUIRE(set.exists);
        CHECK(set.count == nc.expected.spin_count);
        const int h1 = simplicial_betti_mod2(nc.complex)[1];
        CHECK(set.count == Integer(1) << h1);
        CHECK(set.h1_basis.size() == static_cast<std::size_t>(h1));
        CHECK(extends_over_two_skeleton(ctx, canonical_trivialization(ctx, set.base_signs)));
        if (ctx.facet_count() > 14) continue;
        const BruteForceSpin brute = brute_force_spin(ctx);
        CHECK(brute.closed_under_gauge);
        CHECK(brute.valid.size() % brute.gauge_image.size() == 0);
        CHECK(Integer(brute.classes) == set.count);
    }
}

TEST_CASE("w2 is a cocycle whose class does not depend on the trivialization")
{
    std::mt19937 rng(14);
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const GF2Matrix d1 = ctx.cochains.d1.mod2();
        const GF2Matrix d2 = ctx.cochains.d2.mod2();
        const std::size_t nf = static_cast<std::size_t>(ctx.facet_count());
        for (int trial = 0; trial < 5; ++trial) {
            const BitVector s1 = random_bits(nf, rng);
            const BitVector s2 = random_bits(nf, rng);
            const auto t1 = apply_gauge(ctx, random_gauge(ctx, rng), canonical_trivialization(ctx, s1));
            const auto t2 = apply_gauge(ctx, random_gauge(ctx, rng), canonical_trivialization(ctx, s2));
            const BitVector w1 = w2_cochain(ctx, t1);
            const BitVector w2 = w2_cochain(ctx, t2);
            CHECK(xor_of(w1, w2) == d1.apply(xor_of(s1, s2)));
            CHECK(in_gf2_image(d1, xor_of(w1, w2)));
            if (d2.rows() > 0) CHECK(d2.apply(w1) == BitVector(d2.rows(), 0));
        }
    }
}

TEST_CASE("a single facet flip changes w2 by its coboundary")
{
    const SpinContext ctx = make_spin_context(builtin("t3_six_tet").complex);
    const GF2Matrix d1 = ctx.cochains.d1.mod2();
    const BitVector base = w2_cochain(ctx, canonical_trivialization(ctx));
    for (int f = 0; f < ctx.facet_count(); ++f) {
        BitVector e(static_cast<std::size_t>(ctx.facet_count()), 0);
        e[static_cast<std::size_t>(f)] = 1;
        CHECK(xor_of(base, w2_cochain(ctx, canonical_trivialization(ctx, e))) == d1.apply(e));
    }
}

TEST_CASE("H1 acts freely and transitively on spin structures")
{
    for (const std::string name : {"torus2", "t3_six_tet", "rp3_two_tet"}) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const SpinStructureSet set = solve_spin_structures(ctx);
        const BruteForceSpin brute = brute_force_spin(ctx);
        std::set<BitVector> classes;
        for (const auto& s : brute.valid) classes.insert(class_representative(s, brute.gauge_image));
        const std::size_t k = set.h1_basis.size();
        std::set<BitVector> orbit;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
            BitVector omega(static_cast<std::size_t>(ctx.facet_count()), 0);
            for (std::size_t i = 0; i < k; ++i)
                if ((x >> i) & 1u) omega = xor_of(omega, set.h1_basis[i]);
            for (const auto& c : classes) {
                const BitVector moved = class_representative(act_h1(ctx, c, omega), brute.gauge_image);
                CHECK(classes.count(moved) == 1);
                if (x != 0) CHECK(moved != c);
            }
            orbit.insert(class_representative(act_h1(ctx, set.base_signs, omega), brute.gauge_image));
        }
        CHECK(orbit == classes);
    }
}

TEST_CASE("act_h1 edge cases")
{
    const SpinContext ctx = make_spin_context(builtin("torus2").complex);
    const SpinStructureSet set = solve_spin_structures(ctx);
    const BitVector zero(static_cast<std::size_t>(ctx.facet_count()), 0);
    CHECK(act_h1(ctx, set.base_signs, zero) == set.base_signs);
    for (const auto& g : set.gauge_basis) CHECK(same_gauge_class(ctx, act_h1(ctx, set.base_signs, g), set.base_signs));

    const SpinContext sphere = make_spin_context(builtin("sphere(2)").complex);
    BitVector e(static_cast<std::size_t>(sphere.facet_count()), 0);
    e[0] = 1;
    CHECK_THROWS_AS(act_h1(sphere, e, e), AlgebraError);
}

TEST_CASE("homotopy of trivializations")
{
    std::mt19937 rng(15);
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const SpinContext ctx = make_spin_context(builtin(name).complex);
        const auto t = apply_gauge(ctx, random_gauge(ctx, rng),
                                   canonical_trivialization(ctx, random_bits(static_cast<std::size_t>(ctx.facet_count()), rng)));
        for (int trial = 0; trial < 5; ++trial) CHECK(homotopic(ctx, t, apply_gauge(ctx, random_gauge(ctx, rng), t)));
    }

    const SpinContext torus = make_spin_context(builtin("torus2").complex);
    const BruteForceSpin brute = brute_force_spin(torus);
    const auto base = canonical_trivialization(torus);
    for (int f = 0; f < torus.facet_count(); ++f) {
        BitVector e(static_cast<std::size_t>(torus.facet_count()), 0);
        e[static_cast<std::size_t>(f)] = 1;
        CHECK(homotopic(torus, base, canonical_trivialization(torus, e)) == (brute.gauge_image.count(e) == 1));
    }

    const SpinStructureSet set = solve_spin_structures(torus);
    for (const auto& omega : set.h1_basis)
        CHECK_FALSE(homotopic(torus, canonical_trivialization(torus, set.base_signs),
                              canonical_trivialization(torus, act_h1(torus, set.base_signs, omega))));
}

TEST_CASE("spin counts are invariant under relabelling")
{
    std::mt19937 rng(16);
    for (const auto& name : orientable_builtins()) {
        CAPTURE(name);
        const NamedComplex nc = builtin(name);
        for (int trial = 0; trial < 3; ++trial) {
            const DeltaComplex dc = random_relabel(nc.complex, rng);
            const SpinStructureSet set = solve_spin_structures(make_spin_context(dc));
            CHECK(set.exists);
            CHECK(set.count == nc.expected.spin_count);
        }
    }
    for (int trial = 0; trial < 3; ++trial)
        CHECK_THROWS_AS(make_spin_context(random_relabel(builtin("klein").complex, rng)), NonOrientableError);
}
