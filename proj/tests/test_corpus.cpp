#include <doctest.h>

#include "spinlab/corpus.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/spinc.hpp"
#include "support/oracles.hpp"

using namespace spinlab;
using namespace spinlab::testing;

namespace {

bool is_zero(const IntMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("every builtin matches its expectation record")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const NamedComplex nc = builtin(name);
        CHECK(nc.name == name);
        const ExpectedInvariants& e = nc.expected;
        const DualSkeleton sk = dual_skeleton(nc.complex);
        CHECK(sk.orientation.orientable == e.orientable);
        CHECK(simplicial_betti_mod2(nc.complex)[1] == e.h1_rank_mod2);
        const DualCochains cc = dual_cochains(sk);
        CHECK(cohomology(cc.d0, cc.d1, Coefficients::GF2).free_rank == static_cast<std::size_t>(e.h1_rank_mod2));
        if (!e.orientable) {
            CHECK_THROWS_AS(make_spin_context(nc.complex), NonOrientableError);
            CHECK(e.spin_count == 0);
            continue;
        }
        const SpinContext ctx = make_spin_context(nc.complex);
        CHECK(solve_spin_structures(ctx).count == e.spin_count);
        const SpinCResult r = find_spinc(ctx);
        CHECK(r.exists == e.spinc_exists);
        CHECK(r.h2.free_rank == static_cast<std::size_t>(e.h2_free_rank));
        std::vector<int> torsion;
        for (const auto& t : r.h2.torsion) torsion.push_back(static_cast<int>(t));
        CHECK(torsion == e.h2_torsion);
    }
}

TEST_CASE("coboundaries compose to zero on every builtin")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const DualCochains cc = dual_cochains(dual_skeleton(builtin(name).complex));
        CHECK((cc.d1.mod2() * cc.d0.mod2()).is_zero());
        CHECK(is_zero(cc.d1 * cc.d0));
        CHECK(is_zero(cc.d2 * cc.d1));
    }
}

TEST_CASE("builtin names")
{
    CHECK(builtin("sphere4").name == "sphere(4)");
    CHECK(builtin("sphere(4)").complex.simplex_count() == 2);
    CHECK(builtin("torus2").complex.simplex_count() == 2);
    CHECK(builtin("t3_six_tet").complex.simplex_count() == 6);
    CHECK_THROWS_AS(builtin("sphere(7)"), ValidationError);
    CHECK_THROWS_AS(builtin("sphere1"), ValidationError);
    CHECK_THROWS_AS(builtin("lens"), ValidationError);
}

TEST_CASE("builtins export to the triangulation format and back")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const DeltaComplex dc = builtin(name).complex;
        const std::string text = serialize(dc);
        CHECK(serialize(parse_and_validate(text)) == text);
    }
}
