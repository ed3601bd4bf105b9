#include <doctest.h>

#include "spinlab/binary_group.hpp"
#include "spinlab/errors.hpp"
#include "support/relations.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <set>

using namespace spinlab;
using spinlab::testing::central_minus;

namespace {

Permutation random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

LiftedPermutation random_lift(std::mt19937_64& rng, int n)
{
    LiftedPermutation x = canonical_lift(random_permutation(rng, n));
    return rng() % 2 ? -x : x;
}

} // namespace

TEST_CASE("transposition lifts")
{
    const auto t = transposition_lift(0, 1, 3);
    CHECK(element_order(t) == 4);
    CHECK(t * t == central_minus(3));
    CHECK((t * t.inverse()).is_identity());
    CHECK(transposition_lift(1, 0, 3) == -t);
    CHECK_THROWS_AS(transposition_lift(1, 1, 3), AlgebraError);
    CHECK_THROWS_AS(transposition_lift(0, 3, 3), AlgebraError);
}

TEST_CASE("cycle lifts")
{
    const int n = 5;
    CHECK(cycle_lift({0, 1, 2}, n) == transposition_lift(0, 1, n) * transposition_lift(1, 2, n));
    CHECK(power(cycle_lift({0, 1, 2}, n), 3) == central_minus(n));
    CHECK(cycle_lift({2, 4}, n) == transposition_lift(2, 4, n));
    CHECK(cycle_lift({0, 1, 2}, n).base() == Permutation::cycle(n, {0, 1, 2}));
    CHECK_THROWS_AS(cycle_lift({0, 1, 0}, n), AlgebraError);
    CHECK_THROWS_AS(cycle_lift({0}, n), AlgebraError);
}

TEST_CASE("group law")
{
    const int n = 5;
    const auto a = cycle_lift({1, 2}, n);
    const auto b = cycle_lift({3, 4}, n);
    CHECK(a * b == -(b * a));
    const auto c = cycle_lift({0, 1, 2}, n);
    CHECK(c * LiftedPermutation::identity(n) == c);
    CHECK((c * c.inverse()).is_identity());
    CHECK(power(c, -1) == c.inverse());
    CHECK_THROWS_AS(c * LiftedPermutation::identity(4), AlgebraError);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const int rank = 2 + static_cast<int>(rng() % 5);
        const auto x = random_lift(rng, rank);
        const auto y = random_lift(rng, rank);
        const auto z = random_lift(rng, rank);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * y).base() == x.base() * y.base());
        CHECK((x * x.inverse()).is_identity());
        CHECK((x.inverse() * x).is_identity());
        CHECK(-x * y == -(x * y));
    }
}

TEST_CASE("conjugation by permutations")
{
    const int n = 5;
    CHECK(conjugate_by_permutation(Permutation::cycle(n, {3, 4}), cycle_lift({1, 2}, n)) == -cycle_lift({1, 2}, n));
    CHECK(conjugate_by_permutation(Permutation::identity(n), cycle_lift({1, 2}, n)) == cycle_lift({1, 2}, n));
    CHECK(conjugate_by_permutation(Permutation::cycle(n, {1, 2, 3}), cycle_lift({1, 2}, n)) == cycle_lift({2, 3}, n));
    CHECK_THROWS_AS(conjugate_by_permutation(Permutation::identity(4), cycle_lift({1, 2}, n)), AlgebraError);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        const int rank = 2 + static_cast<int>(rng() % 5);
        const auto g = random_permutation(rng, rank);
        const auto x = random_lift(rng, rank);
        const auto y = random_lift(rng, rank);
        const auto l = canonical_lift(g);
        // Both lifts of g conjugate identically.
        CHECK((-l) * x * (-l).inverse() == conjugate_by_permutation(g, x));
        CHECK(conjugate_by_permutation(g, x * y) == conjugate_by_permutation(g, x) * conjugate_by_permutation(g, y));
        CHECK(conjugate_by_permutation(g, central_minus(rank)) == central_minus(rank));
        CHECK(conjugate_by_permutation(g, x).base() == g * x.base() * g.inverse());
    }
}

TEST_CASE("odd-fix inclusion")
{
    const int n = 6;
    const auto even = cycle_lift({0, 1, 2}, n);
    CHECK(embed_odd_fix(even, 4, 5) == even);
    CHECK(embed_odd_fix(transposition_lift(0, 1, n), 4, 5) == transposition_lift(0, 1, n) * transposition_lift(4, 5, n));
    CHECK_THROWS_AS(embed_odd_fix(even, 2, 5), AlgebraError);
    CHECK_THROWS_AS(embed_odd_fix(even, 5, 5), AlgebraError);

    // Homomorphism on the cover of Sym{0..3} inside rank 6, fixing 4 and 5.
    const auto small = enumerate_cover(4, false);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 500; ++t) {
        const auto x = small[rng() % small.size()].widened(n);
        const auto y = small[rng() % small.size()].widened(n);
        const auto ex = embed_odd_fix(x, 4, 5);
        CHECK(ex.parity() == 0);
        CHECK(embed_odd_fix(x * y, 4, 5) == ex * embed_odd_fix(y, 4, 5));
        const Permutation expected = x.base().parity() == 0 ? x.base() : x.base() * Permutation::transposition(n, 4, 5);
        CHECK(ex.base() == expected);
    }
}

TEST_CASE("canonical lifts")
{
    const int n = 4;
    CHECK(canonical_lift(Permutation::identity(n)).is_identity());
    CHECK(canonical_lift(Permutation{1, 0, 3, 2}) == transposition_lift(0, 1, n) * transposition_lift(2, 3, n));
    CHECK(canonical_lift(Permutation{1, 2, 0, 3}) == cycle_lift({0, 1, 2}, n));
    CHECK(canonical_lift(Permutation{1, 2, 0, 3}).to_string() == "+[0 1 2]");
    CHECK((-canonical_lift(Permutation{1, 2, 0, 3})).to_string() == "-[0 1 2]");
    CHECK(LiftedPermutation::central(n, CentralSign::minus).to_string() == "-1");

    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_permutation(rng, 2 + static_cast<int>(rng() % 6));
        CHECK(canonical_lift(p).base() == p);
        CHECK(canonical_lift(p).parity() == p.parity());
    }
}

TEST_CASE("element orders")
{
    const int n = 5;
    CHECK(element_order(central_minus(n)) == 2);
    CHECK(element_order(cycle_lift({0, 1, 2}, n)) == 6);
    CHECK(element_order(-cycle_lift({0, 1, 2}, n)) == 3);
    const auto five = cycle_lift({0, 1, 2, 3, 4}, n);
    CHECK(std::set<int>{element_order(five), element_order(-five)} == std::set<int>{5, 10});
}

TEST_CASE("cover enumeration")
{
    CHECK(enumerate_cover(4, true).size() == 24);
    CHECK(enumerate_cover(4, false).size() == 48);
    CHECK(enumerate_cover(5, true).size() == 120);
    CHECK(enumerate_cover(3, false).size() == 12);
    CHECK_THROWS_AS(enumerate_cover(7, false), AlgebraError);

    // Projection is onto with kernel exactly {+1, -1}.
    const auto all = enumerate_cover(4, false);
    std::map<Permutation, int> fibre;
    for (const auto& x : all) ++fibre[x.base()];
    CHECK(fibre.size() == 24);
    for (const auto& [p, count] : fibre) CHECK(count == 2);
    int central = 0;
    for (const auto& x : all) central += x.is_central() ? 1 : 0;
    CHECK(central == 2);
}

TEST_CASE("defining relations")
{
    const auto exhaustive = spinlab::testing::exhaustive_relations(5);
    CHECK(exhaustive.failures == 0);
    CHECK(exhaustive.cases > 100000);

    // The k-th power relation only holds up to k = 5 (see the Pin model test
    // below); every other relation holds on the randomized sample.
    const auto randomized = spinlab::testing::random_relations(0x5eed, 10000);
    for (int r = 0; r <= 5; ++r) CHECK(randomized.failures_by_relation[static_cast<std::size_t>(r)] == 0);
    for (const auto& [length, count] : randomized.power_failures_by_length) CHECK(length >= 6);
}

namespace {

using Matrix = std::vector<std::vector<std::complex<double>>>;

Matrix matmul(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix c(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    Matrix c(n * m, std::vector<std::complex<double>>(n * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return c;
}

// Gamma matrices squaring to -1 built from Pauli matrices. Transposition lifts
// (g_a - g_b)/sqrt2 in this Pin model satisfy the same presentation as the
// Clifford-backed lifts, so the scalar k-th powers of cycle lifts must agree.
std::vector<Matrix> gammas(int count)
{
    using C = std::complex<double>;
    const C i(0, 1);
    const Matrix px{{0, 1}, {1, 0}};
    const Matrix py{{0, -i}, {i, 0}};
    const Matrix pz{{1, 0}, {0, -1}};
    const Matrix id{{1, 0}, {0, 1}};
    const int m = (count + 1) / 2;
    std::vector<Matrix> out;
    for (int j = 0; j < m; ++j) {
        for (const Matrix* p : {&px, &py}) {
            Matrix g{{i}};
            for (int t = 0; t < m; ++t) g = kron(g, t < j ? pz : (t == j ? *p : id));
            out.push_back(std::move(g));
        }
    }
    out.resize(static_cast<std::size_t>(count));
    return out;
}

int pin_model_cycle_power_sign(int k)
{
    const auto g = gammas(k);
    Matrix c = g[0];
    for (auto& row : c)
        for (auto& v : row) v = 0;
    for (std::size_t r = 0; r < c.size(); ++r) c[r][r] = 1;
    for (int a = 0; a + 1 < k; ++a) {
        Matrix t = g[static_cast<std::size_t>(a)];
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t s = 0; s < t.size(); ++s)
                t[r][s] = (t[r][s] - g[static_cast<std::size_t>(a + 1)][r][s]) / std::sqrt(2.0);
        c = matmul(c, t);
    }
    Matrix p = c;
    for (int e = 1; e < k; ++e) p = matmul(p, c);
    return p[0][0].real() > 0 ? 1 : -1;
}

} // namespace

TEST_CASE("k-th powers of cycle lifts agree with an independent Pin model")
{
    for (int k = 2; k <= 9; ++k) {
        CAPTURE(k);
        std::vector<int> cyc;
        for (int v = 0; v < k; ++v) cyc.push_back(v);
        const auto p = power(cycle_lift(cyc, k), k);
        REQUIRE(p.is_central());
        CHECK(static_cast<int>(p.central_sign()) == pin_model_cycle_power_sign(k));
    }
}
