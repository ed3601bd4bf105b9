#pragma once

#include "spinlab/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace spinlab {

using Integer = boost::multiprecision::cpp_int;
/// One entry per coordinate, each 0 or 1.
using BitVector = std::vector<std::uint8_t>;
using IntVector = std::vector<Integer>;

/// Dense matrix over GF(2) with bit-packed rows.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    static GF2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    BitVector row(std::size_t r) const;
    /// Row r += row s.
    void add_row(std::size_t r, std::size_t s);
    void swap_rows(std::size_t r, std::size_t s);

    BitVector apply(const BitVector& x) const;
    GF2Matrix transpose() const;
    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(const GF2Matrix& a);
/// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<BitVector> gf2_nullspace(const GF2Matrix& a);

struct GF2Solution {
    bool feasible = false;
    BitVector particular;
    std::vector<BitVector> nullspace;
    /// Infeasible only: y with y^T a = 0 and y^T b = 1.
    BitVector certificate;
};

/// Affine solution set of a x = b. Throws AlgebraError on a shape mismatch.
GF2Solution gf2_solve(const GF2Matrix& a, const BitVector& b);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> entries);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector apply(const IntVector& x) const;
    IntMatrix transpose() const;
    GF2Matrix mod2() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// u * a * v = d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    /// The nonzero diagonal entries, all positive.
    std::vector<Integer> invariants;
    IntMatrix u_inverse;
    IntMatrix v_inverse;
    std::size_t rank() const { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

struct IntSolution {
    bool feasible = false;
    IntVector particular;
    /// Lattice basis of the integer kernel.
    std::vector<IntVector> nullspace;
};

/// Integer solutions of a x = b.
IntSolution int_solve(const IntMatrix& a, const IntVector& b);

enum class Coefficients { Integers, GF2 };

struct CohomologyGroup {
    std::size_t free_rank = 0;
    /// Invariant factors >= 2, each dividing the next.
    std::vector<Integer> torsion;
    /// Cocycles representing a basis of the free part, then one per torsion
    /// coefficient (in the same order).
    std::vector<IntVector> free_generators;
    std::vector<IntVector> torsion_generators;
};

/// Cohomology at the middle of C^{k-1} --d_prev--> C^k --d_next--> C^{k+1}.
/// Matrices act on column vectors: d_prev is dim C^k x dim C^{k-1}. Throws
/// AlgebraError if d_next * d_prev != 0 in the chosen coefficients.
CohomologyGroup cohomology(const IntMatrix& d_prev, const IntMatrix& d_next, Coefficients coefficients);

struct BocksteinResult {
    /// (d lift) / 2 where lift is the 0/1 integer lift of w2.
    IntVector representative;
    BitVector representative_mod2;
    /// True iff the representative is an integral coboundary, i.e. w2 is the
    /// reduction of an integral cocycle.
    bool zero = false;
    /// When zero: an integral cocycle reducing to w2.
    IntVector integral_lift;
    /// Whether the mod-2 reduction of the representative is a mod-2 coboundary.
    bool mod2_coboundary = false;
};

/// Throws AlgebraError if w2 is not a mod-2 cocycle of d2.
BocksteinResult bockstein_w3(const BitVector& w2, const IntMatrix& d2);

/// The cellular cochain complex of the dual decomposition: cochains of
/// degree k live on dual k-cells, i.e. simplices, facet classes, codim-2
/// circuits and codim-3 links.
struct DualCochains {
    IntMatrix d0;
    IntMatrix d1;
    IntMatrix d2;
};

DualCochains dual_cochains(const DualSkeleton& skeleton);

} // namespace spinlab
