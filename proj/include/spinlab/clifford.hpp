#pragma once

#include "spinlab/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spinlab {

/// Element of the real Clifford algebra Cl(0, N) with generators e_0..e_{N-1},
/// e_i^2 = -1 and e_i e_j = -e_j e_i (i != j), coefficients in Z[1/sqrt2].
///
/// A monomial e_{i1} e_{i2} ... (i1 < i2 < ...) is keyed by its bitmask. Terms
/// are kept sorted by mask with no zero coefficients, so structural equality is
/// value equality.
class CliffordElement {
public:
    using Mask = std::uint32_t;
    using Term = std::pair<Mask, DyadicRootTwo>;

    static constexpr int max_rank = 9;

    explicit CliffordElement(int rank = 0);

    static CliffordElement scalar(int rank, const DyadicRootTwo& value);
    static CliffordElement generator(int rank, int index);
    /// (e_a - e_b) / sqrt2, the unit vector whose reflection swaps coordinates a and b.
    static CliffordElement root_vector(int rank, int a, int b);

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the scalar monomial.
    DyadicRootTwo scalar_part() const;
    /// True when every monomial has grade of the given parity.
    bool is_homogeneous_parity(int parity) const;

    CliffordElement operator-() const;
    friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator*(const DyadicRootTwo& s, const CliffordElement& x);

    /// Reversion: grade-g part scaled by (-1)^(g(g-1)/2).
    CliffordElement reverse() const;
    /// Same element viewed in a larger algebra.
    CliffordElement widened(int new_rank) const;

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
    /// Total order on representations, for use as a container key.
    friend bool operator<(const CliffordElement& x, const CliffordElement& y);

    std::string to_string() const;

    /// Sign (+1/-1) of e_A * e_B relative to e_{A xor B}.
    static int blade_sign(Mask a, Mask b);

private:
    CliffordElement(int rank, std::vector<Term> terms) : rank_(rank), terms_(std::move(terms)) {}

    int rank_;
    std::vector<Term> terms_;
};

/// Multiplies, throwing AlgebraError on rank mismatch.
CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y);
CliffordElement clifford_reverse(const CliffordElement& x);

} // namespace spinlab
