#pragma once

#include "spinlab/clifford.hpp"
#include "spinlab/permutation.hpp"

#include <string>
#include <vector>

namespace spinlab {

/// Element of the kernel {+1, -1} of the double covers below.
enum class CentralSign : int { plus = 1, minus = -1 };

inline CentralSign operator*(CentralSign a, CentralSign b)
{
    return static_cast<CentralSign>(static_cast<int>(a) * static_cast<int>(b));
}

/// Element of the double cover of the symmetric group on N letters in which
/// transposition lifts square to -1, realised inside Spin(N).
///
/// The transposition lift [a b] is u_ab * d, where u_ab = (e_a - e_b)/sqrt2 and
/// d is the unit diagonal vector. d anticommutes with every u_ab and squares to
/// -1, so a word in transposition lifts reduces to s * d^p with s a product of
/// root vectors. We store the projection, p, and s. With this normal form the
/// group law is simply (s1, p1)(s2, p2) = (s1 s2, p1 xor p2).
class LiftedPermutation {
public:
    explicit LiftedPermutation(int rank = 1);

    static LiftedPermutation identity(int rank) { return LiftedPermutation(rank); }
    static LiftedPermutation central(int rank, CentralSign sign);

    int rank() const { return base_.size(); }
    const Permutation& base() const { return base_; }
    int parity() const { return parity_; }
    const CliffordElement& spinor() const { return spinor_; }

    bool is_identity() const;
    /// True for +1 or -1.
    bool is_central() const;
    /// For central elements, which one; throws AlgebraError otherwise.
    CentralSign central_sign() const;

    LiftedPermutation inverse() const;
    LiftedPermutation operator-() const;
    LiftedPermutation widened(int rank) const;

    friend LiftedPermutation operator*(const LiftedPermutation& x, const LiftedPermutation& y);
    friend LiftedPermutation operator*(CentralSign s, const LiftedPermutation& x);

    friend bool operator==(const LiftedPermutation&, const LiftedPermutation&) = default;
    friend bool operator<(const LiftedPermutation& x, const LiftedPermutation& y);

    /// "+[0 1 2][3 4]" style, relative to the canonical lift of the projection.
    std::string to_string() const;

private:
    LiftedPermutation(Permutation base, int parity, CliffordElement spinor)
        : base_(std::move(base)), parity_(parity), spinor_(std::move(spinor)) {}

    friend LiftedPermutation transposition_lift(int a, int b, int rank);

    Permutation base_;
    int parity_ = 0;
    CliffordElement spinor_;
};

/// The distinguished lift [a b].
LiftedPermutation transposition_lift(int a, int b, int rank);
/// [a1 ... ak] = [a1 a2][a2 a3]...[a_{k-1} a_k].
LiftedPermutation cycle_lift(const std::vector<int>& elements, int rank);
LiftedPermutation group_mul(const LiftedPermutation& x, const LiftedPermutation& y);
LiftedPermutation power(const LiftedPermutation& x, int exponent);
/// Product of cycle lifts of the disjoint cycles of p, smallest element first
/// within each cycle, cycles ordered by smallest element. Memoised.
LiftedPermutation canonical_lift(const Permutation& p);
/// x^g = L x L^-1 with L either lift of g (the result does not depend on which).
LiftedPermutation conjugate_by_permutation(const Permutation& g, const LiftedPermutation& x);
/// Inclusion of a cover into the even subgroup of the cover on the same letters:
/// x if x is even, x[i j] if x is odd. x must fix i and j.
LiftedPermutation embed_odd_fix(const LiftedPermutation& x, int i, int j);
/// Least m >= 1 with x^m = +1.
int element_order(const LiftedPermutation& x);
/// All elements of the cover of Sym(N) (2 N! elements), or of the even
/// subgroup (N! elements). Requires 2 <= N <= 6.
std::vector<LiftedPermutation> enumerate_cover(int rank, bool even_only);

/// The sign relating x to the canonical lift of its projection.
CentralSign sign_relative_to_canonical(const LiftedPermutation& x);

} // namespace spinlab
