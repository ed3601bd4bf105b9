#include "spinlab/binary_group.hpp"

#include "spinlab/errors.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace spinlab {

LiftedPermutation::LiftedPermutation(int rank)
    : base_(Permutation::identity(rank)), parity_(0), spinor_(CliffordElement::scalar(rank, 1))
{
}

LiftedPermutation LiftedPermutation::central(int rank, CentralSign sign)
{
    LiftedPermutation x(rank);
    if (sign == CentralSign::minus) x.spinor_ = -x.spinor_;
    return x;
}

bool LiftedPermutation::is_identity() const
{
    return *this == identity(rank());
}

bool LiftedPermutation::is_central() const
{
    return base_.is_identity();
}

CentralSign LiftedPermutation::central_sign() const
{
    if (!is_central()) throw AlgebraError("LiftedPermutation: element is not central");
    return spinor_ == CliffordElement::scalar(rank(), 1) ? CentralSign::plus : CentralSign::minus;
}

LiftedPermutation LiftedPermutation::inverse() const
{
    // s is a product of m unit vectors with m = parity (mod 2); s^-1 = rev(s)
    // for even m. For odd m, (s d)^-1 = d^-1 s^-1 = -rev(s) d.
    CliffordElement s = spinor_.reverse();
    if (parity_ == 1) s = -s;
    return {base_.inverse(), parity_, std::move(s)};
}

LiftedPermutation LiftedPermutation::operator-() const
{
    return {base_, parity_, -spinor_};
}

LiftedPermutation LiftedPermutation::widened(int rank) const
{
    return {base_.widened(rank), parity_, spinor_.widened(rank)};
}

LiftedPermutation operator*(const LiftedPermutation& x, const LiftedPermutation& y)
{
    if (x.rank() != y.rank()) throw AlgebraError("LiftedPermutation: rank mismatch");
    return {x.base_ * y.base_, x.parity_ ^ y.parity_, x.spinor_ * y.spinor_};
}

LiftedPermutation operator*(CentralSign s, const LiftedPermutation& x)
{
    return s == CentralSign::plus ? x : -x;
}

bool operator<(const LiftedPermutation& x, const LiftedPermutation& y)
{
    if (x.base_ != y.base_) return x.base_ < y.base_;
    if (x.parity_ != y.parity_) return x.parity_ < y.parity_;
    return x.spinor_ < y.spinor_;
}

std::string LiftedPermutation::to_string() const
{
    std::ostringstream out;
    out << (sign_relative_to_canonical(*this) == CentralSign::plus ? "+" : "-");
    const auto cs = base_.cycles();
    if (cs.empty()) out << "1";
    for (const auto& c : cs) {
        out << "[";
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << "]";
    }
    return out.str();
}

LiftedPermutation transposition_lift(int a, int b, int rank)
{
    if (a == b) throw AlgebraError("transposition_lift: a == b");
    if (a < 0 || b < 0 || a >= rank || b >= rank) throw AlgebraError("transposition_lift: index out of range");
    return {Permutation::transposition(rank, a, b), 1, CliffordElement::root_vector(rank, a, b)};
}

LiftedPermutation cycle_lift(const std::vector<int>& elements, int rank)
{
    if (elements.size() < 2) throw AlgebraError("cycle_lift: need at least two elements");
    // Validates distinctness and range.
    (void)Permutation::cycle(rank, elements);
    LiftedPermutation out = LiftedPermutation::identity(rank);
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) out = out * transposition_lift(elements[i], elements[i + 1], rank);
    return out;
}

LiftedPermutation group_mul(const LiftedPermutation& x, const LiftedPermutation& y)
{
    return x * y;
}

LiftedPermutation power(const LiftedPermutation& x, int exponent)
{
    LiftedPermutation base = exponent < 0 ? x.inverse() : x;
    LiftedPermutation out = LiftedPermutation::identity(x.rank());
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
    return out;
}

LiftedPermutation canonical_lift(const Permutation& p)
{
    static std::mutex mutex;
    static std::map<Permutation, LiftedPermutation> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(p); it != cache.end()) return it->second;
    }
    LiftedPermutation out = LiftedPermutation::identity(p.size());
    for (const auto& c : p.cycles()) out = out * cycle_lift(c, p.size());
    std::lock_guard lock(mutex);
    cache.emplace(p, out);
    return out;
}

CentralSign sign_relative_to_canonical(const LiftedPermutation& x)
{
    return x == canonical_lift(x.base()) ? CentralSign::plus : CentralSign::minus;
}

LiftedPermutation conjugate_by_permutation(const Permutation& g, const LiftedPermutation& x)
{
    if (g.size() != x.rank()) throw AlgebraError("conjugate_by_permutation: rank mismatch");
    const LiftedPermutation l = canonical_lift(g);
    return l * x * l.inverse();
}

LiftedPermutation embed_odd_fix(const LiftedPermutation& x, int i, int j)
{
    if (i == j) throw AlgebraError("embed_odd_fix: marked points must differ");
    if (x.base()(i) != i || x.base()(j) != j) throw AlgebraError("embed_odd_fix: element moves a marked point");
    if (x.parity() == 0) return x;
    return x * transposition_lift(i, j, x.rank());
}

int element_order(const LiftedPermutation& x)
{
    LiftedPermutation acc = x;
    int m = 1;
    while (!acc.is_identity()) {
        acc = acc * x;
        ++m;
    }
    return m;
}

std::vector<LiftedPermutation> enumerate_cover(int rank, bool even_only)
{
    if (rank < 2 || rank > 6) throw AlgebraError("enumerate_cover: rank must be in [2, 6]");
    std::vector<LiftedPermutation> gens{LiftedPermutation::central(rank, CentralSign::minus)};
    for (int a = 0; a + 1 < rank; ++a) {
        if (!even_only) gens.push_back(transposition_lift(a, a + 1, rank));
        else if (a + 2 < rank) gens.push_back(cycle_lift({a, a + 1, a + 2}, rank));
    }
    std::set<LiftedPermutation> seen{LiftedPermutation::identity(rank)};
    std::vector<LiftedPermutation> out{LiftedPermutation::identity(rank)};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            LiftedPermutation y = out[head] * g;
            if (seen.insert(y).second) out.push_back(std::move(y));
        }
    }
    return out;
}

} // namespace spinlab
