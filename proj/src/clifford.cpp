#include "spinlab/clifford.hpp"

#include "spinlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <tuple>

namespace spinlab {

namespace {

void check_rank(int rank)
{
    if (rank < 0 || rank > CliffordElement::max_rank) throw AlgebraError("CliffordElement: rank out of range");
}

} // namespace

int CliffordElement::blade_sign(Mask a, Mask b)
{
    // Moving each generator of b leftwards past the generators of a with a
    // larger index costs one swap each; every shared generator squares to -1.
    int swaps = 0;
    for (Mask rest = b; rest != 0; rest &= rest - 1) {
        const int idx = std::countr_zero(rest);
        swaps += std::popcount(a >> (idx + 1));
    }
    swaps += std::popcount(a & b);
    return (swaps % 2 == 0) ? 1 : -1;
}

CliffordElement::CliffordElement(int rank) : rank_(rank)
{
    check_rank(rank);
}

CliffordElement CliffordElement::scalar(int rank, const DyadicRootTwo& value)
{
    check_rank(rank);
    if (value.is_zero()) return CliffordElement(rank);
    return {rank, {{0u, value}}};
}

CliffordElement CliffordElement::generator(int rank, int index)
{
    check_rank(rank);
    if (index < 0 || index >= rank) throw AlgebraError("CliffordElement: generator index out of range");
    return {rank, {{Mask{1} << index, DyadicRootTwo(1)}}};
}

CliffordElement CliffordElement::root_vector(int rank, int a, int b)
{
    if (a == b) throw AlgebraError("CliffordElement: root vector needs distinct indices");
    const DyadicRootTwo h = DyadicRootTwo::inv_sqrt2();
    return h * (generator(rank, a) + (-generator(rank, b)));
}

DyadicRootTwo CliffordElement::scalar_part() const
{
    if (!terms_.empty() && terms_.front().first == 0) return terms_.front().second;
    return {};
}

bool CliffordElement::is_homogeneous_parity(int parity) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [parity](const Term& t) { return std::popcount(t.first) % 2 == parity; });
}

CliffordElement CliffordElement::operator-() const
{
    std::vector<Term> out = terms_;
    for (auto& t : out) t.second = -t.second;
    return {rank_, std::move(out)};
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y)
{
    if (x.rank_ != y.rank_) throw AlgebraError("CliffordElement: rank mismatch");
    std::vector<CliffordElement::Term> out;
    out.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
        if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            DyadicRootTwo s = i->second + j->second;
            if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return {x.rank_, std::move(out)};
}

namespace {

// Coefficients are brought to the common denominator 2^K before accumulation,
// so each output blade is canonicalised once. When every numerator is small
// the accumulation runs in 128-bit integers.
constexpr unsigned small_bits = 28;

bool fits_small(const BigInt& v)
{
    static const BigInt bound = BigInt(1) << small_bits;
    return v < bound && -v < bound;
}

BigInt from_i128(__int128 v)
{
    if (v >= INT64_MIN && v <= INT64_MAX) return BigInt(static_cast<std::int64_t>(v));
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
}

} // namespace

CliffordElement operator*(const CliffordElement& x, const CliffordElement& y)
{
    if (x.rank_ != y.rank_) throw AlgebraError("CliffordElement: rank mismatch");
    if (x.is_zero() || y.is_zero()) return CliffordElement(x.rank_);
    unsigned kx = 0;
    unsigned ky = 0;
    bool small = true;
    for (const auto& t : x.terms_) {
        kx = std::max(kx, t.second.exponent());
        small = small && fits_small(t.second.rational_part()) && fits_small(t.second.root_part());
    }
    for (const auto& t : y.terms_) {
        ky = std::max(ky, t.second.exponent());
        small = small && fits_small(t.second.rational_part()) && fits_small(t.second.root_part());
    }
    const unsigned top = kx + ky;
    // Products are below 2^(2*small_bits + 2); at most 2^9 * 2^9 summands.
    small = small && top + 2 * small_bits + 2 + 18 < 126;
    const std::size_t size = std::size_t{1} << x.rank_;
    std::vector<bool> touched(size, false);
    std::vector<CliffordElement::Term> out;

    if (small) {
        std::vector<__int128> ra(size, 0);
        std::vector<__int128> rb(size, 0);
        for (const auto& [ma, ca] : x.terms_) {
            const auto a1 = static_cast<__int128>(static_cast<std::int64_t>(ca.rational_part()));
            const auto b1 = static_cast<__int128>(static_cast<std::int64_t>(ca.root_part()));
            for (const auto& [mb, cb] : y.terms_) {
                const auto a2 = static_cast<__int128>(static_cast<std::int64_t>(cb.rational_part()));
                const auto b2 = static_cast<__int128>(static_cast<std::int64_t>(cb.root_part()));
                const unsigned shift = top - ca.exponent() - cb.exponent();
                __int128 pa = (a1 * a2 + 2 * b1 * b2) << shift;
                __int128 pb = (a1 * b2 + b1 * a2) << shift;
                if (CliffordElement::blade_sign(ma, mb) < 0) {
                    pa = -pa;
                    pb = -pb;
                }
                const auto m = ma ^ mb;
                ra[m] += pa;
                rb[m] += pb;
                touched[m] = true;
            }
        }
        for (std::size_t m = 0; m < size; ++m) {
            if (!touched[m] || (ra[m] == 0 && rb[m] == 0)) continue;
            __int128 a = ra[m];
            __int128 b = rb[m];
            unsigned k = top;
            while (k > 0 && (a & 1) == 0 && (b & 1) == 0) {
                a >>= 1;
                b >>= 1;
                --k;
            }
            out.emplace_back(static_cast<CliffordElement::Mask>(m), DyadicRootTwo(from_i128(a), from_i128(b), k));
        }
        return {x.rank_, std::move(out)};
    }

    std::vector<BigInt> ra(size);
    std::vector<BigInt> rb(size);
    for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
            const unsigned shift = top - ca.exponent() - cb.exponent();
            BigInt pa = ca.rational_part() * cb.rational_part() + 2 * ca.root_part() * cb.root_part();
            BigInt pb = ca.rational_part() * cb.root_part() + ca.root_part() * cb.rational_part();
            pa <<= shift;
            pb <<= shift;
            const auto m = ma ^ mb;
            if (CliffordElement::blade_sign(ma, mb) < 0) {
                ra[m] -= pa;
                rb[m] -= pb;
            } else {
                ra[m] += pa;
                rb[m] += pb;
            }
            touched[m] = true;
        }
    }
    for (std::size_t m = 0; m < size; ++m) {
        if (!touched[m] || (ra[m].is_zero() && rb[m].is_zero())) continue;
        out.emplace_back(static_cast<CliffordElement::Mask>(m), DyadicRootTwo(std::move(ra[m]), std::move(rb[m]), top));
    }
    return {x.rank_, std::move(out)};
}

CliffordElement operator*(const DyadicRootTwo& s, const CliffordElement& x)
{
    if (s.is_zero()) return CliffordElement(x.rank_);
    std::vector<CliffordElement::Term> out = x.terms_;
    for (auto& t : out) t.second = s * t.second;
    return {x.rank_, std::move(out)};
}

CliffordElement CliffordElement::reverse() const
{
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        const int g = std::popcount(t.first);
        if ((g * (g - 1) / 2) % 2 == 1) t.second = -t.second;
    }
    return {rank_, std::move(out)};
}

CliffordElement CliffordElement::widened(int new_rank) const
{
    check_rank(new_rank);
    if (new_rank < rank_) throw AlgebraError("CliffordElement: cannot narrow");
    return {new_rank, terms_};
}

bool operator<(const CliffordElement& x, const CliffordElement& y)
{
    if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
    const auto key = [](const CliffordElement::Term& t) {
        return std::tie(t.first, t.second.rational_part(), t.second.root_part());
    };
    const std::size_t n = std::min(x.terms_.size(), y.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& tx = x.terms_[i];
        const auto& ty = y.terms_[i];
        if (key(tx) != key(ty)) return key(tx) < key(ty);
        if (tx.second.exponent() != ty.second.exponent()) return tx.second.exponent() < ty.second.exponent();
    }
    return x.terms_.size() < y.terms_.size();
}

std::string CliffordElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.to_string();
        for (int i = 0; i < rank_; ++i) {
            if (m & (Mask{1} << i)) out << "e" << i;
        }
    }
    return out.str();
}

CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y)
{
    return x * y;
}

CliffordElement clifford_reverse(const CliffordElement& x)
{
    return x.reverse();
}

} // namespace spinlab
