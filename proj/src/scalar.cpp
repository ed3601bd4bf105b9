#include "spinlab/scalar.hpp"

#include "spinlab/errors.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <sstream>

namespace spinlab {

namespace {

// Sign of a + b*sqrt(d) for d > 0.
int root_sign(const BigInt& a, const BigInt& b, int d)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const BigInt lhs = a * a;
    const BigInt rhs = BigInt(d) * b * b;
    if (lhs == rhs) return 0; // unreachable for square-free d, kept for safety of the compare
    return lhs > rhs ? sa : sb;
}

} // namespace

DyadicRootTwo::DyadicRootTwo(BigInt a, BigInt b, unsigned k) : a_(std::move(a)), b_(std::move(b)), k_(k)
{
    canonicalize();
}

DyadicRootTwo DyadicRootTwo::from_halfpow(const BigInt& mantissa, unsigned halfpow)
{
    // m / sqrt2^(2j) = m / 2^j ;  m / sqrt2^(2j+1) = m*sqrt2 / 2^(j+1)
    if (halfpow % 2 == 0) return {mantissa, 0, halfpow / 2};
    return {0, mantissa, halfpow / 2 + 1};
}

void DyadicRootTwo::canonicalize()
{
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && !boost::multiprecision::bit_test(a_, 0) && !boost::multiprecision::bit_test(b_, 0)) {
        a_ >>= 1;
        b_ >>= 1;
        --k_;
    }
}

int DyadicRootTwo::sign() const
{
    return root_sign(a_, b_, 2);
}

DyadicRootTwo operator+(const DyadicRootTwo& x, const DyadicRootTwo& y)
{
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.k_ == y.k_) return {x.a_ + y.a_, x.b_ + y.b_, x.k_};
    if (x.k_ < y.k_) {
        const unsigned s = y.k_ - x.k_;
        return {(x.a_ << s) + y.a_, (x.b_ << s) + y.b_, y.k_};
    }
    const unsigned s = x.k_ - y.k_;
    return {x.a_ + (y.a_ << s), x.b_ + (y.b_ << s), x.k_};
}

DyadicRootTwo operator*(const DyadicRootTwo& x, const DyadicRootTwo& y)
{
    if (x.is_zero() || y.is_zero()) return {};
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.k_ + y.k_};
}

DyadicRootTwo operator/(const DyadicRootTwo& x, const DyadicRootTwo& y)
{
    if (y.is_zero()) throw AlgebraError("DyadicRootTwo: division by zero");
    // 1/y = 2^k (a - b sqrt2) / (a^2 - 2 b^2)
    BigInt norm = y.a_ * y.a_ - 2 * y.b_ * y.b_;
    BigInt p = x.a_ * y.a_ - 2 * x.b_ * y.b_;
    BigInt q = x.b_ * y.a_ - x.a_ * y.b_;
    unsigned shift_up = y.k_;
    if (norm < 0) {
        norm = -norm;
        p = -p;
        q = -q;
    }
    unsigned twos = 0;
    while (!boost::multiprecision::bit_test(norm, 0)) {
        norm >>= 1;
        ++twos;
    }
    if (norm != 1) {
        if (p % norm != 0 || q % norm != 0) throw AlgebraError("DyadicRootTwo: quotient is not in Z[1/sqrt2]");
        p /= norm;
        q /= norm;
    }
    // value = (p + q sqrt2) * 2^shift_up / 2^(x.k + twos)
    const unsigned down = x.k_ + twos;
    if (shift_up >= down) return {p << (shift_up - down), q << (shift_up - down), 0};
    return {p << shift_up, q << shift_up, down};
}

std::string DyadicRootTwo::to_string() const
{
    std::ostringstream out;
    out << "(" << a_ << (b_.sign() < 0 ? "-" : "+") << boost::multiprecision::abs(b_) << "r2)";
    if (k_ > 0) out << "/2^" << k_;
    return out.str();
}

QuadraticScalar::QuadraticScalar(int radicand, BigInt a, BigInt b, BigInt c)
    : d_(radicand), a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
    if (d_ <= 1) throw AlgebraError("QuadraticScalar: radicand must be square-free and > 1");
    if (c_.is_zero()) throw AlgebraError("QuadraticScalar: zero denominator");
    canonicalize();
}

void QuadraticScalar::canonicalize()
{
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (is_zero()) {
        c_ = 1;
        return;
    }
    BigInt g = gcd(gcd(boost::multiprecision::abs(a_), boost::multiprecision::abs(b_)), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

namespace {
void require_same(const QuadraticScalar& x, const QuadraticScalar& y)
{
    if (x.radicand() != y.radicand()) throw AlgebraError("QuadraticScalar: mixed radicands");
}
} // namespace

QuadraticScalar operator+(const QuadraticScalar& x, const QuadraticScalar& y)
{
    require_same(x, y);
    return {x.d_, x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_};
}

QuadraticScalar operator*(const QuadraticScalar& x, const QuadraticScalar& y)
{
    require_same(x, y);
    return {x.d_, x.a_ * y.a_ + x.d_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_};
}

QuadraticScalar operator/(const QuadraticScalar& x, const QuadraticScalar& y)
{
    require_same(x, y);
    if (y.is_zero()) throw AlgebraError("QuadraticScalar: division by zero");
    // (xa + xb r)/xc * yc/(ya + yb r) = (xa + xb r)(ya - yb r) yc / (xc (ya^2 - d yb^2))
    const BigInt norm = y.a_ * y.a_ - y.d_ * y.b_ * y.b_;
    return {x.d_, (x.a_ * y.a_ - x.d_ * x.b_ * y.b_) * y.c_, (x.b_ * y.a_ - x.a_ * y.b_) * y.c_, x.c_ * norm};
}

std::strong_ordering operator<=>(const QuadraticScalar& x, const QuadraticScalar& y)
{
    require_same(x, y);
    const QuadraticScalar diff = x - y;
    const int s = root_sign(diff.a_, diff.b_, diff.d_);
    return s <=> 0;
}

std::string QuadraticScalar::to_string() const
{
    std::ostringstream out;
    out << "(" << a_ << (b_.sign() < 0 ? "-" : "+") << boost::multiprecision::abs(b_) << "r" << d_ << ")";
    if (c_ != 1) out << "/" << c_;
    return out.str();
}

} // namespace spinlab
