#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace spinlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[1/sqrt2], stored as (a + b*sqrt2) / 2^k.
///
/// Canonical form: k == 0, or at least one of a, b is odd. Zero is (0, 0, 0).
/// Every value has exactly one canonical representation, so equality is
/// member-wise.
class DyadicRootTwo {
public:
    DyadicRootTwo() = default;
    DyadicRootTwo(std::int64_t integer) : a_(integer) {} // NOLINT(implicit)
    DyadicRootTwo(BigInt a, BigInt b, unsigned k);

    /// mantissa / (sqrt2)^halfpow
    static DyadicRootTwo from_halfpow(const BigInt& mantissa, unsigned halfpow);
    static DyadicRootTwo sqrt2() { return {0, 1, 0}; }
    static DyadicRootTwo inv_sqrt2() { return {0, 1, 1}; }

    const BigInt& rational_part() const { return a_; }
    const BigInt& root_part() const { return b_; }
    unsigned exponent() const { return k_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int sign() const;

    DyadicRootTwo operator-() const { return {-a_, -b_, k_}; }
    friend DyadicRootTwo operator+(const DyadicRootTwo& x, const DyadicRootTwo& y);
    friend DyadicRootTwo operator-(const DyadicRootTwo& x, const DyadicRootTwo& y) { return x + (-y); }
    friend DyadicRootTwo operator*(const DyadicRootTwo& x, const DyadicRootTwo& y);
    /// Throws AlgebraError when y is zero or when the quotient leaves Z[1/sqrt2].
    friend DyadicRootTwo operator/(const DyadicRootTwo& x, const DyadicRootTwo& y);
    DyadicRootTwo& operator+=(const DyadicRootTwo& y) { return *this = *this + y; }
    DyadicRootTwo& operator*=(const DyadicRootTwo& y) { return *this = *this * y; }

    friend bool operator==(const DyadicRootTwo&, const DyadicRootTwo&) = default;

    std::string to_string() const;

private:
    void canonicalize();

    BigInt a_{0};
    BigInt b_{0};
    unsigned k_ = 0;
};

/// Exact element (a + b*sqrt(d)) / c of Q(sqrt d) for a fixed square-free
/// radicand d. Canonical: c > 0 and gcd(a, b, c) == 1.
class QuadraticScalar {
public:
    explicit QuadraticScalar(int radicand = 2) : QuadraticScalar(radicand, 0, 0, 1) {}
    QuadraticScalar(int radicand, BigInt a, BigInt b, BigInt c);

    static QuadraticScalar integer(int radicand, std::int64_t value) { return {radicand, value, 0, 1}; }

    int radicand() const { return d_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Image under sqrt(d) -> -sqrt(d).
    QuadraticScalar galois_conjugate() const { return {d_, a_, -b_, c_}; }

    QuadraticScalar operator-() const { return {d_, -a_, -b_, c_}; }
    friend QuadraticScalar operator+(const QuadraticScalar& x, const QuadraticScalar& y);
    friend QuadraticScalar operator-(const QuadraticScalar& x, const QuadraticScalar& y) { return x + (-y); }
    friend QuadraticScalar operator*(const QuadraticScalar& x, const QuadraticScalar& y);
    friend QuadraticScalar operator/(const QuadraticScalar& x, const QuadraticScalar& y);
    QuadraticScalar& operator+=(const QuadraticScalar& y) { return *this = *this + y; }

    friend bool operator==(const QuadraticScalar&, const QuadraticScalar&) = default;
    friend std::strong_ordering operator<=>(const QuadraticScalar& x, const QuadraticScalar& y);

    std::string to_string() const;

private:
    void canonicalize();

    int d_;
    BigInt a_, b_, c_;
};

} // namespace spinlab
