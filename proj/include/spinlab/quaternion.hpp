#pragma once

#include "spinlab/scalar.hpp"

#include <string>

namespace spinlab {

/// Hamilton quaternion r + x i + y j + z k with exact coefficients in Q(sqrt d).
class Quaternion {
public:
    explicit Quaternion(int radicand = 2);
    Quaternion(QuadraticScalar r, QuadraticScalar x, QuadraticScalar y, QuadraticScalar z);

    static Quaternion one(int radicand) { return unit(radicand, 0); }
    /// 0 -> 1, 1 -> i, 2 -> j, 3 -> k
    static Quaternion unit(int radicand, int axis);

    int radicand() const { return r_.radicand(); }
    const QuadraticScalar& r() const { return r_; }
    const QuadraticScalar& x() const { return x_; }
    const QuadraticScalar& y() const { return y_; }
    const QuadraticScalar& z() const { return z_; }
    const QuadraticScalar& component(int axis) const;

    QuadraticScalar norm() const; // r^2 + x^2 + y^2 + z^2
    Quaternion conjugate() const { return {r_, -x_, -y_, -z_}; }
    Quaternion inverse() const;
    Quaternion galois_conjugate() const;

    Quaternion operator-() const { return {-r_, -x_, -y_, -z_}; }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
    friend Quaternion operator*(const QuadraticScalar& s, const Quaternion& q);

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    friend bool operator<(const Quaternion& p, const Quaternion& q);

    std::string to_string() const;

private:
    QuadraticScalar r_, x_, y_, z_;
};

/// Hamilton product; throws AlgebraError on radicand mismatch.
Quaternion quaternion_product(const Quaternion& p, const Quaternion& q);

} // namespace spinlab
