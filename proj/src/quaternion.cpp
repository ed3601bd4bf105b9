#include "spinlab/quaternion.hpp"

#include "spinlab/errors.hpp"

#include <tuple>

namespace spinlab {

Quaternion::Quaternion(int radicand)
    : r_(radicand), x_(radicand), y_(radicand), z_(radicand)
{
}

Quaternion::Quaternion(QuadraticScalar r, QuadraticScalar x, QuadraticScalar y, QuadraticScalar z)
    : r_(std::move(r)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z))
{
    const int d = r_.radicand();
    if (x_.radicand() != d || y_.radicand() != d || z_.radicand() != d)
        throw AlgebraError("Quaternion: components over different radicands");
}

Quaternion Quaternion::unit(int radicand, int axis)
{
    Quaternion q(radicand);
    const auto one = QuadraticScalar::integer(radicand, 1);
    switch (axis) {
    case 0: q.r_ = one; break;
    case 1: q.x_ = one; break;
    case 2: q.y_ = one; break;
    case 3: q.z_ = one; break;
    default: throw AlgebraError("Quaternion: axis out of range");
    }
    return q;
}

const QuadraticScalar& Quaternion::component(int axis) const
{
    switch (axis) {
    case 0: return r_;
    case 1: return x_;
    case 2: return y_;
    case 3: return z_;
    default: throw AlgebraError("Quaternion: axis out of range");
    }
}

QuadraticScalar Quaternion::norm() const
{
    return r_ * r_ + x_ * x_ + y_ * y_ + z_ * z_;
}

Quaternion Quaternion::inverse() const
{
    const QuadraticScalar n = norm();
    return {r_ / n, -x_ / n, -y_ / n, -z_ / n};
}

Quaternion Quaternion::galois_conjugate() const
{
    return {r_.galois_conjugate(), x_.galois_conjugate(), y_.galois_conjugate(), z_.galois_conjugate()};
}

Quaternion operator+(const Quaternion& p, const Quaternion& q)
{
    return {p.r_ + q.r_, p.x_ + q.x_, p.y_ + q.y_, p.z_ + q.z_};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q)
{
    if (p.radicand() != q.radicand()) throw AlgebraError("Quaternion: radicand mismatch");
    return {p.r_ * q.r_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_,
            p.r_ * q.x_ + p.x_ * q.r_ + p.y_ * q.z_ - p.z_ * q.y_,
            p.r_ * q.y_ - p.x_ * q.z_ + p.y_ * q.r_ + p.z_ * q.x_,
            p.r_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.r_};
}

Quaternion operator*(const QuadraticScalar& s, const Quaternion& q)
{
    return {s * q.r_, s * q.x_, s * q.y_, s * q.z_};
}

bool operator<(const Quaternion& p, const Quaternion& q)
{
    for (int axis = 0; axis < 4; ++axis) {
        const auto& a = p.component(axis);
        const auto& b = q.component(axis);
        if (a == b) continue;
        return std::tie(a.a(), a.b(), a.c()) < std::tie(b.a(), b.b(), b.c());
    }
    return false;
}

std::string Quaternion::to_string() const
{
    return r_.to_string() + " + " + x_.to_string() + "i + " + y_.to_string() + "j + " + z_.to_string() + "k";
}

Quaternion quaternion_product(const Quaternion& p, const Quaternion& q)
{
    return p * q;
}

} // namespace spinlab
