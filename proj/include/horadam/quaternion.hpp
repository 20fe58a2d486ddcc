#pragma once

#include <string>
#include <utility>

#include "horadam/errors.hpp"
#include "horadam/quad_ext.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// Quaternion w + x i + y j + z k over an exact commutative scalar ring
/// (Rational or QuadExt). The Hamilton product is not commutative; scalars
/// are central, so scaling from either side agrees.
template <typename Scalar>
class Quaternion {
public:
    Quaternion(Scalar w, Scalar x, Scalar y, Scalar z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    const Scalar& w() const { return w_; }
    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    const Scalar& z() const { return z_; }

    Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
                a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
                a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
                a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
    }
    friend Quaternion operator*(const Quaternion& a, const Scalar& s) {
        return {a.w_ * s, a.x_ * s, a.y_ * s, a.z_ * s};
    }
    friend Quaternion operator*(const Scalar& s, const Quaternion& a) { return a * s; }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }

    /// Canonical text form "(w, x, y, z)".
    std::string to_string() const {
        return "(" + w_.to_string() + ", " + x_.to_string() + ", " + y_.to_string() + ", " +
               z_.to_string() + ")";
    }

private:
    Scalar w_, x_, y_, z_;
};

template <typename Scalar>
Quaternion<Scalar> conj(const Quaternion<Scalar>& q) {
    return {q.w(), -q.x(), -q.y(), -q.z()};
}

/// Squared modulus w^2 + x^2 + y^2 + z^2, i.e. the scalar part of q*conj(q).
/// The square root is never taken; it is irrational in general.
template <typename Scalar>
Scalar norm(const Quaternion<Scalar>& q) {
    return q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z();
}

template <typename Scalar>
Quaternion<Scalar> inverse(const Quaternion<Scalar>& q) {
    try {
        return conj(q) * inverse(norm(q));
    } catch (const DivisionByZero&) {
        throw NonInvertible();
    } catch (const ZeroDivisorInverse&) {
        throw NonInvertible();
    }
}

inline Quaternion<QuadExt> embed(const Quaternion<Rational>& q, const BigInt& disc) {
    return {QuadExt::embed(q.w(), disc), QuadExt::embed(q.x(), disc),
            QuadExt::embed(q.y(), disc), QuadExt::embed(q.z(), disc)};
}

/// Componentwise extraction; throws NotRational if any surd survives, which
/// for the closed-form identities would indicate an implementation bug.
inline Quaternion<Rational> to_rational(const Quaternion<QuadExt>& q) {
    return {to_rational(q.w()), to_rational(q.x()), to_rational(q.y()), to_rational(q.z())};
}

}  // namespace horadam
