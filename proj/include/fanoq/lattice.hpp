#pragma once

#include <Eigen/Core>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fanoq/rational.hpp"

namespace fanoq {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec2 = Vector2<Int>;
using Vec3 = Vector3<Int>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;
using Mat3 = Eigen::Matrix<Int, 3, 3>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Raised when a structural identity that should hold by construction fails.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Scalar>
Scalar det2(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
    return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Scalar det3(const Vector3<Scalar>& a, const Vector3<Scalar>& b, const Vector3<Scalar>& c) {
    return a.x() * (b.y() * c.z() - b.z() * c.y()) - a.y() * (b.x() * c.z() - b.z() * c.x()) +
           a.z() * (b.x() * c.y() - b.y() * c.x());
}

template <typename Scalar>
Scalar dot2(const Vector2<Scalar>& m, const Vector2<Scalar>& v) {
    return m.x() * v.x() + m.y() * v.y();
}

inline Int content(const Vec2& v) { return std::gcd(v.x(), v.y()); }
inline Int content(const Vec3& v) { return std::gcd(std::gcd(v.x(), v.y()), v.z()); }

inline bool is_primitive(const Vec2& v) { return content(v) == 1; }
inline bool is_primitive(const Vec3& v) { return content(v) == 1; }

template <typename Vec>
Vec primitive_direction(const Vec& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive direction");
    return (v / g).eval();
}

inline bool lex_less(const Vec2& a, const Vec2& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
}

// g = gcd(a, b) >= 0 together with p*a + q*b = g.
struct ExtendedGcd {
    Int g, p, q;
};
ExtendedGcd extended_gcd(Int a, Int b);

// Basis (as columns) of { w : A*w = 0 } over the integers, via unimodular
// column reduction. Each basis column has positive leading entry.
IntMatrix integer_kernel(const IntMatrix& A);

}  // namespace fanoq
