#pragma once

/**
 * Quaternion scalars q = w + xi + yj + zk and unit imaginary directions.
 *
 *   i² = j² = k² = ijk = -1,   ij = k,  ji = -k
 *
 * Every slice computation in the library picks a unit imaginary I and works
 * in the plane L_I = R + RI, which is a copy of C.
 */

#include <cmath>
#include <iosfwd>

namespace qhardy {

struct Quaternion {
    double w{0}, x{0}, y{0}, z{0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w{w_} {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w{w_}, x{x_}, y{y_}, z{z_} {}

    constexpr double real() const { return w; }
    constexpr Quaternion imag() const { return {0, x, y, z}; }
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr double imag_norm2() const { return x * x + y * y + z * z; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

inline Quaternion inverse(const Quaternion& q) { return q.conj() / q.norm2(); }

inline constexpr Quaternion kI{0, 1, 0, 0};
inline constexpr Quaternion kJ{0, 0, 1, 0};
inline constexpr Quaternion kK{0, 0, 0, 1};

/// Componentwise comparison with an absolute tolerance.
inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
           std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A purely imaginary quaternion of modulus one; I² = -1.
class UnitImaginary {
public:
    static constexpr double kTolerance = 1e-12;

    /// Throws InvalidArgument unless x²+y²+z² = 1 within kTolerance.
    UnitImaginary(double x, double y, double z);

    /// Rescales (x, y, z) onto the sphere; throws InvalidArgument for the zero vector.
    static UnitImaginary normalized(double x, double y, double z);

    static UnitImaginary i() { return {1, 0, 0}; }
    static UnitImaginary j() { return {0, 1, 0}; }
    static UnitImaginary k() { return {0, 0, 1}; }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    Quaternion quat() const { return {0, x_, y_, z_}; }
    operator Quaternion() const { return quat(); }  // NOLINT

    /// Euclidean dot product of the imaginary parts.
    double dot(const UnitImaginary& o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }

private:
    double x_, y_, z_;
};

/// cos t + sin t · I
Quaternion circle_point(double t, const UnitImaginary& I);

/// Deterministic J ⊥ I: Gram-Schmidt of the first canonical axis that is not
/// nearly parallel to I.
UnitImaginary orthogonal_unit(const UnitImaginary& I);

}  // namespace qhardy
