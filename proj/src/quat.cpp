#include "qhardy/quat.hpp"

#include <array>
#include <ostream>

#include "qhardy/error.hpp"

namespace qhardy {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

UnitImaginary::UnitImaginary(double x, double y, double z) : x_{x}, y_{y}, z_{z} {
    const double n2 = x * x + y * y + z * z;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolerance) {
        throw Error(ErrorCode::InvalidArgument, "unit imaginary must have x^2+y^2+z^2 = 1");
    }
}

UnitImaginary UnitImaginary::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0) || !std::isfinite(n)) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero imaginary direction");
    }
    return {x / n, y / n, z / n};
}

Quaternion circle_point(double t, const UnitImaginary& I) {
    const double s = std::sin(t);
    return {std::cos(t), s * I.x(), s * I.y(), s * I.z()};
}

UnitImaginary orthogonal_unit(const UnitImaginary& I) {
    constexpr std::array<std::array<double, 3>, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (const auto& e : axes) {
        const double d = e[0] * I.x() + e[1] * I.y() + e[2] * I.z();
        if (std::abs(d) < 0.9) {
            return UnitImaginary::normalized(e[0] - d * I.x(), e[1] - d * I.y(), e[2] - d * I.z());
        }
    }
    // unreachable: some axis always has |<I,e>| <= 1/sqrt(3)
    throw Error(ErrorCode::InvalidArgument, "no fallback axis");
}

}  // namespace qhardy
