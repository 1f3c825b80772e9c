#include "qhardy/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhardy/error.hpp"

namespace qhardy {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    T left = pairwise(v.first(half));
    left += pairwise(v.subspan(half));
    return left;
}

}  // namespace

Quaternion pairwise_sum(std::span<const Quaternion> v) { return pairwise(v); }
double pairwise_sum(std::span<const double> v) { return pairwise(v); }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

BoundaryGrid::BoundaryGrid(std::vector<UnitImaginary> slices, std::size_t angle_count)
    : slices_(std::move(slices)), angles_{angle_count} {
    if (slices_.empty() || angles_ < 1) {
        throw Error(ErrorCode::InvalidArgument, "boundary grid needs >= 1 slice and >= 1 angle");
    }
}

BoundaryGrid BoundaryGrid::fibonacci(std::size_t slice_count, std::size_t angle_count) {
    if (slice_count < 1) throw Error(ErrorCode::InvalidArgument, "--slices must be >= 1");
    std::vector<UnitImaginary> s;
    s.reserve(slice_count);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double n = static_cast<double>(slice_count);
    for (std::size_t k = 0; k < slice_count; ++k) {
        const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(k);
        s.push_back(UnitImaginary::normalized(r * std::cos(phi), r * std::sin(phi), z));
    }
    return {std::move(s), angle_count};
}

Quaternion BoundaryGrid::node(std::size_t slice, std::size_t m) const {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angles_);
    return circle_point(theta, slices_.at(slice));
}

Quaternion inner_product_coeff(const QSeries& f, const QSeries& g) {
    const std::size_t n = std::min(f.degree(), g.degree()) + 1;
    std::vector<Quaternion> terms(n);
    for (std::size_t k = 0; k < n; ++k) terms[k] = g[k].conj() * f[k];
    return pairwise_sum(terms);
}

Quaternion inner_product_slice(const QSeries& f, const QSeries& g, const UnitImaginary& I,
                               std::size_t M) {
    if (M < f.degree() + g.degree() + 1) {
        throw Error(ErrorCode::InsufficientNodes, "slice quadrature needs M >= deg f + deg g + 1");
    }
    std::vector<Quaternion> terms(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        const Quaternion q = circle_point(theta, I);
        terms[m] = eval(g, q).conj() * eval(f, q);
    }
    return pairwise_sum(terms) / static_cast<double>(M);
}

Quaternion inner_product_slice(const QSeries& f, const QSeries& g, const UnitImaginary& I) {
    return inner_product_slice(f, g, I, next_pow2(f.degree() + g.degree() + 1));
}

double h2_norm(const QSeries& f) {
    std::vector<double> sq;
    sq.reserve(f.degree() + 1);
    // zero terms are dropped so that padding cannot change the summation tree
    for (const auto& a : f.coeffs()) {
        if (const double t = a.norm2(); t != 0.0) sq.push_back(t);
    }
    return std::sqrt(pairwise_sum(sq));
}

double hinf_estimate(const QSeries& f, const BoundaryGrid& grid) {
    double best = 0;
    for (std::size_t s = 0; s < grid.slice_nodes().size(); ++s) {
        for (std::size_t m = 0; m < grid.angle_count(); ++m) {
            best = std::max(best, eval(f, grid.node(s, m)).norm());
        }
    }
    return best;
}

}  // namespace qhardy
