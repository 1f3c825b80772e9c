#include "qhardy/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace qhardy {

namespace {

// Parlett-Reinsch balancing with radix 2; similarity, so eigenvalues are kept.
void balance(Eigen::MatrixXd& a) {
    constexpr double radix = 2.0;
    const Eigen::Index n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double r = 0, c = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0 || r == 0) continue;
            double g = r / radix;
            double f = 1;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

}  // namespace

std::complex<double> eval_real_poly(std::span<const double> coeffs, std::complex<double> z,
                                    int derivative) {
    // ascending coefficients; multiply each by the falling factorial for derivatives
    std::complex<double> acc = 0;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    for (int n = deg; n >= derivative; --n) {
        double factor = 1;
        for (int t = 0; t < derivative; ++t) factor *= static_cast<double>(n - t);
        acc = acc * z + coeffs[static_cast<std::size_t>(n)] * factor;
    }
    return acc;
}

std::vector<PolyRoot> real_poly_roots(std::span<const double> coeffs) {
    std::size_t size = coeffs.size();
    while (size > 0 && coeffs[size - 1] == 0.0) --size;
    if (size <= 1) return {};
    const auto c = coeffs.first(size);
    const Eigen::Index d = static_cast<Eigen::Index>(size - 1);

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) comp(0, j) = -c[static_cast<std::size_t>(d - 1 - j)] / c[static_cast<std::size_t>(d)];
    for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    balance(comp);

    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const Eigen::VectorXcd ev = es.eigenvalues();

    // An m-fold root splits into eigenvalues spread like (κ ε)^{1/m}, so the
    // cluster radius grows with the cluster size.
    constexpr std::size_t kMaxCluster = 8;
    const auto merge_radius = [](int m, double scale) {
        constexpr double kappa_eps = 1e-13;
        return std::max(1e-6, std::pow(kappa_eps, 1.0 / m)) * scale;
    };
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::vector<PolyRoot> roots;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        used[static_cast<std::size_t>(i)] = true;
        std::complex<double> sum = ev(i);
        int m = 1;
        std::vector<Eigen::Index> rest;
        for (Eigen::Index j = i + 1; j < d; ++j) {
            if (!used[static_cast<std::size_t>(j)]) rest.push_back(j);
        }
        std::sort(rest.begin(), rest.end(), [&](Eigen::Index a, Eigen::Index b) {
            return std::abs(ev(a) - ev(i)) < std::abs(ev(b) - ev(i));
        });
        // largest m whose m - 1 nearest neighbours fit the m-fold radius
        for (std::size_t take = std::min<std::size_t>(rest.size(), kMaxCluster - 1); take > 0; --take) {
            std::complex<double> s = ev(i);
            for (std::size_t t = 0; t < take; ++t) s += ev(rest[t]);
            const int size = static_cast<int>(take) + 1;
            const std::complex<double> centre = s / static_cast<double>(size);
            const double r = merge_radius(size, 1.0 + std::abs(centre));
            bool fits = std::abs(ev(i) - centre) <= r;
            for (std::size_t t = 0; t < take && fits; ++t) fits = std::abs(ev(rest[t]) - centre) <= r;
            if (!fits) continue;
            for (std::size_t t = 0; t < take; ++t) used[static_cast<std::size_t>(rest[t])] = true;
            sum = s;
            m = size;
            break;
        }
        const double radius = merge_radius(m, 1.0 + std::abs(sum) / m);
        std::complex<double> z = sum / static_cast<double>(m);
        if (std::abs(z.imag()) < 1e-300) z.imag(0.0);
        for (int step = 0; step < 2; ++step) {
            const std::complex<double> v = eval_real_poly(c, z, m - 1);
            const std::complex<double> dv = eval_real_poly(c, z, m);
            if (dv == 0.0) break;
            const std::complex<double> next = z - v / dv;
            if (std::abs(next - z) > radius || !std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
            if (std::abs(eval_real_poly(c, next, m - 1)) <= std::abs(v)) z = next;
        }
        roots.push_back({z, m});
    }
    return roots;
}

}  // namespace qhardy
