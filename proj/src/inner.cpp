#include "qhardy/inner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qhardy/error.hpp"
#include "qhardy/roots.hpp"
#include "qhardy/splitting.hpp"

namespace qhardy {

std::string to_string(InnerMethod m) {
    switch (m) {
        case InnerMethod::Moment: return "moment";
        case InnerMethod::Splitting: return "splitting";
        case InnerMethod::Norm: return "norm";
    }
    return "unknown";
}

QSeries mobius(const Quaternion& omega, std::size_t N) {
    if (!(omega.norm() < 1.0)) throw Error(ErrorCode::NotInBall, "Moebius parameter needs |omega| < 1");
    const QSeries denom{Quaternion(1), -omega.conj()};
    const QSeries numer{omega, Quaternion(-1)};
    return star_mul(star_inverse(denom, N), numer).truncated(N);
}

QSeries blaschke(std::span<const Quaternion> zeros, std::size_t N) {
    QSeries b = QSeries::constant(1.0);
    for (const auto& w : zeros) b = star_mul(b, mobius(w, N)).truncated(N);
    return b;
}

InnerReport is_inner_moment(const QSeries& f, int K, double tol) {
    if (K < 1) throw Error(ErrorCode::InvalidArgument, "-K must be >= 1");
    const LaurentCoeffs c = moment_coeffs(f, K);
    double defect = (c.at(0) - Quaternion(1)).norm();
    for (int k = 1; k <= K; ++k) defect = std::max(defect, c.at(k).norm());
    return {defect <= tol, defect, InnerMethod::Moment, K, 0, 0, tol};
}

InnerReport is_inner_splitting(const QSeries& f, const UnitImaginary& I, std::size_t M, double tol) {
    if (M < 2 * f.degree() + 1) {
        throw Error(ErrorCode::InsufficientNodes, "splitting test needs M >= 2 deg f + 1");
    }
    const SplitPair sp = split(f, I, orthogonal_unit(I));
    double defect = 0;
    for (std::size_t m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        const std::complex<double> z = std::polar(1.0, theta);
        const std::complex<double> zb = std::conj(z);
        const auto Fz = eval_complex(sp.F, z);
        const auto Gz = eval_complex(sp.G, z);
        const auto Fzb = eval_complex(sp.F, zb);
        const auto Gzb = eval_complex(sp.G, zb);
        defect = std::max(defect, std::abs(std::norm(Fz) + std::norm(Gz) - 1.0));
        defect = std::max(defect, std::abs(Fz * Gzb - Fzb * Gz));
    }
    return {defect <= tol, defect, InnerMethod::Splitting, 0, M, 1, tol};
}

InnerReport is_inner_norm(const QSeries& f, const BoundaryGrid& grid, double tol) {
    const double defect =
        std::max(std::abs(h2_norm(f) - 1.0), std::abs(hinf_estimate(f, grid) - 1.0));
    return {defect <= tol, defect, InnerMethod::Norm, 0, grid.angle_count(), grid.slice_nodes().size(), tol};
}

namespace {

// Σ |a_n| r^n, the natural magnitude of p on the sphere of radius r.
double eval_scale(const QSeries& p, double r) {
    double acc = 0;
    for (std::size_t n = p.degree() + 1; n-- > 0;) acc = acc * r + p[n].norm();
    return acc;
}

}  // namespace

ZeroSet zero_structure(const QSeries& p, double tol) {
    if (h2_norm(p) == 0.0) throw Error(ErrorCode::InvalidArgument, "zero_structure of the zero series");
    const QSeries ps = symmetrize(p);
    std::vector<double> c;
    c.reserve(ps.degree() + 1);
    for (const auto& a : ps.coeffs()) c.push_back(a.w);

    ZeroSet out;
    for (const PolyRoot& root : real_poly_roots(c)) {
        const double x = root.z.real();
        const double y = root.z.imag();
        const double r = std::abs(root.z);
        const double thresh = tol * (1.0 + eval_scale(p, r));
        if (std::abs(y) <= 1e-7 * (1.0 + r)) {
            if (eval(p, Quaternion(x)).norm() > thresh) {
                throw Error(ErrorCode::InconsistentSphere, "real root of p^s is not a zero of p");
            }
            out.isolated.emplace_back(x);
            continue;
        }
        if (y < 0) continue;  // conjugate of a root already seen

        // p(x + yI) = c + I d on the sphere x + yS
        const Quaternion A = eval(p, Quaternion(x, y, 0, 0));
        const Quaternion B = eval(p, Quaternion(x, -y, 0, 0));
        const Quaternion cc = (A + B) * 0.5;
        const Quaternion d = kI * (B - A) * 0.5;
        if (cc.norm() <= thresh && d.norm() <= thresh) {
            out.spheres.push_back({x, y});
            continue;
        }
        if (d.norm() <= thresh) {
            throw Error(ErrorCode::InconsistentSphere, "sphere of p^s carries no zero of p");
        }
        const Quaternion Istar = -(cc * inverse(d));
        const double unit_tol = std::max(std::sqrt(tol), 1e-6);
        if (std::abs(Istar.w) > unit_tol || std::abs(std::sqrt(Istar.imag_norm2()) - 1.0) > unit_tol) {
            throw Error(ErrorCode::InconsistentSphere, "-c d^{-1} is not an imaginary unit");
        }
        const UnitImaginary I = UnitImaginary::normalized(Istar.x, Istar.y, Istar.z);
        const Quaternion zero = Quaternion(x) + y * I.quat();
        if (eval(p, zero).norm() > thresh) {
            throw Error(ErrorCode::InconsistentSphere, "candidate zero fails the residual check");
        }
        out.isolated.push_back(zero);
    }
    return out;
}

}  // namespace qhardy
