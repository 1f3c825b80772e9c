#include "qhardy/series.hpp"

#include <algorithm>
#include <cmath>

#include "qhardy/error.hpp"

namespace qhardy {

namespace {

bool finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

}  // namespace

QSeries::QSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "a series needs at least one coefficient");
    }
    if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite)) {
        throw Error(ErrorCode::InvalidArgument, "series coefficients must be finite");
    }
}

QSeries::QSeries(std::initializer_list<Quaternion> coeffs)
    : QSeries(std::vector<Quaternion>(coeffs)) {}

QSeries QSeries::monomial(std::size_t n, const Quaternion& c) {
    std::vector<Quaternion> a(n + 1);
    a[n] = c;
    return QSeries(std::move(a));
}

QSeries QSeries::truncated(std::size_t n) const {
    std::vector<Quaternion> a(n + 1);
    std::copy_n(coeffs_.begin(), std::min(n + 1, coeffs_.size()), a.begin());
    return QSeries(std::move(a));
}

bool QSeries::is_real(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Quaternion& a) { return std::sqrt(a.imag_norm2()) <= tol; });
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    std::vector<Quaternion> a(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < a.size(); ++n) a[n] = f.coeff(n) + g.coeff(n);
    return QSeries(std::move(a));
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    std::vector<Quaternion> a(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < a.size(); ++n) a[n] = f.coeff(n) - g.coeff(n);
    return QSeries(std::move(a));
}

QSeries operator*(const QSeries& f, const Quaternion& c) {
    std::vector<Quaternion> a(f.coeffs_);
    for (auto& x : a) x = x * c;
    return QSeries(std::move(a));
}

QSeries operator*(const QSeries& f, double s) {
    std::vector<Quaternion> a(f.coeffs_);
    for (auto& x : a) x *= s;
    return QSeries(std::move(a));
}

LaurentCoeffs::LaurentCoeffs(int lo, int hi) : lo_{lo}, hi_{hi} {
    if (lo > 0 || hi < 0) throw Error(ErrorCode::InvalidArgument, "Laurent window must contain 0");
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
}

Quaternion& LaurentCoeffs::at(int n) {
    if (n < lo_ || n > hi_) throw Error(ErrorCode::InvalidArgument, "Laurent index out of window");
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

const Quaternion& LaurentCoeffs::at(int n) const {
    if (n < lo_ || n > hi_) throw Error(ErrorCode::InvalidArgument, "Laurent index out of window");
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

QSeries star_mul(const QSeries& f, const QSeries& g) {
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t m = 0; m < b.size(); ++m) c[k + m] += a[k] * b[m];
    }
    return QSeries(std::move(c));
}

QSeries conjugate(const QSeries& f) {
    std::vector<Quaternion> a(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : a) x = x.conj();
    return QSeries(std::move(a));
}

QSeries symmetrize(const QSeries& f) {
    const QSeries p = star_mul(f, conjugate(f));
    std::vector<Quaternion> a(p.coeffs().size());
    for (std::size_t n = 0; n < a.size(); ++n) a[n] = p[n].real();
    return QSeries(std::move(a));
}

QSeries star_inverse(const QSeries& f, std::size_t out_degree, double tol) {
    if (f[0].norm() < tol) throw Error(ErrorCode::ZeroAtOrigin, "star inverse needs f(0) != 0");
    const QSeries s = symmetrize(f);
    // reciprocal of the real series f^s by forward substitution
    std::vector<double> r(out_degree + 1);
    const double s0 = s[0].w;
    r[0] = 1.0 / s0;
    for (std::size_t n = 1; n <= out_degree; ++n) {
        double acc = 0;
        for (std::size_t k = 1; k <= std::min(n, s.degree()); ++k) acc += s[k].w * r[n - k];
        r[n] = -acc / s0;
    }
    std::vector<Quaternion> rq(r.begin(), r.end());
    return star_mul(QSeries(std::move(rq)), conjugate(f)).truncated(out_degree);
}

Quaternion eval(const QSeries& f, const Quaternion& q) {
    const auto a = f.coeffs();
    Quaternion acc = a.back();
    for (std::size_t n = a.size() - 1; n-- > 0;) acc = a[n] + q * acc;
    return acc;
}

Quaternion t_map(const QSeries& f, const Quaternion& q) {
    const Quaternion v = eval(f, q);
    if (v.norm() < 1e-12) throw Error(ErrorCode::ZeroDenominator, "f(q) vanishes");
    return inverse(v) * q * v;
}

QSeries ext_from_slice(std::span<const std::complex<double>> coeffs, const UnitImaginary& J) {
    std::vector<Quaternion> a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) a.push_back(Quaternion(c.real()) + c.imag() * J.quat());
    return QSeries(std::move(a));
}

Quaternion rep_formula_eval(const QSeries& f, double x, double y, const UnitImaginary& I,
                            const UnitImaginary& J) {
    const Quaternion IJ = I.quat() * J.quat();
    const Quaternion plus = eval(f, Quaternion(x) + y * J.quat());
    const Quaternion minus = eval(f, Quaternion(x) - y * J.quat());
    return (Quaternion(1) - IJ) * plus * 0.5 + (Quaternion(1) + IJ) * minus * 0.5;
}

LaurentCoeffs moment_coeffs(const QSeries& f, int K) {
    if (K < 0) throw Error(ErrorCode::InvalidArgument, "moment window K must be >= 0");
    LaurentCoeffs c(-K, K);
    const auto a = f.coeffs();
    const int deg = static_cast<int>(f.degree());
    for (int k = 0; k <= K; ++k) {
        Quaternion acc;
        for (int n = k; n <= deg; ++n) acc += a[n].conj() * a[n - k];
        if (k == 0) acc = Quaternion(acc.w);
        c.at(k) = acc;
        if (k > 0) c.at(-k) = acc.conj();
    }
    return c;
}

}  // namespace qhardy
