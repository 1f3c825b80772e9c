#include "qhardy/outer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qhardy/error.hpp"
#include "qhardy/hardy.hpp"
#include "qhardy/roots.hpp"
#include "qhardy/splitting.hpp"

namespace qhardy {

namespace {

using cd = std::complex<double>;

// complex adjoint q = z1 + z2 j with z1 = w + x i, z2 = y + z i
Eigen::MatrixXcd adjoint_embedding(const QMatrix& G) {
    const auto m = static_cast<Eigen::Index>(G.rows());
    Eigen::MatrixXcd A(2 * m, 2 * m);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
            const Quaternion& q = G(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            const cd z1(q.w, q.x), z2(q.y, q.z);
            A(2 * r, 2 * c) = z1;
            A(2 * r, 2 * c + 1) = z2;
            A(2 * r + 1, 2 * c) = -std::conj(z2);
            A(2 * r + 1, 2 * c + 1) = std::conj(z1);
        }
    }
    return A;
}

std::vector<Quaternion> solve_hermitian(const QMatrix& G, const std::vector<Quaternion>& rhs) {
    const Eigen::MatrixXcd A = adjoint_embedding(G);
    const auto m = static_cast<Eigen::Index>(rhs.size());
    Eigen::VectorXcd b(2 * m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const Quaternion& q = rhs[static_cast<std::size_t>(r)];
        b(2 * r) = cd(q.w, q.x);
        b(2 * r + 1) = -std::conj(cd(q.y, q.z));
    }
    const Eigen::LLT<Eigen::MatrixXcd> llt(A);
    if (llt.info() != Eigen::Success) throw Error(ErrorCode::SingularGram, "Gram matrix is not positive definite");
    const Eigen::VectorXcd x = llt.solve(b);
    std::vector<Quaternion> c(rhs.size());
    for (Eigen::Index r = 0; r < m; ++r) {
        const cd z1 = x(2 * r);
        const cd z2 = -std::conj(x(2 * r + 1));
        c[static_cast<std::size_t>(r)] = {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }
    return c;
}

double gram_condition(const GramSystem& sys) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(adjoint_embedding(sys.G), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0) return std::numeric_limits<double>::infinity();
    return ev.maxCoeff() / ev.minCoeff();
}

void require_nonzero(const QSeries& f) {
    if (h2_norm(f) == 0.0) throw Error(ErrorCode::SingularGram, "f vanishes identically");
}

double basis_mass(const std::vector<QSeries>& basis, std::size_t n) {
    double mass = 0;
    for (std::size_t k = 0; k <= n; ++k) mass += basis[k][0].norm2();
    return mass;
}

ApproximantReport approximant_with_mass(const QSeries& f, std::size_t n, double mass) {
    require_nonzero(f);
    if (f[0].norm2() == 0.0) {
        return {n, QSeries().truncated(n), 1.0, Quaternion{}, mass};
    }
    const GramSystem sys = gram(f, n);
    QSeries p(solve_hermitian(sys.G, sys.beta));
    const QSeries residual = star_mul(f, p) - QSeries::constant(1.0);
    const double d = h2_norm(residual);
    return {n, p, d * d, p[0], mass};
}

// mean of log|·| of a complex polynomial at the M roots of unity
double log_mean_on_circle(const std::vector<cd>& c, std::size_t M) {
    std::vector<double> logs(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        logs[m] = std::log(std::abs(eval_complex(c, std::polar(1.0, theta))));
    }
    return pairwise_sum(logs) / static_cast<double>(M);
}

}  // namespace

GramSystem gram(const QSeries& f, std::size_t n) {
    GramSystem sys{n, QMatrix(n + 1, n + 1), std::vector<Quaternion>(n + 1)};
    const auto a = f.coeffs();
    const std::size_t deg = f.degree();
    // G[j][k] = Σ_m conj(a_{m-j}) a_{m-k}; depends on k - j only
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t k = j; k <= n; ++k) {
            Quaternion acc;
            const std::size_t shift = k - j;
            for (std::size_t t = 0; t + shift <= deg; ++t) acc += a[t + shift].conj() * a[t];
            sys.G(j, k) = acc;
            sys.G(k, j) = acc.conj();
        }
        sys.G(j, j) = sys.G(j, j).real();
    }
    sys.beta[0] = a[0].conj();
    return sys;
}

ApproximantReport optimal_approximant(const QSeries& f, std::size_t n) {
    const auto basis = orthonormal_basis(f, n);
    return approximant_with_mass(f, n, basis_mass(basis, n));
}

std::vector<QSeries> orthonormal_basis(const QSeries& f, std::size_t n) {
    require_nonzero(f);
    if (gram_condition(gram(f, n)) > 1e12) {
        throw Error(ErrorCode::SingularGram, "Gram matrix is numerically rank deficient");
    }
    std::vector<QSeries> phi;
    std::vector<QSeries> e;  // f ⋆ φ_k
    phi.reserve(n + 1);
    e.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        QSeries ph = QSeries::monomial(k);
        QSeries v = star_mul(f, ph);
        // two passes of modified Gram-Schmidt; projection of v onto e_j is e_j ⟨v, e_j⟩
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                const Quaternion r = inner_product_coeff(v, e[j]);
                v = v - e[j] * r;
                ph = ph - phi[j] * r;
            }
        }
        const double nv = h2_norm(v);
        if (!(nv > 0)) throw Error(ErrorCode::SingularGram, "Gram-Schmidt produced a zero vector");
        e.push_back(v * (1.0 / nv));
        phi.push_back(ph.truncated(k) * (1.0 / nv));
    }
    return phi;
}

double kernel_identity_defect(const QSeries& f, std::size_t n) {
    const auto basis = orthonormal_basis(f, n);
    QSeries kernel = QSeries().truncated(f.degree() + n);
    for (const auto& ph : basis) {
        const QSeries e = star_mul(f, ph);
        kernel = kernel + e * e[0].conj();
    }
    const ApproximantReport rep = approximant_with_mass(f, n, basis_mass(basis, n));
    return h2_norm(kernel - star_mul(f, rep.p_n));
}

CyclicityReport cyclicity_report(const QSeries& f, std::size_t n_max) {
    if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "--nmax must be >= 1");
    const auto basis = orthonormal_basis(f, n_max);
    CyclicityReport out;
    out.reports.reserve(n_max + 1);
    double mass = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        mass += basis[n][0].norm2();
        out.reports.push_back(approximant_with_mass(f, n, mass));
    }
    if (f[0].norm2() > 0) {
        out.has_target = true;
        out.target_at_0 = inverse(f[0]);
        out.target_modulus = out.target_at_0.norm();
    }
    return out;
}

double degree1_zero_modulus(const QSeries& f) {
    const QSeries fq = star_mul(f, QSeries::monomial(1));
    const double den = inner_product_coeff(f, fq).norm();
    if (den < 1e-14) throw Error(ErrorCode::NoZero, "<f, f*q> vanishes; p_1 is constant");
    const double num = h2_norm(fq);
    return num * num / den;
}

ApproximantZeros approximant_zeros_check(const QSeries& f, std::size_t n) {
    if (f[0].norm2() == 0.0) throw Error(ErrorCode::ZeroAtOrigin, "approximant zeros need f(0) != 0");
    const ApproximantReport rep = optimal_approximant(f, n);
    ApproximantZeros out{zero_structure(rep.p_n), std::numeric_limits<double>::infinity()};
    for (const auto& z : out.zeros.isolated) out.min_modulus = std::min(out.min_modulus, z.norm());
    for (const auto& s : out.zeros.spheres) out.min_modulus = std::min(out.min_modulus, std::hypot(s.x, s.y));
    return out;
}

OuterFactor outer_factor_slice_preserving(const QSeries& f, std::size_t M, std::size_t N) {
    if (!f.is_real(1e-12)) throw Error(ErrorCode::NotSlicePreserving, "outer factor needs real coefficients");
    if (h2_norm(f) == 0.0) throw Error(ErrorCode::InvalidArgument, "outer factor of the zero series");
    if (M < 1) throw Error(ErrorCode::InsufficientNodes, "--nodes must be >= 1");
    std::vector<cd> c;
    for (const auto& a : f.coeffs()) c.emplace_back(a.w, 0.0);

    std::vector<double> cos_table(M);
    std::vector<double> logs(M, 0.0);
    std::size_t skipped = 0;
    for (std::size_t m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        cos_table[m] = std::cos(theta);
        const double v = std::abs(eval_complex(c, std::polar(1.0, theta)));
        if (v < 1e-13) {
            ++skipped;
            continue;
        }
        logs[m] = std::log(v);
    }
    if (20 * skipped > M) {
        throw Error(ErrorCode::BoundaryZeroLog, "more than 5% of boundary nodes hit zeros of f");
    }
    // analytic completion u = c_0 + 2 Σ c_n z^n of log|f|; c_n real since f is real
    std::vector<double> u(N + 1);
    std::vector<double> term(M);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m < M; ++m) term[m] = logs[m] * cos_table[(n * m) % M];
        const double cn = pairwise_sum(term) / static_cast<double>(M);
        u[n] = n == 0 ? cn : 2.0 * cn;
    }
    // O = exp(u) through O' = O u'
    std::vector<double> o(N + 1);
    o[0] = std::exp(u[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        double acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * u[k] * o[n - k];
        o[n] = acc / static_cast<double>(n);
    }
    return {QSeries(std::vector<Quaternion>(o.begin(), o.end())), skipped};
}

double mean_value_defect(const QSeries& f, const Quaternion& omega, std::size_t M) {
    if (!(omega.norm() < 1.0)) throw Error(ErrorCode::NotInBall, "mean value point needs |omega| < 1");
    if (M < 1) throw Error(ErrorCode::InsufficientNodes, "--nodes must be >= 1");
    const double fw = eval(f, omega).norm();
    if (fw < 1e-13) throw Error(ErrorCode::ZeroValue, "f(omega) vanishes");
    const double im = std::sqrt(omega.imag_norm2());
    const UnitImaginary Iw = im > 0 ? UnitImaginary::normalized(omega.x, omega.y, omega.z) : UnitImaginary::i();
    const cd a(omega.w, im);  // ω in the coordinates of L_{I_ω}
    std::vector<double> logs(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
        const cd z = std::polar(1.0, theta);
        const cd w = (a - z) / (1.0 - z * std::conj(a));
        logs[m] = std::log(eval(f, in_slice(w, Iw)).norm());
    }
    return pairwise_sum(logs) / static_cast<double>(M) - std::log(fw);
}

OuterVerdict is_outer(const QSeries& f, std::size_t M, double tol) {
    if (h2_norm(f) == 0.0) throw Error(ErrorCode::InvalidArgument, "is_outer of the zero series");
    if (f[0].norm2() == 0.0) return {false, std::numeric_limits<double>::infinity()};
    const QSeries fs = symmetrize(f);
    if (M < fs.degree() + 1) throw Error(ErrorCode::InsufficientNodes, "is_outer needs M >= 2 deg f + 1");

    std::vector<double> real_coeffs;
    for (const auto& a : fs.coeffs()) real_coeffs.push_back(a.w);
    std::vector<cd> q(real_coeffs.begin(), real_coeffs.end());

    // divide out zeros hugging the circle; mean log|z - a| = log max(1, |a|)
    const double band = 20.0 / static_cast<double>(M);
    double jensen = 0;
    for (const PolyRoot& r : real_poly_roots(real_coeffs)) {
        if (std::abs(std::abs(r.z) - 1.0) >= band) continue;
        for (int t = 0; t < r.multiplicity; ++t) {
            std::vector<cd> quot(q.size() - 1);
            cd carry = 0;
            for (std::size_t n = q.size() - 1; n-- > 0;) {
                carry = q[n + 1] + r.z * carry;
                quot[n] = carry;
            }
            q = std::move(quot);
            jensen += std::log(std::max(1.0, std::abs(r.z)));
        }
    }
    const double mean = (q.size() > 1 ? log_mean_on_circle(q, M) : std::log(std::abs(q[0]))) + jensen;
    const double defect = mean - std::log(real_coeffs[0]);
    return {std::abs(defect) <= tol, defect};
}

}  // namespace qhardy
