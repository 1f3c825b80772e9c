#pragma once

/**
 * Optimal polynomial approximants of f^{-⋆}, orthonormal bases of f ⋆ P_n,
 * cyclicity diagnostics and outer-function tests.
 *
 * Right-module convention throughout: elements of f ⋆ P_n are written
 * Σ (f ⋆ q^k) c_k with coefficients on the right, and the inner product is
 * right-linear in its first slot, ⟨x a, y⟩ = ⟨x, y⟩ a. The optimal
 * approximant p_n = Σ q^k c_k therefore solves G c = β with
 *
 *   G[j][k] = ⟨f ⋆ q^k, f ⋆ q^j⟩ = Σ_m conj(a_{m-j}) a_{m-k},
 *   β[j]    = ⟨1, f ⋆ q^j⟩       = conj(a_0) δ_{j0}.
 *
 * Quaternion Hermitian systems are solved through the 2m×2m complex adjoint
 * embedding q = z1 + z2 j ↦ [[z1, z2], [-conj z2, conj z1]].
 */

#include <cstddef>
#include <vector>

#include "qhardy/inner.hpp"
#include "qhardy/quat.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

/// Dense row-major quaternion matrix.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Quaternion> data_;
};

struct GramSystem {
    std::size_t n;
    QMatrix G;
    std::vector<Quaternion> beta;
};

struct ApproximantReport {
    std::size_t n;
    QSeries p_n;
    double dist2;           // ‖f ⋆ p_n - 1‖²
    Quaternion p_n_at_0;
    double basis_mass;      // Σ_{k<=n} |φ_k(0)|²
};

struct CyclicityReport {
    std::vector<ApproximantReport> reports;  // n = 0..n_max
    bool has_target = false;                 // f(0) != 0
    Quaternion target_at_0;                  // f^{-⋆}(0) = a_0^{-1}
    double target_modulus = 0;               // |f^{-⋆}(0)|
};

struct ApproximantZeros {
    ZeroSet zeros;
    double min_modulus;  // +inf when p_n has no zeros
};

struct OuterFactor {
    QSeries outer;
    std::size_t skipped_nodes = 0;  // nodes with |f| < 1e-13 left out of the log integral
};

struct OuterVerdict {
    bool verdict;
    double defect;  // mean of log|f^s| on ∂D minus log|f^s(0)|; +inf when f(0) = 0
};

GramSystem gram(const QSeries& f, std::size_t n);

/// Solves G c = β for p_n. When f(0) = 0 returns p_n = 0 with dist2 = 1.
/// Throws SingularGram if f ≡ 0.
ApproximantReport optimal_approximant(const QSeries& f, std::size_t n);

/// φ_0..φ_n with deg φ_k = k and ⟨f ⋆ φ_j, f ⋆ φ_k⟩ = δ_jk (right Gram-Schmidt).
/// Throws SingularGram if f ≡ 0 or the Gram condition number exceeds 1e12.
std::vector<QSeries> orthonormal_basis(const QSeries& f, std::size_t n);

/// ‖K_n(·, 0) - f ⋆ p_n‖ with K_n(·, 0) = Σ_k (f ⋆ φ_k) conj((f ⋆ φ_k)(0)).
double kernel_identity_defect(const QSeries& f, std::size_t n);

CyclicityReport cyclicity_report(const QSeries& f, std::size_t n_max);

/// |λ| = ‖f ⋆ q‖² / |⟨f, f ⋆ q⟩| for the zero λ of p_1. Throws NoZero if the
/// denominator is below 1e-14.
double degree1_zero_modulus(const QSeries& f);

/// Zeros of p_n and their minimum modulus. Throws ZeroAtOrigin if f(0) = 0.
ApproximantZeros approximant_zeros_check(const QSeries& f, std::size_t n);

/// Outer factor of a real-coefficient f from the log-modulus on ∂D (α = 1),
/// expanded to degree N from M boundary nodes.
OuterFactor outer_factor_slice_preserving(const QSeries& f, std::size_t M, std::size_t N);

/// (1/M) Σ log|f(τ_ω(e^{θ_m I_ω}))| - log|f(ω)| on the slice of ω.
/// Throws NotInBall for |ω| >= 1 and ZeroValue when |f(ω)| < 1e-13.
double mean_value_defect(const QSeries& f, const Quaternion& omega, std::size_t M);

/// Classical outer test applied to f^s on the slice L_i: the mean of log|f^s|
/// over M boundary nodes against log|f^s(0)|. Zeros of f^s within 20/M of the
/// circle are divided out and contribute log max(1, |z|) exactly, so the
/// quadrature only sees a zero-free integrand.
OuterVerdict is_outer(const QSeries& f, std::size_t M = 4096, double tol = 1e-7);

}  // namespace qhardy
