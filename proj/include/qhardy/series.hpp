#pragma once

// Truncated slice regular power series f(q) = Σ q^n a_n (coefficients on the
// right) and the ⋆-algebra they form.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qhardy/quat.hpp"

namespace qhardy {

class QSeries {
public:
    /// The zero series (degree 0).
    QSeries() : coeffs_(1) {}
    explicit QSeries(std::vector<Quaternion> coeffs);
    QSeries(std::initializer_list<Quaternion> coeffs);

    static QSeries constant(const Quaternion& c) { return QSeries{c}; }
    /// q^n · c
    static QSeries monomial(std::size_t n, const Quaternion& c = 1.0);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Quaternion> coeffs() const { return coeffs_; }

    /// a_n, or 0 past the stored degree.
    Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }
    Quaternion operator[](std::size_t n) const { return coeffs_[n]; }

    /// Keeps a_0..a_n (zero-padding when n exceeds the degree).
    QSeries truncated(std::size_t n) const;

    bool is_real(double tol = 1e-12) const;

    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    /// f · c (right scalar multiplication, coefficientwise a_n c)
    friend QSeries operator*(const QSeries& f, const Quaternion& c);
    friend QSeries operator*(const QSeries& f, double s);

    bool operator==(const QSeries&) const = default;

private:
    std::vector<Quaternion> coeffs_;
};

/// Two-sided coefficient window c_lo..c_hi for slice L² functions on ∂B.
class LaurentCoeffs {
public:
    LaurentCoeffs(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    Quaternion& at(int n);
    const Quaternion& at(int n) const;

private:
    int lo_, hi_;
    std::vector<Quaternion> coeffs_;
};

/// Degree deg f + deg g; coefficient n is Σ_k a_k b_{n-k} with a on the left.
QSeries star_mul(const QSeries& f, const QSeries& g);

QSeries conjugate(const QSeries& f);

/// f^s = f ⋆ f^c, snapped to real coefficients.
QSeries symmetrize(const QSeries& f);

/// Degree-out_degree truncation of (f^s)^{-1} ⋆ f^c. Throws ZeroAtOrigin when |a_0| < tol.
QSeries star_inverse(const QSeries& f, std::size_t out_degree, double tol = 1e-12);

/// Σ q^n a_n by Horner's rule (q multiplies from the left).
Quaternion eval(const QSeries& f, const Quaternion& q);

/// f(q)^{-1} q f(q). Throws ZeroDenominator when |f(q)| < 1e-12.
Quaternion t_map(const QSeries& f, const Quaternion& q);

/// Extends Σ z^n (u_n + v_n J), given on the slice L_J, to the whole ball.
QSeries ext_from_slice(std::span<const std::complex<double>> coeffs, const UnitImaginary& J);

/// (1-IJ)/2 · f(x+yJ) + (1+IJ)/2 · f(x-yJ)
Quaternion rep_formula_eval(const QSeries& f, double x, double y, const UnitImaginary& I,
                            const UnitImaginary& J);

/// Coefficients c_k, |k| <= K, of f^c ⋆ f̃ on ∂B: c_k = Σ_{n>=max(0,k)} conj(a_n) a_{n-k},
/// with c_{-k} = conj(c_k).
LaurentCoeffs moment_coeffs(const QSeries& f, int K);

}  // namespace qhardy
