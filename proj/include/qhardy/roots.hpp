#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qhardy {

struct PolyRoot {
    std::complex<double> z;
    int multiplicity;
};

/// All complex roots of Σ c_n z^n (real c, ascending order), counted once per
/// cluster. Eigenvalues of the balanced companion matrix; roots closer than
/// 1e-6·(1+|z|) are merged into one cluster whose centroid is polished by two
/// Newton steps on the (m-1)-th derivative. Exact-zero leading coefficients are
/// dropped.
std::vector<PolyRoot> real_poly_roots(std::span<const double> coeffs);

/// Horner evaluation of a real-coefficient polynomial (or its derivative of
/// the given order) at a complex point.
std::complex<double> eval_real_poly(std::span<const double> coeffs, std::complex<double> z,
                                    int derivative = 0);

}  // namespace qhardy
