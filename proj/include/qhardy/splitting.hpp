#pragma once

// Splitting of a slice regular series relative to an orthogonal frame (I, J):
// a_n = α_n + β_n J with α_n, β_n ∈ L_I, so that f_I = F + G J.

#include <complex>
#include <vector>

#include "qhardy/quat.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

/// Complex coefficients are (re, im) relative to I, never ambient quaternions.
struct SplitPair {
    UnitImaginary I;
    UnitImaginary J;
    std::vector<std::complex<double>> F;
    std::vector<std::complex<double>> G;
};

/// Throws FrameNotOrthogonal when |<I,J>| > 1e-10.
SplitPair split(const QSeries& f, const UnitImaginary& I, const UnitImaginary& J);

/// Inverse of split: a_n = α_n + β_n J. Throws InvalidArgument if F and G differ in length.
QSeries recombine(const SplitPair& pair);

/// Embeds a complex number of L_I into ℍ.
inline Quaternion in_slice(std::complex<double> z, const UnitImaginary& I) {
    return Quaternion(z.real()) + z.imag() * I.quat();
}

/// Horner evaluation of a complex polynomial.
std::complex<double> eval_complex(const std::vector<std::complex<double>>& c, std::complex<double> z);

}  // namespace qhardy
