#pragma once

// Inner functions: Möbius/Blaschke constructors, three inner tests, and the
// classification of zeros of a quaternionic polynomial into isolated points
// and spheres x + yS.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qhardy/hardy.hpp"
#include "qhardy/quat.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

struct Sphere {
    double x;
    double y;  // > 0
    bool operator==(const Sphere&) const = default;
};

struct ZeroSet {
    std::vector<Quaternion> isolated;
    std::vector<Sphere> spheres;
};

enum class InnerMethod { Moment, Splitting, Norm };

std::string to_string(InnerMethod m);

struct InnerReport {
    bool verdict;
    double max_defect;
    InnerMethod method;
    // method parameters: K for moment, M for splitting, slices/M for norm
    int K = 0;
    std::size_t nodes = 0;
    std::size_t slices = 0;
    double tol = 0;
};

/// Degree-N truncation of τ_ω(q) = (1 - q ω̄)^{-⋆} ⋆ (ω - q). Throws NotInBall if |ω| >= 1.
QSeries mobius(const Quaternion& omega, std::size_t N);

/// τ_{ω_1} ⋆ τ_{ω_2} ⋆ ... truncated to degree N; no unimodular normalization.
QSeries blaschke(std::span<const Quaternion> zeros, std::size_t N);

/// Inner iff ⟨q^k ⋆ f, f⟩ = δ_k(0) for 0 <= k <= K.
InnerReport is_inner_moment(const QSeries& f, int K, double tol = 1e-7);

/// Inner iff |F|²+|G|² = 1 and F(z)G(z̄) = F(z̄)G(z) at M boundary angles of the
/// slice I, with F, G the splitting in the frame (I, orthogonal_unit(I)).
/// Throws InsufficientNodes if M < 2 deg f + 1.
InnerReport is_inner_splitting(const QSeries& f, const UnitImaginary& I, std::size_t M,
                               double tol = 1e-7);

/// ‖f‖_2 = ‖f‖_∞ = 1 with the sup taken over the grid. Only a necessary check at
/// finite resolution: the grid maximum underestimates ‖f‖_∞.
InnerReport is_inner_norm(const QSeries& f, const BoundaryGrid& grid, double tol = 1e-7);

/// Zeros of p from the roots of p^s. Throws InvalidArgument if p ≡ 0 and
/// InconsistentSphere when a root sphere of p^s carries no zero of p.
ZeroSet zero_structure(const QSeries& p, double tol = 1e-8);

}  // namespace qhardy
