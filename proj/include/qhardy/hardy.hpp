#pragma once

// H²(B) inner products (coefficient and single-slice quadrature forms),
// boundary grids for the measure Σ = σ × dt/2π, and a grid H^∞ estimate.

#include <cstddef>
#include <span>
#include <vector>

#include "qhardy/quat.hpp"
#include "qhardy/series.hpp"

namespace qhardy {

/// Tensor grid on ∂B: slice directions on S times M uniform angles per slice.
/// Every node carries weight 1 / (slices · M), so the weights sum to one.
class BoundaryGrid {
public:
    BoundaryGrid(std::vector<UnitImaginary> slices, std::size_t angle_count);

    /// `slice_count` directions from a Fibonacci lattice on S.
    static BoundaryGrid fibonacci(std::size_t slice_count, std::size_t angle_count);

    const std::vector<UnitImaginary>& slice_nodes() const { return slices_; }
    std::size_t angle_count() const { return angles_; }
    std::size_t size() const { return slices_.size() * angles_; }
    double weight() const { return 1.0 / static_cast<double>(size()); }

    /// e^{θ_m I_s} with θ_m = 2πm/M.
    Quaternion node(std::size_t slice, std::size_t m) const;

private:
    std::vector<UnitImaginary> slices_;
    std::size_t angles_;
};

/// ⟨f, g⟩ = Σ conj(b_n) a_n; right-linear in f.
Quaternion inner_product_coeff(const QSeries& f, const QSeries& g);

/// (1/M) Σ_m conj(g(e^{θ_m I})) f(e^{θ_m I}). Exact for M >= deg f + deg g + 1;
/// throws InsufficientNodes below that bound.
Quaternion inner_product_slice(const QSeries& f, const QSeries& g, const UnitImaginary& I,
                               std::size_t M);
/// Same, with M = deg f + deg g + 1 rounded up to a power of two.
Quaternion inner_product_slice(const QSeries& f, const QSeries& g, const UnitImaginary& I);

double h2_norm(const QSeries& f);

/// max |f| over the grid nodes. A lower bound for ‖f‖_∞ that converges as the
/// grid is refined.
double hinf_estimate(const QSeries& f, const BoundaryGrid& grid);

std::size_t next_pow2(std::size_t n);

/// Pairwise summation; the result does not depend on thread scheduling.
Quaternion pairwise_sum(std::span<const Quaternion> v);
double pairwise_sum(std::span<const double> v);

}  // namespace qhardy
