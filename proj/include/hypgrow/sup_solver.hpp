#pragma once

#include <functional>
#include <optional>

#include "hypgrow/domain.hpp"

namespace hypgrow {

using BoundaryFunctional = std::function<double(const BoundaryPoint&)>;
using BoundaryPairFunctional =
    std::function<double(const BoundaryPoint&, const BoundaryPoint&)>;

struct SupResult {
    double value = 0.0;
    BoundaryPoint witness_a;
    std::optional<BoundaryPoint> witness_b;  // set for pair problems
    double enclosure_radius = 0.0;           // final refinement bracket width
    long evaluations = 0;
};

// Maximize F over the boundary of d (markers included): coarse pass on the
// boundary_samples grid, then golden-section refinement around the top three
// coarse maxima of each boundary component until the parameter bracket is
// narrower than refine_tol. Ties resolve to the smallest (component, param).
// budget >= 16. Throws NonFiniteValueError if F produces a NaN or infinity.
SupResult sup_boundary(const Domain& d, const BoundaryFunctional& F,
                       int budget = 4096, double refine_tol = 1e-10);

// Maximize F(a, b) over boundary pairs: full coarse scan with floor(sqrt(budget))
// points per side, then three alternating one-variable refinement sweeps.
// budget >= 256.
SupResult sup_boundary_pairs(const Domain& d, const BoundaryPairFunctional& F,
                             int budget = 65536, double refine_tol = 1e-10);

// Pair problem whose objective splits as Fa(a) + Fb(b): two independent
// single-point solves, combined.
SupResult sup_boundary_pairs_separable(const Domain& d, const BoundaryFunctional& Fa,
                                       const BoundaryFunctional& Fb, int budget = 4096,
                                       double refine_tol = 1e-10);

// Dense-sampling oracles: plain maximum over boundary_samples(budget) (or all
// sample pairs), no refinement. budget >= 1000.
SupResult brute_force_sup(const Domain& d, const BoundaryFunctional& F, int budget);
SupResult brute_force_sup_pairs(const Domain& d, const BoundaryPairFunctional& F,
                                int budget);

}  // namespace hypgrow
