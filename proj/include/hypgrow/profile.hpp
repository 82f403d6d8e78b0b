#pragma once

#include <optional>
#include <vector>

#include "hypgrow/metrics.hpp"

namespace hypgrow {

struct Envelope {
    double lo = 0.0;
    std::optional<double> hi;  // absent when no upper bound holds at this t
};

// Ray growth bounds for m at distance t from the base point, where d0 is the
// boundary distance of the base point. Lower bounds hold along the whole ray;
// upper bounds only for t < d0 and are absent beyond.
Envelope envelope(MetricKind m, double d0, double t);

struct ProfileRow {
    double t = 0.0;
    double g = 0.0;                 // boundary distance at t * direction
    std::optional<double> f;        // metric value, absent for g-only tables
                                    // and for tangent-transform overflow rows
    std::optional<double> env_lo;
    std::optional<double> env_hi;
};

struct ProfileTable {
    Json domain;
    std::optional<MetricKind> metric;
    Point direction;  // unit
    std::vector<ProfileRow> rows;
};

// Uniform grid t_i = t_max * i / steps, i = 0..steps, of g(t) = d(t*dir) and
// f(t) = m(0, t*dir). Requires the closed ray segment to stay inside the
// domain; raises OutsideDomainError naming the first offending t otherwise.
ProfileTable profile(const Domain& d, std::optional<MetricKind> m, const Point& direction,
                     double t_max, int steps);

struct DerivativeEstimate {
    double value = 0.0;
    double lo = 0.0;  // bracket from the last two extrapolants
    double hi = 0.0;
    std::vector<double> step_sequence;
};

// One-sided derivative of t -> m(0, t*dir) at t = 0: forward quotients on
// h = d(0) * 2^-k for k = 6..16 with two Richardson levels. Raises
// NonConvergenceError when the last extrapolants disagree by more than 1e-3
// relatively.
DerivativeEstimate derivative_at_zero(const Domain& d, MetricKind m, const Point& direction);

}  // namespace hypgrow
