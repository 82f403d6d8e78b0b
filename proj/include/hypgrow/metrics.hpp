#pragma once

#include <optional>
#include <string>

#include "hypgrow/domain.hpp"
#include "hypgrow/sup_solver.hpp"

namespace hypgrow {

enum class MetricKind {
    j,
    k,
    s,
    sigma,
    sigma_tilde,
    c,
    alpha,
    delta,
    v,
    tau,
    tau_tilde,
    rho_ball,
    rho_halfspace,
};

// Canonical lowercase tags: "j", "k", "s", "sigma", "sigma_tilde", "c",
// "alpha", "delta", "v", "tau", "tau_tilde", "rho_ball", "rho_halfspace".
const char* metric_name(MetricKind m);
MetricKind metric_from_name(const std::string& name);  // ParseError on unknown

enum class KMethod { automatic, closed_form, graph, segment_upper };
KMethod k_method_from_name(const std::string& name);  // ParseError on unknown

struct MetricResult {
    double value = 0.0;
    double lower = 0.0;  // certified lower estimate, lower <= value <= upper
    double upper = 0.0;
    std::optional<BoundaryPoint> witness_a;
    std::optional<BoundaryPoint> witness_b;
    std::string method;  // closed_form | sup_solver | graph_approx | segment_integral
};

// Reference hyperbolic distances, exactly in the stated normalizations.
double rho_halfspace(double b, const Point& u, const Point& w);
double rho_ball(const Point& center, double r, const Point& u, const Point& w);

// log(1 + |u-w| / min(d(u), d(w))).
MetricResult j_dist(const Domain& d, const Point& u, const Point& w);

// Quasihyperbolic distance. Exact closed form for pairs collinear with a ball
// center or vertically aligned in a half plane; otherwise an enclosure whose
// upper estimate comes from the straight-segment integral of 1/d when the
// segment stays inside, or from a shortest path on a grid discretization.
MetricResult k_dist(const Domain& d, const Point& u, const Point& w,
                    KMethod method = KMethod::automatic);

struct SFamily {
    MetricResult s;
    MetricResult sigma;
    MetricResult sigma_tilde;
};
// Triangular ratio sup |u-w|/(|u-q|+|q-w|) plus its tangent transforms.
// OverflowError when s is within 1e-12 of 1.
SFamily s_family(const Domain& d, const Point& u, const Point& w);

// Cassinian sup |u-w|/(|u-q||q-w|).
MetricResult c_dist(const Domain& d, const Point& u, const Point& w);

// Apollonian distance, split into two independent boundary sups of log
// quotients. DegenerateBoundaryError when the boundary fits a single circle
// or line (residual below 1e-9 over 64 samples).
MetricResult alpha_dist(const Domain& d, const Point& u, const Point& w);

// Seittenranta distance via the pair sup. lower carries the Apollonian value
// when defined, upper the triangle-inequality closed form
// log(1 + t/d(u) + t/d(w) + t^2/(d(u)d(w))), t = |u-w|.
MetricResult delta_dist(const Domain& d, const Point& u, const Point& w);

struct VFamily {
    MetricResult v;
    MetricResult tau;
    MetricResult tau_tilde;
};
// Visual angle sup plus tangent transforms. v = pi exactly when the segment
// [u,w] meets the boundary; tau then raises OverflowError.
VFamily v_family(const Domain& d, const Point& u, const Point& w);

// Uniform dispatch, used by the profiler and the command line front end.
// rho_ball and rho_halfspace require the matching domain type.
MetricResult evaluate(const Domain& d, MetricKind m, const Point& u, const Point& w);

}  // namespace hypgrow
