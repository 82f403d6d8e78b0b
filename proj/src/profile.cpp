#include "hypgrow/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypgrow/errors.hpp"

namespace hypgrow {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Envelope envelope(MetricKind m, double d0, double t) {
    if (!(d0 > 0.0)) throw PreconditionError("envelope: base distance must be positive");
    if (!(t >= 0.0)) throw PreconditionError("envelope: t must be nonnegative");
    const bool inner = t < d0;
    Envelope e;
    switch (m) {
        case MetricKind::j:
        case MetricKind::k:
            e.lo = std::log1p(t / d0);
            if (inner) e.hi = std::log(d0 / (d0 - t));
            break;
        case MetricKind::s:
            e.lo = t / (2.0 * d0 + t);
            if (inner) e.hi = t / (2.0 * d0 - t);
            break;
        case MetricKind::sigma:
            e.lo = std::tan(kPi * t / (4.0 * d0 + 2.0 * t));
            if (inner) e.hi = std::tan(kPi * t / (4.0 * d0 - 2.0 * t));
            break;
        case MetricKind::sigma_tilde:
            e.lo = (4.0 / kPi) * std::tan(kPi * t / (4.0 * d0 + 2.0 * t));
            if (inner) e.hi = (4.0 / kPi) * std::tan(kPi * t / (4.0 * d0 - 2.0 * t));
            break;
        case MetricKind::c:
            e.lo = t / (d0 * (d0 + t));
            if (inner) e.hi = t / (d0 * (d0 - t));
            break;
        case MetricKind::alpha:
        case MetricKind::delta:
            e.lo = std::log1p(t / d0);
            if (inner) e.hi = std::log((d0 + t) / (d0 - t));
            break;
        case MetricKind::v:
            e.lo = 0.0;
            if (inner) e.hi = std::asin(t / d0);
            break;
        case MetricKind::tau:
            e.lo = 0.0;
            if (inner) e.hi = t / (std::sqrt(d0 * d0 - t * t) + d0);
            break;
        case MetricKind::tau_tilde:
            e.lo = 0.0;
            if (inner) e.hi = 2.0 * t / (std::sqrt(d0 * d0 - t * t) + d0);
            break;
        case MetricKind::rho_ball:
            // exact radial value in the ball of radius d0 about the base point
            if (inner) {
                const double val = std::asinh(t / std::sqrt(d0 * d0 - t * t));
                e.lo = val;
                e.hi = val;
            }
            break;
        case MetricKind::rho_halfspace:
            if (inner) {
                const double val = std::log(d0 / (d0 - t));
                e.lo = val;
                e.hi = val;
            }
            break;
    }
    return e;
}

ProfileTable profile(const Domain& d, std::optional<MetricKind> m, const Point& direction,
                     double t_max, int steps) {
    if (direction.dim() != static_cast<std::size_t>(d.dim()))
        throw PreconditionError("profile: direction dimension mismatch");
    const Point dir = normalized(direction);
    if (steps < 2) throw PreconditionError("profile: need at least 2 steps");
    if (!(t_max > 0.0)) throw PreconditionError("profile: t_max must be positive");

    // Admissibility scan on a finer grid than the table itself.
    const int fine = 4 * steps;
    for (int i = 0; i <= fine; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(fine);
        if (!d.contains(t * dir)) {
            std::ostringstream os;
            os << "profile: ray exits the domain at t=" << t;
            throw OutsideDomainError(os.str());
        }
    }

    const Point origin(static_cast<std::size_t>(d.dim()));
    const double d0 = d.dist_boundary(origin);

    ProfileTable table;
    table.domain = d.to_json();
    table.metric = m;
    table.direction = dir;
    table.rows.reserve(static_cast<std::size_t>(steps) + 1);

    for (int i = 0; i <= steps; ++i) {
        ProfileRow row;
        row.t = t_max * static_cast<double>(i) / static_cast<double>(steps);
        const Point p = row.t * dir;
        row.g = (i == 0) ? d0 : d.dist_boundary(p);
        if (m) {
            if (i == 0) {
                row.f = 0.0;
            } else {
                try {
                    row.f = evaluate(d, *m, origin, p).value;
                } catch (const OverflowError&) {
                    // tangent transform blew up; keep the row, drop the value
                }
            }
            const Envelope e = envelope(*m, d0, row.t);
            row.env_lo = e.lo;
            row.env_hi = e.hi;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

DerivativeEstimate derivative_at_zero(const Domain& d, MetricKind m, const Point& direction) {
    if (direction.dim() != static_cast<std::size_t>(d.dim()))
        throw PreconditionError("derivative_at_zero: direction dimension mismatch");
    const Point dir = normalized(direction);
    const Point origin(static_cast<std::size_t>(d.dim()));
    const double d0 = d.dist_boundary(origin);

    DerivativeEstimate est;
    std::vector<double> quot;
    for (int k = 6; k <= 16; ++k) {
        const double h = d0 * std::ldexp(1.0, -k);
        const Point p = h * dir;
        if (!d.contains(p))
            throw PreconditionError("derivative_at_zero: ray not admissible near the base point");
        const double f = evaluate(d, m, origin, p).value;
        quot.push_back(f / h);
        est.step_sequence.push_back(h);
    }

    // Error model f(h)/h = f'(0) + c1 h + c2 h^2 + ..., step ratio 2.
    std::vector<double> lvl1, lvl2;
    for (std::size_t i = 0; i + 1 < quot.size(); ++i)
        lvl1.push_back(2.0 * quot[i + 1] - quot[i]);
    for (std::size_t i = 0; i + 1 < lvl1.size(); ++i)
        lvl2.push_back((4.0 * lvl1[i + 1] - lvl1[i]) / 3.0);

    const double last = lvl2.back();
    const double prev = lvl2[lvl2.size() - 2];
    const double scale = std::max({std::fabs(last), std::fabs(prev), 1e-12});
    if (std::fabs(last - prev) / scale > 1e-3)
        throw NonConvergenceError("derivative_at_zero: extrapolants did not settle");

    est.value = last;
    est.lo = std::min(last, prev);
    est.hi = std::max(last, prev);
    return est;
}

}  // namespace hypgrow
