#include "hypgrow/sup_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hypgrow {

namespace {

bool wraps_around(const BoundaryCurve& c) {
    return c.kind == BoundaryCurve::Kind::arc &&
           std::abs((c.theta1 - c.theta0) - 2.0 * std::acos(-1.0)) < 1e-12;
}

double checked(const BoundaryFunctional& F, const BoundaryPoint& q, long& evals) {
    double v = F(q);
    ++evals;
    if (!std::isfinite(v))
        throw NonFiniteValueError(q.at_infinity
                                      ? "boundary functional is not finite at a marker"
                                      : "boundary functional is not finite at a sample");
    return v;
}

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    int comp = std::numeric_limits<int>::max();
    double u = 0.0;
    BoundaryPoint witness;
    double bracket = 0.0;

    // Coarse candidates arrive in (component, param) order, so keeping the
    // first hit realizes the smallest-(component, param) tie rule.
    void offer(double v, int c, double uu, BoundaryPoint w, double br) {
        if (v > value || (v == value && (c < comp || (c == comp && uu < u)))) {
            value = v;
            comp = c;
            u = uu;
            witness = std::move(w);
            bracket = br;
        }
    }

    // Refined candidates displace the incumbent only on strict improvement.
    void offer_refined(double v, int c, double uu, BoundaryPoint w, double br) {
        if (v > value) {
            value = v;
            comp = c;
            u = uu;
            witness = std::move(w);
            bracket = br;
        }
    }
};

// Golden-section maximization of G on [lo, hi]; narrows the bracket below tol
// and reports the midpoint, final width, and midpoint value.
template <typename G>
void golden_max(G&& g, double lo, double hi, double tol, double& u_out, double& w_out,
                double& v_out) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    int guard = 0;
    while (b - a > tol && ++guard < 200) {
        if (g1 >= g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - invphi * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + invphi * (b - a);
            g2 = g(x2);
        }
    }
    u_out = 0.5 * (a + b);
    w_out = b - a;
    v_out = g(u_out);
}

// Shared single-variable solve over explicit curves and markers.
SupResult solve_single(const std::vector<BoundaryCurve>& curves,
                       const std::vector<Point>& marker_dirs, const BoundaryFunctional& F,
                       int budget, double refine_tol) {
    const int nc = static_cast<int>(curves.size());
    const int base = (budget + nc - 1) / nc;

    long evals = 0;
    Best best;

    struct CoarseHit {
        double value;
        int index;
    };

    for (int ci = 0; ci < nc; ++ci) {
        const auto& c = curves[ci];
        const int k = curve_node_count(c, base);
        std::vector<double> vals(k);
        for (int i = 0; i < k; ++i) {
            double u = curve_node_param(c, k, i);
            BoundaryPoint q = c.eval(u);
            vals[i] = checked(F, q, evals);
            best.offer(vals[i], ci, u, std::move(q), 0.0);
        }

        // Refine around the three best coarse nodes of this component.
        std::vector<CoarseHit> hits;
        hits.reserve(k);
        for (int i = 0; i < k; ++i) hits.push_back({vals[i], i});
        std::sort(hits.begin(), hits.end(), [](const CoarseHit& a, const CoarseHit& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.index < b.index;
        });

        const bool wraps = wraps_around(c);
        for (int h = 0; h < 3 && h < k; ++h) {
            int i = hits[h].index;
            double lo, hi;
            if (wraps) {
                lo = static_cast<double>(i - 1) / k;
                hi = static_cast<double>(i + 1) / k;
            } else {
                double prev = curve_node_param(c, k, std::max(0, i - 1));
                double next = curve_node_param(c, k, std::min(k - 1, i + 1));
                lo = prev;
                hi = next;
                if (c.kind == BoundaryCurve::Kind::ray && i == k - 1)
                    hi = 1.0 - 1e-12;  // probe beyond the last node, short of the marker
                if (c.kind == BoundaryCurve::Kind::line) {
                    if (i == 0) lo = 1e-12;
                    if (i == k - 1) hi = 1.0 - 1e-12;
                }
            }
            if (!(hi > lo)) continue;
            auto g = [&](double u) { return checked(F, c.eval(u), evals); };
            double u_mid, width, v_mid;
            golden_max(g, lo, hi, refine_tol, u_mid, width, v_mid);
            best.offer_refined(v_mid, ci, u_mid, c.eval(u_mid), width);
        }
    }

    for (std::size_t m = 0; m < marker_dirs.size(); ++m) {
        BoundaryPoint q = BoundaryPoint::infinity(marker_dirs[m]);
        double v = checked(F, q, evals);
        best.offer(v, nc + static_cast<int>(m), 0.0, std::move(q), 0.0);
    }

    SupResult r;
    r.value = best.value;
    r.witness_a = best.witness;
    r.enclosure_radius = best.bracket;
    r.evaluations = evals;
    return r;
}

}  // namespace

SupResult sup_boundary(const Domain& d, const BoundaryFunctional& F, int budget,
                       double refine_tol) {
    if (budget < 16) throw PreconditionError("sup_boundary: budget must be >= 16");
    const auto curves = d.boundary_curves();
    if (curves.empty()) throw PreconditionError("sup_boundary: domain has no boundary curves");
    return solve_single(curves, d.infinity_directions(), F, budget, refine_tol);
}

SupResult sup_boundary_pairs(const Domain& d, const BoundaryPairFunctional& F, int budget,
                             double refine_tol) {
    if (budget < 256) throw PreconditionError("sup_boundary_pairs: budget must be >= 256");
    const auto curves = d.boundary_curves();
    if (curves.empty())
        throw PreconditionError("sup_boundary_pairs: domain has no boundary curves");
    const auto marker_dirs = d.infinity_directions();

    const int side = std::max(16, static_cast<int>(std::floor(std::sqrt(
                                      static_cast<double>(budget)))));
    const int nc = static_cast<int>(curves.size());
    const int base = (side + nc - 1) / nc;

    long evals = 0;

    // One flattened candidate list serves both sides of the coarse scan.
    std::vector<BoundaryPoint> pts;
    for (int ci = 0; ci < nc; ++ci) {
        const int k = curve_node_count(curves[ci], base);
        for (int i = 0; i < k; ++i)
            pts.push_back(curves[ci].eval(curve_node_param(curves[ci], k, i)));
    }
    for (const auto& dir : marker_dirs) pts.push_back(BoundaryPoint::infinity(dir));

    double best_v = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double v = F(pts[i], pts[j]);
            ++evals;
            if (!std::isfinite(v))
                throw NonFiniteValueError("boundary pair functional is not finite");
            if (v > best_v) {
                best_v = v;
                best_i = i;
                best_j = j;
            }
        }
    }

    BoundaryPoint cur_a = pts[best_i];
    BoundaryPoint cur_b = pts[best_j];
    double enclosure = 0.0;

    for (int sweep = 0; sweep < 3; ++sweep) {
        BoundaryFunctional fa = [&](const BoundaryPoint& q) { return F(q, cur_b); };
        SupResult ra = solve_single(curves, marker_dirs, fa, side, refine_tol);
        evals += ra.evaluations;
        if (ra.value >= best_v) {
            best_v = ra.value;
            cur_a = ra.witness_a;
            enclosure = ra.enclosure_radius;
        }

        BoundaryFunctional fb = [&](const BoundaryPoint& q) { return F(cur_a, q); };
        SupResult rb = solve_single(curves, marker_dirs, fb, side, refine_tol);
        evals += rb.evaluations;
        if (rb.value >= best_v) {
            best_v = rb.value;
            cur_b = rb.witness_a;
            enclosure = std::max(enclosure, rb.enclosure_radius);
        }
    }

    SupResult r;
    r.value = best_v;
    r.witness_a = cur_a;
    r.witness_b = cur_b;
    r.enclosure_radius = enclosure;
    r.evaluations = evals;
    return r;
}

SupResult sup_boundary_pairs_separable(const Domain& d, const BoundaryFunctional& Fa,
                                       const BoundaryFunctional& Fb, int budget,
                                       double refine_tol) {
    SupResult ra = sup_boundary(d, Fa, budget, refine_tol);
    SupResult rb = sup_boundary(d, Fb, budget, refine_tol);
    SupResult r;
    r.value = ra.value + rb.value;
    r.witness_a = ra.witness_a;
    r.witness_b = rb.witness_a;
    r.enclosure_radius = std::max(ra.enclosure_radius, rb.enclosure_radius);
    r.evaluations = ra.evaluations + rb.evaluations;
    return r;
}

SupResult brute_force_sup(const Domain& d, const BoundaryFunctional& F, int budget) {
    if (budget < 1000) throw PreconditionError("brute_force_sup: budget must be >= 1000");
    const auto samples = d.boundary_samples(budget);
    long evals = 0;
    SupResult r;
    r.value = -std::numeric_limits<double>::infinity();
    for (const auto& q : samples) {
        double v = checked(F, q, evals);
        if (v > r.value) {
            r.value = v;
            r.witness_a = q;
        }
    }
    r.evaluations = evals;
    return r;
}

SupResult brute_force_sup_pairs(const Domain& d, const BoundaryPairFunctional& F,
                                int budget) {
    if (budget < 1000)
        throw PreconditionError("brute_force_sup_pairs: budget must be >= 1000");
    const int side =
        std::max(16, static_cast<int>(std::floor(std::sqrt(static_cast<double>(budget)))));
    const auto samples = d.boundary_samples(side);
    long evals = 0;
    SupResult r;
    r.value = -std::numeric_limits<double>::infinity();
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            double v = F(a, b);
            ++evals;
            if (!std::isfinite(v))
                throw NonFiniteValueError("boundary pair functional is not finite");
            if (v > r.value) {
                r.value = v;
                r.witness_a = a;
                r.witness_b = b;
            }
        }
    }
    r.evaluations = evals;
    return r;
}

}  // namespace hypgrow
