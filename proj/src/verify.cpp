#include "hypgrow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

#include "hypgrow/sup_solver.hpp"

namespace hypgrow {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Default tolerances by the kind of computation backing the expected value.
constexpr double kTolClosed = 1e-9;   // closed forms against closed forms
constexpr double kTolSup = 1e-6;      // sup solver backed values
constexpr double kTolDeriv = 1e-4;    // extrapolated one-sided derivatives
constexpr double kTolGraph = 1e-3;    // grid shortest-path estimates
constexpr double kTolExact = 1e-12;   // dyadic constructions, no roundoff room

const Point kOrigin = Point::xy(0.0, 0.0);

Point pt(double x, double y) { return Point::xy(x, y); }

double clamp0(double x) { return x > 0.0 ? x : 0.0; }

double interval_gap(double x, double lo, double hi) {
    if (x < lo) return lo - x;
    if (x > hi) return x - hi;
    return 0.0;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ClaimRecord checked(std::string id, std::string domain, std::string inputs,
                    double expected, double observed, double tol,
                    std::string provenance) {
    ClaimRecord r;
    r.claim_id = std::move(id);
    r.domain = std::move(domain);
    r.inputs = std::move(inputs);
    r.expected = expected;
    r.observed = observed;
    r.tolerance = tol;
    r.provenance = std::move(provenance);
    r.status = std::abs(observed - expected) <= tol ? "pass" : "fail";
    return r;
}

// A registered discrepancy: the record keeps the stated value as expected and
// the measurement as observed, and its status never becomes pass.
ClaimRecord discrepancy(std::string id, std::string domain, std::string inputs,
                        double expected, double observed, double tol,
                        std::string provenance, std::string note) {
    ClaimRecord r = checked(std::move(id), std::move(domain), std::move(inputs),
                            expected, observed, tol, std::move(provenance));
    r.status = "flagged";
    r.note = std::move(note);
    return r;
}

double slope_at_zero(const Domain& d, MetricKind m, const Point& dir) {
    return derivative_at_zero(d, m, dir).value;
}

// Stock domains with the canonical ray toward a nearest boundary point.
struct GridProbe {
    DomainPtr d;
    Point dir;
    double t_max = 0.0;
};

std::vector<GridProbe> stock_grids() {
    std::vector<GridProbe> out;
    auto add = [&out](DomainPtr d) {
        GridProbe g;
        g.dir = d->nearest_boundary_direction();
        g.t_max = 0.9 * d->dist_boundary(kOrigin);
        g.d = std::move(d);
        out.push_back(std::move(g));
    };
    add(make_ball(pt(0.0, 0.0), 1.0));
    add(make_half_space(-1.0));
    add(make_g1(pt(1.0, 0.0)));
    add(make_g2(pt(1.0, 0.0)));
    add(make_g3(pt(1.0, 0.0)));
    add(make_alpha_sharp(pt(1.0, 0.0)));
    add(make_quadrant(pt(1.0, 1.0)));
    add(make_circular_notched());
    add(make_polynomial(2));
    add(make_comb(6));
    return out;
}

// Off-center ray of the two-sector domain; it stays inside far beyond d(0),
// which is where the lower bounds keep holding and the upper ones stop.
GridProbe far_grid() {
    GridProbe g;
    g.d = make_g1(pt(1.0, 0.0));
    g.dir = pt(1.0, 0.0);
    g.t_max = 2.7;
    return g;
}

bool alpha_degenerate(const std::string& tag) {
    return tag == "ball" || tag == "half_space";
}

// Worst envelope violation of metric m over 16-step ray grids. Lower-side
// checks include the far ray, upper-side ones stay inside t < d(0).
ClaimRecord envelope_claim(std::string id, MetricKind m, bool upper_side,
                           double scale, std::string note = {}) {
    std::vector<GridProbe> probes = stock_grids();
    if (!upper_side) probes.push_back(far_grid());
    double worst = -1.0;
    std::string where;
    for (const GridProbe& pr : probes) {
        if (m == MetricKind::alpha && alpha_degenerate(pr.d->tag())) continue;
        ProfileTable tab = profile(*pr.d, m, pr.dir, pr.t_max, 16);
        for (const ProfileRow& row : tab.rows) {
            if (row.t == 0.0 || !row.f) continue;
            double viol;
            if (upper_side) {
                if (!row.env_hi) continue;
                viol = *row.f - *row.env_hi;
            } else {
                viol = (row.env_lo ? *row.env_lo : 0.0) - *row.f;
            }
            if (viol > worst) {
                worst = viol;
                where = pr.d->tag() + " t=" + fmt(row.t);
            }
        }
    }
    std::string inputs = std::string("16-step ray grids over the stock domains") +
                         (upper_side ? ", t < 0.9 d(0)" : " plus the g1 far ray");
    ClaimRecord r = checked(std::move(id), "-", std::move(inputs), 0.0,
                            clamp0(worst), kTolSup * scale, "derived");
    if (!note.empty()) r.note = std::move(note);
    return r;
}

// Domains scaled so d(0) = 1, each probed along its nearest-boundary ray.
std::vector<DomainPtr> unit_probes() {
    const double s = 1.0 / std::sqrt(2.0);
    return {make_ball(pt(0.0, 0.0), 1.0), make_g1(pt(1.0, 0.0)),
            make_g2(pt(1.0, 0.0)), make_quadrant(pt(s, s))};
}

ClaimRecord slope_one_claim(std::string id, MetricKind m, double scale) {
    double worst = 0.0;
    for (const DomainPtr& d : unit_probes()) {
        const double v = slope_at_zero(*d, m, d->nearest_boundary_direction());
        worst = std::max(worst, std::abs(v - 1.0));
    }
    return checked(std::move(id), "-",
                   "slope at 0 along nearest-boundary rays in ball, g1, g2, "
                   "quadrant, all with d(0) = 1; worst |deviation| from 1",
                   0.0, worst, kTolDeriv * scale, "stated");
}

// Slope bracket [lo_mult/d(0), hi_mult/d(0)] checked on a list of probes;
// observed is the largest distance from the allowed interval.
struct BracketProbe {
    DomainPtr d;
    Point dir;
};

ClaimRecord bracket_claim(std::string id, MetricKind m, double lo_mult,
                          double hi_mult, const std::vector<BracketProbe>& probes,
                          std::string inputs, double scale) {
    double worst = 0.0;
    std::string vals;
    for (const BracketProbe& pr : probes) {
        const double d0 = pr.d->dist_boundary(kOrigin);
        const double v = slope_at_zero(*pr.d, m, pr.dir);
        worst = std::max(worst, interval_gap(v, lo_mult / d0, hi_mult / d0));
        if (!vals.empty()) vals += ", ";
        vals += pr.d->tag() + ": " + fmt(v);
    }
    ClaimRecord r = checked(std::move(id), "-", std::move(inputs), 0.0, worst,
                            kTolDeriv * scale, "derived");
    r.note = "measured slopes " + vals;
    return r;
}

// Discrete slope of g over [t - h, t] along dir.
double end_slope(const Domain& d, const Point& dir, double t, double h) {
    const double g1 = d.dist_boundary((t - h) * dir);
    const double g2 = d.dist_boundary(t * dir);
    return (g2 - g1) / h;
}

struct CombProbe {
    double foot_t = 0.0;
    double foot_g = 0.0;
    double mid_t = 0.0;
    double mid_g = 0.0;
    double stated_mid = 0.0;
};

// Tooth foot 1 - 2^-l and the abscissa equidistant from the anchors a_l and
// a_{l+1}, with the stated distance sqrt(65) * 2^-(l+4) to both anchors.
CombProbe comb_probe(const Domain& comb, int l) {
    CombProbe c;
    c.foot_t = 1.0 - std::ldexp(1.0, -l);
    c.foot_g = comb.dist_boundary(pt(c.foot_t, 0.0));
    c.mid_t = 1.0 - (15.0 / 16.0) * std::ldexp(1.0, -l);
    c.mid_g = comb.dist_boundary(pt(c.mid_t, 0.0));
    c.stated_mid = std::sqrt(65.0) * std::ldexp(1.0, -(l + 4));
    return c;
}

Point comb_anchor(int l) {
    return pt(1.0 - std::ldexp(1.0, -l), std::ldexp(1.0, -(l + 1)));
}

using Builder = std::function<ClaimRecord(double)>;

struct Registry {
    std::vector<std::pair<std::string, Builder>> items;

    void add(const std::string& id, Builder b) {
        items.emplace_back(id, std::move(b));
    }
};

void register_example_claims(Registry& reg) {
    reg.add("exa:circular-domain/formula", [](double scale) {
        auto d = make_circular_notched();
        double worst = 0.0;
        for (int i = 0; i <= 64; ++i) {
            const double t = 0.95 * i / 64.0;
            const double form = std::sqrt(t * t - 2.0 * t + 2.0) - 1.0;
            worst = std::max(worst, std::abs(d->dist_boundary(pt(t, 0.0)) - form));
        }
        return checked("exa:circular-domain/formula", "circular_notched",
                       "g(t) vs sqrt(t^2-2t+2)-1 on 65 samples, t in [0, 0.95]",
                       0.0, worst, kTolClosed * scale, "closed_form");
    });

    reg.add("exa:circular-domain/flattening", [](double scale) {
        auto d = make_circular_notched();
        const double s = end_slope(*d, pt(1.0, 0.0), 1.0 - 1e-4, 1e-4);
        return checked("exa:circular-domain/flattening", "circular_notched",
                       "|discrete slope of g| at t = 1-1e-4 along e1, h = 1e-4",
                       0.0, std::abs(s), 0.02 * scale, "derived");
    });

    reg.add("exa:comb/foot-values", [](double scale) {
        auto d = make_comb(20);
        double worst = 0.0;
        for (int l = 0; l <= 5; ++l) {
            const CombProbe c = comb_probe(*d, l);
            worst = std::max(worst,
                             std::abs(c.foot_g - std::ldexp(1.0, -(l + 1))));
        }
        return checked("exa:comb/foot-values", "comb",
                       "g(1-2^-l) vs 2^-(l+1) for l = 0..5", 0.0, worst,
                       kTolExact * scale, "construction");
    });

    reg.add("exa:comb/estimate1", [](double scale) {
        auto d = make_comb(20);
        double worst = 0.0;
        for (int l = 0; l <= 5; ++l) {
            const CombProbe c = comb_probe(*d, l);
            const Point a = comb_anchor(l);
            const Segment tooth{a, normalized(a)};
            const double gap = std::ldexp(1.0, -(l + 1)) -
                               dist_point_segment(pt(c.mid_t, 0.0), tooth);
            worst = std::max(worst, gap);
        }
        return checked("exa:comb/estimate1", "comb",
                       "distance from the midpoint abscissa to tooth l stays "
                       ">= 2^-(l+1), l = 0..5",
                       0.0, clamp0(worst), kTolExact * scale, "derived");
    });

    reg.add("exa:comb/estimate2", [](double scale) {
        auto d = make_comb(20);
        double small_gap = 0.0;
        CombProbe c3 = comb_probe(*d, 3);
        std::string tail;
        for (int l = 0; l <= 5; ++l) {
            const CombProbe c = comb_probe(*d, l);
            if (l <= 2) {
                small_gap = std::max(small_gap, std::abs(c.mid_g - c.stated_mid));
            } else if (l >= 4) {
                tail += ", l=" + std::to_string(l) + ": " + fmt(c.mid_g) +
                        " vs " + fmt(c.stated_mid);
            }
        }
        return discrepancy(
            "exa:comb/estimate2", "comb",
            "g at the midpoint abscissa vs the stated anchor distance "
            "sqrt(65)*2^-(l+4), l = 0..5",
            c3.stated_mid, c3.mid_g, kTolExact * scale, "stated",
            "the stated value matches for l <= 2 (largest gap " + fmt(small_gap) +
                ") but from l = 3 on the nearest tooth point sits inside the "
                "segment rather than at its anchor: l=3: " + fmt(c3.mid_g) +
                " vs " + fmt(c3.stated_mid) + tail +
                "; growth past the foot still holds (exa:comb/strict-growth)");
    });

    reg.add("exa:comb/strict-growth", [](double scale) {
        auto d = make_comb(20);
        double least = 1.0;
        for (int l = 0; l <= 5; ++l) {
            const CombProbe c = comb_probe(*d, l);
            least = std::min(least, c.mid_g - c.foot_g);
        }
        ClaimRecord r = checked("exa:comb/strict-growth", "comb",
                                "g(midpoint) - g(foot) stays positive, l = 0..5",
                                0.0, clamp0(-least), kTolExact * scale, "derived");
        r.note = "smallest margin " + fmt(least);
        return r;
    });

    reg.add("exa:comb/oscillation", [](double scale) {
        auto d = make_comb(20);
        ProfileTable tab = profile(*d, std::nullopt, pt(1.0, 0.0), 0.95, 96);
        int changes = 0;
        int prev = 0;
        for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i) {
            const double inc = tab.rows[i + 1].g - tab.rows[i].g;
            const int sg = (inc > 0.0) - (inc < 0.0);
            if (sg != 0 && prev != 0 && sg != prev) ++changes;
            if (sg != 0) prev = sg;
        }
        ClaimRecord r = checked("exa:comb/oscillation", "comb",
                                "slope sign changes of g over 96 steps, "
                                "t_max = 0.95, direction e1; at least 3",
                                0.0, clamp0(3.0 - changes), kTolExact * scale,
                                "derived");
        r.note = std::to_string(changes) + " sign changes";
        return r;
    });

    reg.add("exa:polynomial/flattening-p2", [](double scale) {
        auto d = make_polynomial(2);
        const double s = end_slope(*d, pt(1.0, 0.0), 1.0 - 1e-4, 1e-4);
        return checked("exa:polynomial/flattening-p2", "polynomial",
                       "|discrete slope of g| at t = 1-1e-4 along e1, p = 2",
                       0.0, std::abs(s), 0.02 * scale, "derived");
    });

    reg.add("exa:polynomial/flattening-p3", [](double scale) {
        auto d = make_polynomial(3);
        const double s = end_slope(*d, pt(1.0, 0.0), 1.0 - 1e-4, 1e-4);
        return checked("exa:polynomial/flattening-p3", "polynomial",
                       "|discrete slope of g| at t = 1-1e-4 along e1, p = 3",
                       0.0, std::abs(s), 0.02 * scale, "derived");
    });

    reg.add("exa:polynomial/g-printed", [](double scale) {
        auto d1 = make_polynomial(1);
        auto d2 = make_polynomial(2);
        auto stated = [](int p, double t) {
            return std::sqrt(std::pow(1.0 - t, 2.0 * p) +
                             std::pow(1.0 - t, 4.0 * p - 2.0));
        };
        const double o1 = d1->dist_boundary(pt(0.5, 0.0));
        const double o2 = d2->dist_boundary(pt(0.5, 0.0));
        return discrepancy(
            "exa:polynomial/g-printed", "polynomial",
            "stated closed form sqrt((1-t)^2p + (1-t)^(4p-2)) vs measured g, "
            "t = 1/2",
            stated(1, 0.5), o1, kTolClosed * scale, "stated",
            "the displayed expression is not the measured distance: p=1 gives " +
                fmt(stated(1, 0.5)) + " vs measured " + fmt(o1) +
                " (factor 2), p=2 gives " + fmt(stated(2, 0.5)) +
                " vs measured " + fmt(o2) +
                "; for p=1 it would flatten near the tip while the measured "
                "slope stays 1/sqrt(2), so flattening only starts at p = 2");
    });

    reg.add("exa:rho-in-B/derivative", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        const double v = slope_at_zero(*d, MetricKind::rho_ball, pt(1.0, 0.0));
        return checked("exa:rho-in-B/derivative", "ball",
                       "slope of rho at 0 along e1 in the unit ball", 1.0, v,
                       kTolSup * scale, "stated");
    });

    reg.add("exa:rho-in-B/profile", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        double worst = 0.0;
        for (int i = 1; i <= 16; ++i) {
            const double t = 0.9 * i / 16.0;
            const double f =
                evaluate(*d, MetricKind::rho_ball, kOrigin, pt(t, 0.0)).value;
            worst = std::max(
                worst, std::abs(f - std::asinh(t / std::sqrt(1.0 - t * t))));
        }
        return checked("exa:rho-in-B/profile", "ball",
                       "rho(0, t e1) vs asinh(t/sqrt(1-t^2)), 16 samples",
                       0.0, worst, kTolClosed * scale, "closed_form");
    });

    reg.add("exa:rho-in-Hnb/derivative", [](double scale) {
        auto d = make_half_space(-1.0);
        const double v =
            slope_at_zero(*d, MetricKind::rho_halfspace, pt(0.0, -1.0));
        return checked("exa:rho-in-Hnb/derivative", "half_space",
                       "slope of rho at 0 toward the boundary, d(0) = 1", 1.0,
                       v, kTolSup * scale, "stated");
    });

    reg.add("exa:rho-in-Hnb/profile", [](double scale) {
        auto d = make_half_space(-1.0);
        double worst = 0.0;
        for (int i = 1; i <= 16; ++i) {
            const double t = 0.9 * i / 16.0;
            const double f = evaluate(*d, MetricKind::rho_halfspace, kOrigin,
                                      pt(0.0, -t))
                                 .value;
            const double form = std::acosh(1.0 + t * t / (2.0 * (1.0 - t)));
            worst = std::max(worst, std::abs(f - form));
        }
        return checked("exa:rho-in-Hnb/profile", "half_space",
                       "rho(0, -t e2) vs acosh(1 + t^2/(2(1-t))), 16 samples",
                       0.0, worst, kTolClosed * scale, "closed_form");
    });
}

std::vector<ClaimRecord> example31_records(double scale) {
    auto d = make_quadrant(pt(1.0, 1.0));
    const double r5 = std::sqrt(5.0);
    const Point zhat = pt(1.0 / r5, 2.0 / r5);
    // Near branch: the removed corner is the nearest point until the second
    // coordinate of the ray reaches the corner height at t = sqrt(5)/2.
    auto near_branch = [r5](double t) {
        return std::sqrt(t * t - (6.0 / r5) * t + 2.0);
    };
    auto far_branch = [r5](double t) { return 1.0 - t / r5; };
    const double split = r5 / 2.0;

    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double t = 2.2 * i / 63.0;
        const double form = t <= split ? near_branch(t) : far_branch(t);
        worst = std::max(worst, std::abs(d->dist_boundary(t * zhat) - form));
    }
    ClaimRecord piecewise =
        checked("exa:simple-domain/piecewise", "quadrant",
                "two-branch formula vs measured g on 64 samples, t in "
                "[0, 2.2], direction (1,2)/sqrt(5)",
                0.0, worst, kTolClosed * scale, "closed_form");
    piecewise.note =
        "branch point t = sqrt(5)/2 where the ray passes the corner height; "
        "the alternative abscissa 3/sqrt(5) would leave a " +
        fmt(std::abs(near_branch(3.0 / r5) - far_branch(3.0 / r5))) +
        " mismatch between the branches";

    ClaimRecord far =
        checked("exa:simple-domain/far-branch", "quadrant",
                "g at t = 2 on the same ray", (r5 - 2.0) / r5,
                d->dist_boundary(2.0 * zhat), kTolClosed * scale, "closed_form");

    ClaimRecord cont = checked(
        "exa:simple-domain/branch-continuity", "quadrant",
        "the two branches agree at t = sqrt(5)/2", 0.0,
        std::abs(near_branch(split) - far_branch(split)), kTolClosed * scale,
        "closed_form");

    return {std::move(piecewise), std::move(far), std::move(cont)};
}

void register_lemma_claims(Registry& reg) {
    // Sups of the two distance quotients over spheres around u, and their
    // monotonicity in the radius.
    static const double kRadii[] = {1.0, 1.5, 2.0, 4.0};
    const Point u = pt(0.2, 0.1);
    const Point w = pt(0.5, 0.5);  // |u - w| = 1/2

    reg.add("lem:apollonian-estimate/sup-ratio-1", [u, w](double scale) {
        double worst = 0.0;
        for (double r : kRadii) {
            auto sphere = make_ball(u, r);
            const double s = sup_boundary(*sphere, [&](const BoundaryPoint& a) {
                                 return dist(w, a.p) / dist(u, a.p);
                             }).value;
            worst = std::max(worst, std::abs(s - (r + 0.5) / r));
        }
        return checked("lem:apollonian-estimate/sup-ratio-1", "ball",
                       "sup |w-a|/|u-a| over spheres around u vs (r+|u-w|)/r, "
                       "r in {1, 3/2, 2, 4}",
                       0.0, worst, kTolClosed * scale, "closed_form");
    });

    reg.add("lem:apollonian-estimate/sup-ratio-2", [u, w](double scale) {
        double worst = 0.0;
        for (double r : kRadii) {
            auto sphere = make_ball(u, r);
            const double s = sup_boundary(*sphere, [&](const BoundaryPoint& a) {
                                 return dist(u, a.p) / dist(w, a.p);
                             }).value;
            worst = std::max(worst, std::abs(s - r / (r - 0.5)));
        }
        return checked("lem:apollonian-estimate/sup-ratio-2", "ball",
                       "sup |u-a|/|w-a| over spheres around u vs r/(r-|u-w|), "
                       "r in {1, 3/2, 2, 4}",
                       0.0, worst, kTolClosed * scale, "closed_form");
    });

    reg.add("lem:apollonian-estimate/monotone", [u, w](double scale) {
        double prev1 = 0.0, prev2 = 0.0, worst = 0.0;
        bool first = true;
        for (double r : kRadii) {
            auto sphere = make_ball(u, r);
            const double s1 = sup_boundary(*sphere, [&](const BoundaryPoint& a) {
                                  return dist(w, a.p) / dist(u, a.p);
                              }).value;
            const double s2 = sup_boundary(*sphere, [&](const BoundaryPoint& a) {
                                  return dist(u, a.p) / dist(w, a.p);
                              }).value;
            if (!first) {
                worst = std::max(worst, s1 - prev1);
                worst = std::max(worst, s2 - prev2);
            }
            prev1 = s1;
            prev2 = s2;
            first = false;
        }
        return checked("lem:apollonian-estimate/monotone", "ball",
                       "both sphere sups are non-increasing in the radius",
                       0.0, clamp0(worst), kTolExact * scale, "derived");
    });

    reg.add("lem:delta-special/g2-derivative", [](double scale) {
        auto d = make_g2(pt(1.0, 0.0));
        const double v = slope_at_zero(*d, MetricKind::delta, pt(1.0, 0.0));
        ClaimRecord r = checked("lem:delta-special/g2-derivative", "g2",
                                "slope of delta at 0 toward the sector apex",
                                1.0, v, kTolDeriv * scale, "stated");
        r.note = "the displayed closed form misses the measured values (see "
                 "thm:seittenranta/lower-printed) but its slope at 0 is what "
                 "the sharpness argument uses, and that checks out";
        return r;
    });

    reg.add("lem:delta-special/g3-derivative", [](double scale) {
        auto d = make_g3(pt(1.0, 0.0));
        const double v = slope_at_zero(*d, MetricKind::delta, pt(1.0, 0.0));
        ClaimRecord r = checked("lem:delta-special/g3-derivative", "g3",
                                "slope of delta at 0 toward the sector apex",
                                2.0, v, kTolDeriv * scale, "stated");
        r.note = "same situation as lem:delta-special/g2-derivative";
        return r;
    });

    reg.add("lem:delta-upper/bound", [](double scale) {
        struct Pair {
            DomainPtr d;
            Point u, w;
        };
        std::vector<Pair> pairs;
        auto ball = make_ball(pt(0.0, 0.0), 1.0);
        auto g3 = make_g3(pt(1.0, 0.0));
        auto comb = make_comb(6);
        pairs.push_back({ball, pt(0.3, 0.2), pt(-0.4, 0.1)});
        pairs.push_back({ball, pt(0.05, -0.6), pt(0.5, 0.5)});
        pairs.push_back({g3, pt(0.0, 0.5), pt(-0.5, -0.3)});
        pairs.push_back({g3, pt(0.5, 0.8), pt(-0.9, 0.9)});
        pairs.push_back({comb, pt(0.25, -0.5), pt(-0.7, 0.1)});
        pairs.push_back({comb, pt(0.3, 0.6), pt(0.1, 0.9)});
        double worst = 0.0;
        for (const Pair& p : pairs) {
            const double du = p.d->dist_boundary(p.u);
            const double dw = p.d->dist_boundary(p.w);
            const double t = dist(p.u, p.w);
            const double bound =
                std::log((du + t) * (dw + t) / (du * dw));
            const double val = delta_dist(*p.d, p.u, p.w).value;
            worst = std::max(worst, val - bound);
        }
        return checked("lem:delta-upper/bound", "-",
                       "delta(u,w) <= log((d(u)+t)(d(w)+t)/(d(u)d(w))) on six "
                       "off-center pairs in ball, g3, comb",
                       0.0, clamp0(worst), kTolSup * scale, "derived");
    });
}

void register_prop_claims(Registry& reg) {
    reg.add("prop:increasing-visual-angle/collinear", [](double scale) {
        auto d = make_comb(6);
        // The segment between the probes crosses a tooth anchor, so the sup
        // must hit pi exactly.
        const double v = evaluate(*d, MetricKind::v, pt(0.45, 0.25),
                                  pt(0.55, 0.25))
                             .value;
        return checked("prop:increasing-visual-angle/collinear", "comb",
                       "v for a pair whose segment crosses a tooth anchor",
                       kPi, v, kTolClosed * scale, "closed_form");
    });

    reg.add("prop:increasing-visual-angle/monotone", [](double scale) {
        auto d = make_g1(pt(1.0, 0.0));
        ProfileTable tab =
            profile(*d, MetricKind::v, d->nearest_boundary_direction(), 0.9, 16);
        double least = 1.0;
        for (std::size_t i = 1; i + 1 < tab.rows.size(); ++i)
            least = std::min(least, *tab.rows[i + 1].f - *tab.rows[i].f);
        ClaimRecord r =
            checked("prop:increasing-visual-angle/monotone", "g1",
                    "v grows strictly along the nearest-boundary ray, 16 steps",
                    0.0, clamp0(-least), kTolExact * scale, "derived");
        r.note = "smallest increment " + fmt(least);
        return r;
    });
}

void register_boundary_claims(Registry& reg) {
    reg.add("thm:boundary-estimates/g1-linear", [](double scale) {
        auto d = make_g1(pt(1.0, 0.0));
        double worst = 0.0;
        for (int i = 0; i <= 16; ++i) {
            const double t = 0.99 * i / 16.0;
            worst = std::max(worst,
                             std::abs(d->dist_boundary(pt(t, 0.0)) - (1.0 + t)));
        }
        return checked("thm:boundary-estimates/g1-linear", "g1",
                       "g(t) = d(0) + t along e1 for t < 1, 17 samples", 0.0,
                       worst, kTolClosed * scale, "closed_form");
    });

    reg.add("thm:boundary-estimates/g2-linear", [](double scale) {
        auto d = make_g2(pt(1.0, 0.0));
        double worst = 0.0;
        for (int i = 0; i <= 16; ++i) {
            const double t = 0.99 * i / 16.0;
            worst = std::max(worst,
                             std::abs(d->dist_boundary(pt(t, 0.0)) - (1.0 - t)));
        }
        return checked("thm:boundary-estimates/g2-linear", "g2",
                       "g(t) = d(0) - t along e1 for t < 1, 17 samples", 0.0,
                       worst, kTolClosed * scale, "closed_form");
    });

    reg.add("thm:boundary-estimates/lipschitz", [](double scale) {
        std::vector<GridProbe> probes = stock_grids();
        probes.push_back(far_grid());
        double worst = 0.0;
        for (const GridProbe& pr : probes) {
            ProfileTable tab = profile(*pr.d, std::nullopt, pr.dir, pr.t_max, 64);
            const double dt = pr.t_max / 64.0;
            for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i) {
                const double ratio =
                    std::abs(tab.rows[i + 1].g - tab.rows[i].g) / dt;
                worst = std::max(worst, ratio - 1.0);
            }
        }
        return checked("thm:boundary-estimates/lipschitz", "-",
                       "|g(t+h) - g(t)| <= h on 64-step grids over the stock "
                       "domains and the g1 far ray",
                       0.0, clamp0(worst), kTolSup * scale, "derived");
    });

    reg.add("thm:boundary-estimates/limit-slope", [](double scale) {
        struct Probe {
            DomainPtr d;
            double exit;
        };
        std::vector<Probe> probes;
        probes.push_back({make_ball(pt(0.0, 0.0), 1.0), 1.0});
        probes.push_back({make_g2(pt(1.0, 0.0)), 1.0});
        probes.push_back({make_circular_notched(), 1.0});
        probes.push_back({make_polynomial(2), 1.0});
        double worst = 0.0;
        std::string vals;
        for (const Probe& pr : probes) {
            const double t = pr.exit * (1.0 - 1e-4);
            const double s = end_slope(*pr.d, pt(1.0, 0.0), t, pr.exit * 1e-4);
            worst = std::max(worst, interval_gap(s, -1.0, 0.0));
            if (!vals.empty()) vals += ", ";
            vals += pr.d->tag() + ": " + fmt(s);
        }
        ClaimRecord r =
            checked("thm:boundary-estimates/limit-slope", "-",
                    "discrete slope of g just before the ray exit lies in "
                    "[-1, 0]; ball, g2, circular_notched, polynomial along e1",
                    0.0, worst, kTolSup * scale, "derived");
        r.note = "end slopes " + vals;
        return r;
    });
}

void register_metric_claims(Registry& reg) {
    reg.add("thm:distance-ratio/lower", [](double scale) {
        return envelope_claim("thm:distance-ratio/lower", MetricKind::j, false,
                              scale);
    });
    reg.add("thm:distance-ratio/upper", [](double scale) {
        return envelope_claim("thm:distance-ratio/upper", MetricKind::j, true,
                              scale);
    });
    reg.add("thm:distance-ratio/derivative", [](double scale) {
        return slope_one_claim("thm:distance-ratio/derivative", MetricKind::j,
                               scale);
    });

    reg.add("thm:quasihyperbolic/lower", [](double scale) {
        return envelope_claim("thm:quasihyperbolic/lower", MetricKind::k, false,
                              scale);
    });
    reg.add("thm:quasihyperbolic/upper", [](double scale) {
        return envelope_claim("thm:quasihyperbolic/upper", MetricKind::k, true,
                              scale);
    });
    reg.add("thm:quasihyperbolic/derivative", [](double scale) {
        return slope_one_claim("thm:quasihyperbolic/derivative", MetricKind::k,
                               scale);
    });
    reg.add("thm:quasihyperbolic/graph-vs-closed", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        const MetricResult r =
            k_dist(*d, kOrigin, pt(0.5, 0.0), KMethod::graph);
        return checked("thm:quasihyperbolic/graph-vs-closed", "ball",
                       "grid shortest path for k(0, e1/2) vs log 2",
                       std::log(2.0), r.value, kTolGraph * scale,
                       "closed_form");
    });

    reg.add("thm:sigma-distance/lower", [](double scale) {
        return envelope_claim("thm:sigma-distance/lower", MetricKind::sigma,
                              false, scale);
    });
    reg.add("thm:sigma-distance/upper", [](double scale) {
        return envelope_claim("thm:sigma-distance/upper", MetricKind::sigma,
                              true, scale);
    });
    reg.add("thm:sigma-distance/derivative", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        const double v = slope_at_zero(*d, MetricKind::sigma, pt(1.0, 0.0));
        return checked("thm:sigma-distance/derivative", "ball",
                       "slope of sigma at 0 along e1, d(0) = 1", kPi / 4.0, v,
                       kTolDeriv * scale, "stated");
    });
    reg.add("rem:sigma-tilde/derivative", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        const double v =
            slope_at_zero(*d, MetricKind::sigma_tilde, pt(1.0, 0.0));
        return checked("rem:sigma-tilde/derivative", "ball",
                       "slope of (4/pi) sigma at 0 along e1, d(0) = 1", 1.0, v,
                       kTolDeriv * scale, "stated");
    });

    reg.add("thm:cassinian/lower", [](double scale) {
        return envelope_claim("thm:cassinian/lower", MetricKind::c, false,
                              scale);
    });
    reg.add("thm:cassinian/upper", [](double scale) {
        return envelope_claim("thm:cassinian/upper", MetricKind::c, true,
                              scale);
    });
    reg.add("thm:cassinian/derivative", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 2.0);
        const double v = slope_at_zero(*d, MetricKind::c, pt(1.0, 0.0));
        return discrepancy(
            "thm:cassinian/derivative", "ball",
            "slope of c at 0 along e1 in a ball with d(0) = 2 vs the stated "
            "constant 1/d(0)",
            0.5, v, kTolDeriv * scale, "stated",
            "measured " + fmt(v) + "; the displayed bounds t/(d(d+t)) and "
            "t/(d(d-t)) both have slope 1/d^2 at 0, so the stated constant "
            "1/d only matches when d(0) = 1; the unit-scale records pass");
    });

    reg.add("thm:f-for-alpha/lower", [](double scale) {
        return envelope_claim("thm:f-for-alpha/lower", MetricKind::alpha, false,
                              scale);
    });
    reg.add("thm:f-for-alpha/upper", [](double scale) {
        return envelope_claim("thm:f-for-alpha/upper", MetricKind::alpha, true,
                              scale);
    });
    reg.add("thm:f-for-alpha/derivative-bracket", [](double scale) {
        std::vector<BracketProbe> probes;
        auto g1 = make_g1(pt(1.0, 0.0));
        auto quad = make_quadrant(pt(1.0, 1.0));
        auto notched = make_circular_notched();
        probes.push_back({g1, g1->nearest_boundary_direction()});
        probes.push_back({quad, quad->nearest_boundary_direction()});
        probes.push_back({notched, notched->nearest_boundary_direction()});
        return bracket_claim("thm:f-for-alpha/derivative-bracket",
                             MetricKind::alpha, 1.0, 2.0, probes,
                             "slope of alpha at 0 along nearest-boundary rays "
                             "in g1, quadrant, circular_notched stays within "
                             "[1/d(0), 2/d(0)]",
                             scale);
    });
    reg.add("thm:f-for-alpha/sharp-lower", [](double scale) {
        auto d = make_g2(pt(1.0, 0.0));
        const double v = slope_at_zero(*d, MetricKind::alpha, pt(1.0, 0.0));
        return checked("thm:f-for-alpha/sharp-lower", "g2",
                       "slope of alpha at 0 toward the sector apex reaches "
                       "the lower limit 1/d(0)",
                       1.0, v, kTolDeriv * scale, "stated");
    });
    reg.add("thm:f-for-alpha/sharp-upper", [](double scale) {
        auto d = make_alpha_sharp(pt(1.0, 0.0));
        const double v =
            evaluate(*d, MetricKind::alpha, kOrigin, pt(0.5, 0.0)).value;
        return checked("thm:f-for-alpha/sharp-upper", "alpha_sharp",
                       "alpha(0, e1/2) meets the upper bound log 3", std::log(3.0),
                       v, kTolSup * scale, "stated");
    });

    reg.add("thm:seittenranta/lower", [](double scale) {
        return envelope_claim(
            "thm:seittenranta/lower", MetricKind::delta, false, scale,
            "lower candidate log(1+t/d(0)); the stronger displayed form is "
            "tracked by thm:seittenranta/lower-printed");
    });
    reg.add("thm:seittenranta/upper", [](double scale) {
        return envelope_claim("thm:seittenranta/upper", MetricKind::delta, true,
                              scale);
    });
    reg.add("thm:seittenranta/lower-printed", [](double scale) {
        auto g2 = make_g2(pt(1.0, 0.0));
        auto g3 = make_g3(pt(1.0, 0.0));
        const double v2 =
            delta_dist(*g2, kOrigin, pt(0.5, 0.0)).value;
        const double v3 =
            delta_dist(*g3, kOrigin, pt(0.5, 0.0)).value;
        const double printed = std::log(3.0);  // log((d+t)/(d-t)) at t = 1/2
        return discrepancy(
            "thm:seittenranta/lower-printed", "g2",
            "stated lower bound log((d+t)/(d-t)) vs measured delta(0, e1/2)",
            printed, v2, kTolSup * scale, "stated",
            "the stated lower bound " + fmt(printed) +
                " exceeds the measured sup " + fmt(v2) +
                " in g2, where the profile follows log(d/(d-t)); the same "
                "display is the upper bound, which holds everywhere; the "
                "special-domain closed forms log(1+t/d) = " +
                fmt(std::log(1.5)) + " (g2) and log(1+2t/(d+t)) = " +
                fmt(std::log(5.0 / 3.0)) + " (g3) also miss the measured sups " +
                fmt(v2) + " and " + fmt(v3) +
                "; the envelope keeps the weaker candidate log(1+t/d), which "
                "every measured profile dominates");
    });
    reg.add("thm:seittenranta/derivative-bracket", [](double scale) {
        std::vector<BracketProbe> probes;
        auto g1 = make_g1(pt(1.0, 0.0));
        auto quad = make_quadrant(pt(1.0, 1.0));
        auto notched = make_circular_notched();
        probes.push_back({g1, g1->nearest_boundary_direction()});
        probes.push_back({quad, quad->nearest_boundary_direction()});
        probes.push_back({notched, notched->nearest_boundary_direction()});
        return bracket_claim("thm:seittenranta/derivative-bracket",
                             MetricKind::delta, 1.0, 2.0, probes,
                             "slope of delta at 0 along nearest-boundary rays "
                             "in g1, quadrant, circular_notched stays within "
                             "[1/d(0), 2/d(0)]",
                             scale);
    });
    reg.add("thm:seittenranta/sharp-lower", [](double scale) {
        auto d = make_g2(pt(1.0, 0.0));
        const double v = slope_at_zero(*d, MetricKind::delta, pt(1.0, 0.0));
        return checked("thm:seittenranta/sharp-lower", "g2",
                       "slope of delta at 0 toward the sector apex reaches "
                       "the lower limit 1/d(0)",
                       1.0, v, kTolDeriv * scale, "stated");
    });
    reg.add("thm:seittenranta/sharp-upper", [](double scale) {
        auto d = make_g3(pt(1.0, 0.0));
        const double v = slope_at_zero(*d, MetricKind::delta, pt(1.0, 0.0));
        return checked("thm:seittenranta/sharp-upper", "g3",
                       "slope of delta at 0 toward the sector apex reaches "
                       "the upper limit 2/d(0)",
                       2.0, v, kTolDeriv * scale, "stated");
    });

    reg.add("thm:tau-distance/lower", [](double scale) {
        return envelope_claim("thm:tau-distance/lower", MetricKind::tau, false,
                              scale);
    });
    reg.add("thm:tau-distance/upper", [](double scale) {
        return envelope_claim("thm:tau-distance/upper", MetricKind::tau, true,
                              scale);
    });
    reg.add("thm:tau-distance/derivative-bracket", [](double scale) {
        std::vector<BracketProbe> probes;
        auto ball = make_ball(pt(0.0, 0.0), 1.0);
        auto g2 = make_g2(pt(1.0, 0.0));
        probes.push_back({ball, pt(1.0, 0.0)});
        probes.push_back({g2, pt(1.0, 0.0)});
        return bracket_claim("thm:tau-distance/derivative-bracket",
                             MetricKind::tau, 0.0, 0.5, probes,
                             "slope of tau at 0 stays within [0, 1/(2 d(0))]; "
                             "ball attains the upper end",
                             scale);
    });
    reg.add("thm:tau-distance/lower-in-g2", [](double scale) {
        auto d = make_g2(pt(1.0, 0.0));
        const double v25 =
            evaluate(*d, MetricKind::v, kOrigin, pt(0.25, 0.0)).value;
        const double v50 =
            evaluate(*d, MetricKind::v, kOrigin, pt(0.5, 0.0)).value;
        return discrepancy(
            "thm:tau-distance/lower-in-g2", "g2",
            "smallness of the visual angle along the axis ray, v(t) < 0.05 "
            "for t <= 1/2",
            0.05, std::max(v25, v50), kTolSup * scale, "stated",
            "v(0.25) = " + fmt(v25) + ", v(0.5) = " + fmt(v50) +
                ", so f_tau stays positive where the zero lower limit was "
                "claimed to be attained: f_tau(0.5) = " +
                fmt(std::tan(v50 / 2.0)) +
                "; the zero limit is only approached as t goes to 0");
    });
    reg.add("rem:tau-tilde/derivative", [](double scale) {
        auto d = make_ball(pt(0.0, 0.0), 1.0);
        const double v =
            slope_at_zero(*d, MetricKind::tau_tilde, pt(1.0, 0.0));
        return checked("rem:tau-tilde/derivative", "ball",
                       "slope of 2 tau at 0 along e1 meets the upper limit "
                       "1/d(0)",
                       1.0, v, kTolDeriv * scale, "stated");
    });

    reg.add("thm:monotonicity/increasing", [](double scale) {
        struct Probe {
            DomainPtr d;
            MetricKind m;
            Point dir;
            double t_max;
        };
        std::vector<Probe> probes;
        auto g1 = make_g1(pt(1.0, 0.0));
        auto g2 = make_g2(pt(1.0, 0.0));
        auto quad = make_quadrant(pt(1.0, 1.0));
        auto notched = make_circular_notched();
        auto comb = make_comb(6);
        probes.push_back(
            {g1, MetricKind::j, g1->nearest_boundary_direction(), 0.9});
        probes.push_back({g2, MetricKind::k, pt(1.0, 0.0), 0.9});
        probes.push_back({quad, MetricKind::alpha,
                          quad->nearest_boundary_direction(),
                          0.9 * std::sqrt(2.0)});
        probes.push_back({notched, MetricKind::s,
                          notched->nearest_boundary_direction(),
                          0.9 * (std::sqrt(2.0) - 1.0)});
        probes.push_back({comb, MetricKind::v, pt(0.0, 1.0), 0.45});
        double least = 1.0;
        std::string at;
        for (const Probe& pr : probes) {
            ProfileTable tab = profile(*pr.d, pr.m, pr.dir, pr.t_max, 16);
            for (std::size_t i = 1; i + 1 < tab.rows.size(); ++i) {
                const double inc = *tab.rows[i + 1].f - *tab.rows[i].f;
                if (inc < least) {
                    least = inc;
                    at = std::string(metric_name(pr.m)) + " on " + pr.d->tag();
                }
            }
        }
        ClaimRecord r = checked(
            "thm:monotonicity/increasing", "-",
            "j, k, alpha, s, v grow strictly along canonical rays; 16-step "
            "grids on g1, g2, quadrant, circular_notched, comb",
            0.0, clamp0(-least), kTolExact * scale, "derived");
        r.note = "smallest increment " + fmt(least) + " (" + at + ")";
        return r;
    });
}

void register_corollary_claims(Registry& reg) {
    // Slopes at 0 along a ray that misses the boundary entirely; the claimed
    // constants are direction-free.
    auto off_ray = []() {
        return std::make_pair(make_g1(pt(1.0, 0.0)), pt(0.0, 1.0));
    };

    reg.add("cor:any-direction/derivative-j", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::j, dir);
        return checked("cor:any-direction/derivative-j", "g1",
                       "slope of j at 0 along e2, a ray missing the boundary",
                       1.0, v, kTolDeriv * scale, "stated");
    });
    reg.add("cor:any-direction/derivative-k", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::k, dir);
        return checked("cor:any-direction/derivative-k", "g1",
                       "slope of k at 0 along e2, a ray missing the boundary",
                       1.0, v, kTolDeriv * scale, "stated");
    });
    reg.add("cor:any-direction/derivative-sigma-tilde", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::sigma_tilde, dir);
        return checked("cor:any-direction/derivative-sigma-tilde", "g1",
                       "slope of (4/pi) sigma at 0 along e2, a ray missing "
                       "the boundary",
                       1.0, v, kTolDeriv * scale, "stated");
    });
    reg.add("cor:any-direction/derivative-c", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::c, dir);
        ClaimRecord r = checked("cor:any-direction/derivative-c", "g1",
                                "slope of c at 0 along e2, a ray missing the "
                                "boundary, d(0) = 1",
                                1.0, v, kTolDeriv * scale, "stated");
        r.note = "checked at unit scale; for the scale defect of the stated "
                 "constant see thm:cassinian/derivative";
        return r;
    });
    reg.add("cor:any-direction/derivative-alpha", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::alpha, dir);
        return discrepancy(
            "cor:any-direction/derivative-alpha", "g1",
            "stated lower limit 1/d(0) for the slope of alpha at 0 along e2, "
            "a ray missing the boundary",
            1.0, v, kTolDeriv * scale, "stated",
            "measured slope " + fmt(v) + " = sqrt(2) - 1; both boundary sups "
            "lose their on-ray witness when the ray misses the boundary, so "
            "the bracket only holds along rays toward the boundary "
            "(thm:f-for-alpha records); the upper limit 2/d(0) still holds");
    });
    reg.add("cor:any-direction/derivative-delta", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::delta, dir);
        ClaimRecord r =
            checked("cor:any-direction/derivative-delta", "g1",
                    "slope of delta at 0 along e2 stays within [1/d(0), "
                    "2/d(0)] although the ray misses the boundary",
                    0.0, interval_gap(v, 1.0, 2.0), kTolDeriv * scale,
                    "derived");
        r.note = "measured slope " + fmt(v);
        return r;
    });
    reg.add("cor:any-direction/derivative-tau-tilde", [off_ray](double scale) {
        auto [d, dir] = off_ray();
        const double v = slope_at_zero(*d, MetricKind::tau_tilde, dir);
        ClaimRecord r =
            checked("cor:any-direction/derivative-tau-tilde", "g1",
                    "slope of 2 tau at 0 along e2 stays within [0, 1/d(0)]",
                    0.0, interval_gap(v, 0.0, 1.0), kTolDeriv * scale,
                    "derived");
        r.note = "measured slope " + fmt(v);
        return r;
    });
}

Registry build_registry() {
    Registry reg;
    register_example_claims(reg);
    reg.add("exa:simple-domain/piecewise",
            [](double scale) { return example31_records(scale)[0]; });
    reg.add("exa:simple-domain/far-branch",
            [](double scale) { return example31_records(scale)[1]; });
    reg.add("exa:simple-domain/branch-continuity",
            [](double scale) { return example31_records(scale)[2]; });
    register_lemma_claims(reg);
    register_prop_claims(reg);
    register_boundary_claims(reg);
    register_metric_claims(reg);
    register_corollary_claims(reg);
    std::sort(reg.items.begin(), reg.items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return reg;
}

}  // namespace

int SuiteReport::passed() const {
    return static_cast<int>(std::count_if(
        claims.begin(), claims.end(),
        [](const ClaimRecord& c) { return c.status == "pass"; }));
}

int SuiteReport::failed() const {
    return static_cast<int>(std::count_if(
        claims.begin(), claims.end(),
        [](const ClaimRecord& c) { return c.status == "fail"; }));
}

int SuiteReport::flagged() const {
    return static_cast<int>(std::count_if(
        claims.begin(), claims.end(),
        [](const ClaimRecord& c) { return c.status == "flagged"; }));
}

SuiteReport run_suite(const std::vector<std::string>& selection,
                      double tol_scale) {
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
        throw PreconditionError("run_suite: tol_scale must be positive");
    Registry reg = build_registry();
    SuiteReport rep;
    rep.tol_scale = tol_scale;
    for (const auto& [id, builder] : reg.items) {
        bool wanted = selection.empty();
        for (const std::string& sel : selection)
            if (!wanted && id.compare(0, sel.size(), sel) == 0) wanted = true;
        if (wanted) rep.claims.push_back(builder(tol_scale));
    }
    return rep;
}

std::vector<ClaimRecord> comb_extrema_check(int max_l) {
    if (max_l < 0 || max_l > 18)
        throw PreconditionError(
            "comb_extrema_check: max_l must lie in [0, 18]");
    auto d = make_comb(20);
    std::vector<ClaimRecord> out;
    for (int l = 0; l <= max_l; ++l) {
        const CombProbe c = comb_probe(*d, l);
        const std::string suffix = "-l" + std::to_string(l);
        out.push_back(checked(
            "exa:comb/foot" + suffix, "comb",
            "g(" + fmt(c.foot_t) + ") vs 2^-(l+1)",
            std::ldexp(1.0, -(l + 1)), c.foot_g, kTolExact, "construction"));
        ClaimRecord mid = checked(
            "exa:comb/estimate2" + suffix, "comb",
            "g(" + fmt(c.mid_t) + ") vs sqrt(65)*2^-(l+4)", c.stated_mid,
            c.mid_g, kTolExact, "stated");
        if (mid.status == "fail")
            mid.note = "the nearest tooth point sits inside the segment, off "
                       "its anchor";
        out.push_back(std::move(mid));
        const double margin = c.mid_g - c.foot_g;
        ClaimRecord strict =
            checked("exa:comb/strict" + suffix, "comb",
                    "g(" + fmt(c.mid_t) + ") > g(" + fmt(c.foot_t) + ")", 0.0,
                    clamp0(-margin), kTolExact, "derived");
        strict.note = "margin " + fmt(margin);
        out.push_back(std::move(strict));
    }
    return out;
}

std::vector<ClaimRecord> example31_check() { return example31_records(1.0); }

Json report_json(const SuiteReport& r) {
    Json j;
    j["suite"] = "growth-claims";
    j["tol_scale"] = r.tol_scale;
    j["counts"] = Json{{"pass", r.passed()},
                       {"fail", r.failed()},
                       {"flagged", r.flagged()}};
    Json claims = Json::array();
    for (const ClaimRecord& c : r.claims) {
        Json e;
        e["claim_id"] = c.claim_id;
        e["status"] = c.status;
        e["domain"] = c.domain;
        e["inputs"] = c.inputs;
        e["expected"] = c.expected;
        e["observed"] = c.observed;
        e["tolerance"] = c.tolerance;
        e["provenance"] = c.provenance;
        if (!c.note.empty()) e["note"] = c.note;
        claims.push_back(std::move(e));
    }
    j["claims"] = std::move(claims);
    return j;
}

std::string report_text(const SuiteReport& r) {
    std::string out;
    char line[192];
    std::snprintf(line, sizeof line, "%-8s %-46s %14s %14s\n", "status",
                  "claim", "expected", "observed");
    out += line;
    out += std::string(85, '-') + "\n";
    for (const ClaimRecord& c : r.claims) {
        std::snprintf(line, sizeof line, "%-8s %-46s %14.6g %14.6g\n",
                      c.status.c_str(), c.claim_id.c_str(), c.expected,
                      c.observed);
        out += line;
    }
    std::snprintf(line, sizeof line,
                  "\n%d pass, %d fail, %d flagged (tolerance scale %g)\n",
                  r.passed(), r.failed(), r.flagged(), r.tol_scale);
    out += line;
    return out;
}

}  // namespace hypgrow
