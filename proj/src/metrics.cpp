#include "hypgrow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace hypgrow {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_inside(const Domain& d, const Point& p, const char* label) {
    if (static_cast<int>(p.c.size()) != d.dim())
        throw PreconditionError(std::string(label) + ": dimension mismatch");
    if (!d.contains(p))
        throw OutsideDomainError(std::string(label) + " is not inside the domain");
}

MetricResult zero_result() {
    MetricResult r;
    r.method = "closed_form";
    return r;
}

MetricResult exact_result(double value, const char* method) {
    MetricResult r;
    r.value = value;
    r.lower = value;
    r.upper = value;
    r.method = method;
    return r;
}

MetricResult from_sup(const SupResult& s) {
    MetricResult r;
    r.value = s.value;
    r.lower = s.value;
    r.upper = s.value;
    r.witness_a = s.witness_a;
    r.witness_b = s.witness_b;
    r.method = "sup_solver";
    return r;
}

// ---- quasihyperbolic helpers ----------------------------------------------

// Certifies [u,w] subset of G via 1-Lipschitz continuity of the boundary
// distance: once every sample keeps d > spacing/2, no zero can hide between
// samples. Gives up (conservatively false) if certification needs more than
// 2^14 samples.
bool segment_strictly_inside(const Domain& dom, const Point& u, const Point& w) {
    const double L = dist(u, w);
    if (L == 0.0) return true;
    for (int lev = 6; lev <= 14; ++lev) {
        const int n = 1 << lev;
        const double h = L / n;
        double mind = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= n; ++i) {
            Point p = u + (static_cast<double>(i) / n) * (w - u);
            if (!dom.contains(p)) return false;
            mind = std::min(mind, dom.dist_boundary(p));
        }
        if (mind > h / 2) return true;
    }
    return false;
}

double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// Integral of 1/d_G along the straight segment, adaptive Simpson split into
// panels first because d_G has kinks where the nearest boundary piece changes.
double segment_integral(const Domain& dom, const Point& u, const Point& w) {
    const double L = dist(u, w);
    auto f = [&](double t) { return 1.0 / dom.dist_boundary(u + t * (w - u)); };
    const int panels = 16;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = static_cast<double>(i) / panels;
        const double b = static_cast<double>(i + 1) / panels;
        const double m = 0.5 * (a + b);
        const double fa = f(a), fm = f(m), fb = f(b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_rec(f, a, m, b, fa, fm, fb, whole, 1e-9, 28);
    }
    return L * total;
}

// One 8-neighbor Dijkstra run on a lattice of spacing h anchored at u.
// Edges are admitted only when d(a) + d(b) > |e|, which by Lipschitz
// continuity certifies the edge stays inside the domain, so every path value
// is the trapezoid estimate of a genuine in-domain polygonal curve.
bool dijkstra_k(const Domain& dom, const Point& u, const Point& w, double h, double& out) {
    const double pad =
        2.0 * std::max({dist(u, w), dom.dist_boundary(u), dom.dist_boundary(w)}) + 2.0 * h;
    const double lox = std::min(u[0], w[0]) - pad, hix = std::max(u[0], w[0]) + pad;
    const double loy = std::min(u[1], w[1]) - pad, hiy = std::max(u[1], w[1]) + pad;
    const int imin = static_cast<int>(std::ceil((lox - u[0]) / h));
    const int imax = static_cast<int>(std::floor((hix - u[0]) / h));
    const int jmin = static_cast<int>(std::ceil((loy - u[1]) / h));
    const int jmax = static_cast<int>(std::floor((hiy - u[1]) / h));
    const int nx = imax - imin + 1, ny = jmax - jmin + 1;
    const long total = static_cast<long>(nx) * ny;

    std::vector<double> dval(total, -1.0);
    auto id = [&](int i, int j) {
        return static_cast<long>(j - jmin) * nx + (i - imin);
    };
    for (int j = jmin; j <= jmax; ++j) {
        for (int i = imin; i <= imax; ++i) {
            Point p{{u[0] + i * h, u[1] + j * h}};
            if (dom.contains(p)) dval[id(i, j)] = dom.dist_boundary(p);
        }
    }

    // w joins as an extra node wired to the surrounding lattice cells.
    const int iw = static_cast<int>(std::lround((w[0] - u[0]) / h));
    const int jw = static_cast<int>(std::lround((w[1] - u[1]) / h));
    const bool w_on_lattice =
        std::abs(w[0] - (u[0] + iw * h)) < 1e-12 && std::abs(w[1] - (u[1] + jw * h)) < 1e-12;
    const long target = w_on_lattice ? id(iw, jw) : total;
    const double dw = dom.dist_boundary(w);

    const long nnodes = total + (w_on_lattice ? 0 : 1);
    std::vector<double> best(nnodes, std::numeric_limits<double>::infinity());
    using QE = std::pair<double, long>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    best[id(0, 0)] = 0.0;
    pq.push({0.0, id(0, 0)});

    auto relax = [&](long to, double cand) {
        if (cand < best[to]) {
            best[to] = cand;
            pq.push({cand, to});
        }
    };

    while (!pq.empty()) {
        auto [dist_a, a] = pq.top();
        pq.pop();
        if (dist_a > best[a]) continue;
        if (a == target) break;
        if (a == total) continue;  // the extra node only terminates paths
        const int ia = imin + static_cast<int>(a % nx);
        const int ja = jmin + static_cast<int>(a / nx);
        const double da = dval[a];
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                if (di == 0 && dj == 0) continue;
                const int ib = ia + di, jb = ja + dj;
                if (ib < imin || ib > imax || jb < jmin || jb > jmax) continue;
                const long b = id(ib, jb);
                const double db = dval[b];
                if (db < 0.0) continue;
                const double len = h * std::sqrt(static_cast<double>(di * di + dj * dj));
                if (da + db <= len) continue;
                relax(b, dist_a + len * 0.5 * (1.0 / da + 1.0 / db));
            }
        }
        if (!w_on_lattice && std::abs(ia - iw) <= 1 && std::abs(ja - jw) <= 1) {
            Point pa{{u[0] + ia * h, u[1] + ja * h}};
            const double len = dist(pa, w);
            if (len < 1.5 * h && da + dw > len)
                relax(target, dist_a + len * 0.5 * (1.0 / da + 1.0 / dw));
        }
    }

    if (!std::isfinite(best[target])) return false;
    out = best[target];
    return true;
}

double graph_k_value(const Domain& dom, const Point& u, const Point& w) {
    const Point origin(static_cast<std::size_t>(dom.dim()));
    double h = dom.dist_boundary(origin) / 64.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    bool any = false;
    for (int iter = 0; iter < 4; ++iter, h /= 2.0) {
        const double pad =
            2.0 * std::max({dist(u, w), dom.dist_boundary(u), dom.dist_boundary(w)});
        const double span_x = std::abs(u[0] - w[0]) + 2.0 * pad;
        const double span_y = std::abs(u[1] - w[1]) + 2.0 * pad;
        if (span_x / h * (span_y / h) > 2.5e6) break;
        double v;
        if (!dijkstra_k(dom, u, w, h, v)) continue;
        if (any && std::abs(v - prev) < 1e-4) return v;
        prev = v;
        any = true;
    }
    if (!any)
        throw DisconnectedGridError(
            "no grid path between the endpoints; increase resolution");
    return prev;
}

// ---- degenerate boundary detection for the Apollonian distance ------------

bool solve3(double A[3][4]) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-14) return false;
        std::swap(A[piv], A[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            for (int cc = col; cc < 4; ++cc) A[r][cc] -= f * A[col][cc];
        }
    }
    for (int r = 0; r < 3; ++r) A[r][3] /= A[r][r];
    return true;
}

void require_nondegenerate_boundary(const Domain& dom) {
    const auto samples = dom.boundary_samples(64);
    std::vector<Point> pts;
    for (const auto& s : samples)
        if (!s.at_infinity) pts.push_back(s.p);
    const std::size_t n = pts.size();

    // Algebraic circle fit: x^2 + y^2 + D x + E y + F = 0 in least squares.
    double circle_res = std::numeric_limits<double>::infinity();
    {
        double A[3][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
        for (const auto& p : pts) {
            const double x = p[0], y = p[1], z = x * x + y * y;
            const double row[3] = {x, y, 1.0};
            for (int r = 0; r < 3; ++r) {
                for (int c2 = 0; c2 < 3; ++c2) A[r][c2] += row[r] * row[c2];
                A[r][3] += row[r] * (-z);
            }
        }
        if (solve3(A)) {
            const double cx = -A[0][3] / 2.0, cy = -A[1][3] / 2.0;
            const double r2 = cx * cx + cy * cy - A[2][3];
            if (r2 > 0.0) {
                const double r = std::sqrt(r2);
                circle_res = 0.0;
                for (const auto& p : pts)
                    circle_res = std::max(
                        circle_res, std::abs(std::hypot(p[0] - cx, p[1] - cy) - r));
            }
        }
    }

    // Total least squares line through the centroid.
    double line_res = std::numeric_limits<double>::infinity();
    if (n >= 2) {
        double mx = 0, my = 0;
        for (const auto& p : pts) {
            mx += p[0];
            my += p[1];
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double sxx = 0, sxy = 0, syy = 0;
        for (const auto& p : pts) {
            const double dx = p[0] - mx, dy = p[1] - my;
            sxx += dx * dx;
            sxy += dx * dy;
            syy += dy * dy;
        }
        // Normal direction: eigenvector of the smaller eigenvalue.
        const double tr = sxx + syy;
        const double det = sxx * syy - sxy * sxy;
        const double lam = tr / 2.0 - std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
        double nx = sxy, ny = lam - sxx;
        if (std::hypot(nx, ny) < 1e-14) {
            nx = lam - syy;
            ny = sxy;
        }
        if (std::hypot(nx, ny) < 1e-14) {
            nx = 1.0;
            ny = 0.0;
        }
        const double nn = std::hypot(nx, ny);
        line_res = 0.0;
        for (const auto& p : pts)
            line_res = std::max(line_res,
                                std::abs(((p[0] - mx) * nx + (p[1] - my) * ny) / nn));
    }

    if (std::min(circle_res, line_res) < 1e-9)
        throw DegenerateBoundaryError(
            "boundary lies on a single circle or line; this distance is degenerate");
}

// ---- visual angle helpers --------------------------------------------------

// Least boundary distance along [u,w] and where it occurs: coarse scan plus
// golden refinement of the lowest brackets. Used to recognize segments that
// touch the boundary.
double segment_min_boundary_dist(const Domain& dom, const Point& u, const Point& w,
                                 double& t_at_min) {
    const int n = 512;
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) {
        Point p = u + (static_cast<double>(i) / n) * (w - u);
        if (!dom.contains(p)) {
            t_at_min = static_cast<double>(i) / n;
            return 0.0;
        }
        vals[i] = dom.dist_boundary(p);
    }
    std::vector<int> order(n + 1);
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals[a] != vals[b]) return vals[a] < vals[b];
        return a < b;
    });
    double best = vals[order[0]];
    t_at_min = static_cast<double>(order[0]) / n;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int pick = 0; pick < 5 && pick <= n; ++pick) {
        const int i = order[pick];
        double a = static_cast<double>(std::max(0, i - 1)) / n;
        double b = static_cast<double>(std::min(n, i + 1)) / n;
        auto g = [&](double t) { return dom.dist_boundary(u + t * (w - u)); };
        double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
        double g1 = g(x1), g2 = g(x2);
        while (b - a > 1e-13) {
            if (g1 <= g2) {
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
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm < best) {
            best = gm;
            t_at_min = mid;
        }
    }
    return best;
}

MetricResult v_value(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    if (dist(u, w) == 0.0) return zero_result();

    // A boundary point on the segment sees the endpoints at a straight angle.
    double t_touch = 0.0;
    const double mind = segment_min_boundary_dist(d, u, w, t_touch);
    if (mind <= 1e-9) {
        MetricResult r = exact_result(kPi, "closed_form");
        r.witness_a = BoundaryPoint::finite(u + t_touch * (w - u));
        return r;
    }

    BoundaryFunctional F = [&u, &w](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return angle(u, q.p, w);
    };
    return from_sup(sup_boundary(d, F));
}

MetricResult s_value(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    const double uw = dist(u, w);
    if (uw == 0.0) return zero_result();
    BoundaryFunctional F = [&u, &w, uw](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return uw / (dist(q.p, u) + dist(q.p, w));
    };
    return from_sup(sup_boundary(d, F));
}

MetricResult transform_of(const MetricResult& base, double value) {
    MetricResult r = base;
    r.value = value;
    r.lower = value;
    r.upper = value;
    return r;
}

double json_number(const Json& j, const char* key) { return j.at(key).get<double>(); }

Point json_point(const Json& j, const char* key) {
    Point p;
    p.c = j.at(key).get<std::vector<double>>();
    return p;
}

}  // namespace

// ---- names ------------------------------------------------------------------

const char* metric_name(MetricKind m) {
    switch (m) {
        case MetricKind::j: return "j";
        case MetricKind::k: return "k";
        case MetricKind::s: return "s";
        case MetricKind::sigma: return "sigma";
        case MetricKind::sigma_tilde: return "sigma_tilde";
        case MetricKind::c: return "c";
        case MetricKind::alpha: return "alpha";
        case MetricKind::delta: return "delta";
        case MetricKind::v: return "v";
        case MetricKind::tau: return "tau";
        case MetricKind::tau_tilde: return "tau_tilde";
        case MetricKind::rho_ball: return "rho_ball";
        case MetricKind::rho_halfspace: return "rho_halfspace";
    }
    return "?";
}

MetricKind metric_from_name(const std::string& name) {
    static const MetricKind all[] = {
        MetricKind::j,     MetricKind::k,         MetricKind::s,
        MetricKind::sigma, MetricKind::sigma_tilde, MetricKind::c,
        MetricKind::alpha, MetricKind::delta,     MetricKind::v,
        MetricKind::tau,   MetricKind::tau_tilde, MetricKind::rho_ball,
        MetricKind::rho_halfspace,
    };
    for (MetricKind m : all)
        if (name == metric_name(m)) return m;
    throw ParseError("unknown metric '" + name +
                     "'; expected one of j, k, s, sigma, sigma_tilde, c, alpha, "
                     "delta, v, tau, tau_tilde, rho_ball, rho_halfspace");
}

KMethod k_method_from_name(const std::string& name) {
    if (name == "auto") return KMethod::automatic;
    if (name == "closed_form") return KMethod::closed_form;
    if (name == "graph") return KMethod::graph;
    if (name == "segment_upper") return KMethod::segment_upper;
    throw ParseError("unknown k method '" + name +
                     "'; expected auto, closed_form, graph or segment_upper");
}

// ---- reference closed forms ---------------------------------------------------

double rho_halfspace(double b, const Point& u, const Point& w) {
    const std::size_t n = u.c.size();
    if (w.c.size() != n || n < 2) throw PreconditionError("points must share a dimension");
    const double ub = u.c[n - 1] - b, wb = w.c[n - 1] - b;
    if (ub <= 0.0 || wb <= 0.0)
        throw OutsideDomainError("point is not inside the half space");
    const double t = dist(u, w);
    return std::acosh(1.0 + t * t / (2.0 * ub * wb));
}

double rho_ball(const Point& center, double r, const Point& u, const Point& w) {
    if (r <= 0.0) throw PreconditionError("radius must be positive");
    const Point a = u - center, b = w - center;
    const double na = norm(a), nb = norm(b);
    if (na >= r || nb >= r) throw OutsideDomainError("point is not inside the ball");
    const double t = dist(a, b);
    const double den = std::sqrt(1.0 - na * na / (r * r)) * std::sqrt(1.0 - nb * nb / (r * r));
    return std::asinh((t / r) / den);
}

// ---- the seven distances ------------------------------------------------------

MetricResult j_dist(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    const double t = dist(u, w);
    if (t == 0.0) return zero_result();
    const double md = std::min(d.dist_boundary(u), d.dist_boundary(w));
    return exact_result(std::log1p(t / md), "closed_form");
}

MetricResult k_dist(const Domain& d, const Point& u, const Point& w, KMethod method) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    if (dist(u, w) == 0.0) return zero_result();

    const std::string tag = d.tag();
    const bool want_auto = method == KMethod::automatic;

    if (want_auto || method == KMethod::closed_form) {
        if (tag == "ball") {
            const Json spec = d.to_json();
            const Point c = json_point(spec, "center");
            const double r = json_number(spec, "radius");
            const Point a = u - c, b = w - c;
            const double na = norm(a), nb = norm(b);
            const double cross = std::abs(a[0] * b[1] - a[1] * b[0]);
            if (cross <= 1e-12 * std::max(na * nb, 1e-30)) {
                const Point e = normalized(na >= nb ? a : b);
                auto anti = [r](double s) {
                    return s >= 0.0 ? std::log(r / (r - s)) : -std::log(r / (r + s));
                };
                return exact_result(std::abs(anti(dot(b, e)) - anti(dot(a, e))),
                                    "closed_form");
            }
        } else if (tag == "half_space") {
            const double b = json_number(d.to_json(), "b");
            if (std::abs(u[0] - w[0]) <= 1e-12)
                return exact_result(std::abs(std::log((u[1] - b) / (w[1] - b))),
                                    "closed_form");
        }
        if (method == KMethod::closed_form)
            throw PreconditionError(
                "closed form needs a ball pair collinear with the center or a "
                "vertical half-space pair");
    }

    const double lower = j_dist(d, u, w).value;

    if (method == KMethod::segment_upper || want_auto) {
        if (segment_strictly_inside(d, u, w)) {
            const double up = segment_integral(d, u, w);
            MetricResult r;
            r.value = up;
            r.lower = lower;
            r.upper = up;
            r.method = "segment_integral";
            return r;
        }
        if (method == KMethod::segment_upper)
            throw PreconditionError("segment between the points leaves the domain");
    }

    const double up = graph_k_value(d, u, w);
    MetricResult r;
    r.value = up;
    r.lower = lower;
    r.upper = up;
    r.method = "graph_approx";
    return r;
}

SFamily s_family(const Domain& d, const Point& u, const Point& w) {
    SFamily out;
    out.s = s_value(d, u, w);
    if (out.s.value >= 1.0 - 1e-12)
        throw OverflowError("triangular ratio too close to 1; tangent transform blows up");
    const double sig = std::tan(kPi * out.s.value / 2.0);
    out.sigma = transform_of(out.s, sig);
    out.sigma_tilde = transform_of(out.s, 4.0 / kPi * sig);
    return out;
}

MetricResult c_dist(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    const double uw = dist(u, w);
    if (uw == 0.0) return zero_result();
    BoundaryFunctional F = [&u, &w, uw](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return uw / (dist(q.p, u) * dist(q.p, w));
    };
    return from_sup(sup_boundary(d, F));
}

MetricResult alpha_dist(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    require_nondegenerate_boundary(d);
    if (dist(u, w) == 0.0) return zero_result();
    BoundaryFunctional Fa = [&u, &w](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return std::log(dist(q.p, w) / dist(q.p, u));
    };
    BoundaryFunctional Fb = [&u, &w](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return std::log(dist(q.p, u) / dist(q.p, w));
    };
    return from_sup(sup_boundary_pairs_separable(d, Fa, Fb));
}

MetricResult delta_dist(const Domain& d, const Point& u, const Point& w) {
    require_inside(d, u, "u");
    require_inside(d, w, "w");
    const double uw = dist(u, w);
    if (uw == 0.0) return zero_result();

    BoundaryPairFunctional F = [&u, &w, uw](const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.at_infinity && b.at_infinity) return 0.0;
        if (a.at_infinity) return std::log1p(uw / dist(b.p, w));
        if (b.at_infinity) return std::log1p(uw / dist(a.p, u));
        return std::log1p(dist(a.p, b.p) * uw / (dist(a.p, u) * dist(b.p, w)));
    };
    MetricResult r = from_sup(sup_boundary_pairs(d, F));

    double lo = 0.0;
    try {
        lo = alpha_dist(d, u, w).value;
    } catch (const DegenerateBoundaryError&) {
        lo = 0.0;
    }
    const double du = d.dist_boundary(u), dw = d.dist_boundary(w);
    r.lower = lo;
    r.upper = std::log1p(uw / du + uw / dw + uw * uw / (du * dw));
    r.method = "sup_solver";
    return r;
}

VFamily v_family(const Domain& d, const Point& u, const Point& w) {
    VFamily out;
    out.v = v_value(d, u, w);
    if (out.v.value >= kPi - 1e-12)
        throw OverflowError("visual angle reaches pi; tangent transform blows up");
    const double t = std::tan(out.v.value / 2.0);
    out.tau = transform_of(out.v, t);
    out.tau_tilde = transform_of(out.v, 2.0 * t);
    return out;
}

MetricResult evaluate(const Domain& d, MetricKind m, const Point& u, const Point& w) {
    switch (m) {
        case MetricKind::j:
            return j_dist(d, u, w);
        case MetricKind::k:
            return k_dist(d, u, w);
        case MetricKind::s:
            return s_value(d, u, w);
        case MetricKind::sigma:
            return s_family(d, u, w).sigma;
        case MetricKind::sigma_tilde:
            return s_family(d, u, w).sigma_tilde;
        case MetricKind::c:
            return c_dist(d, u, w);
        case MetricKind::alpha:
            return alpha_dist(d, u, w);
        case MetricKind::delta:
            return delta_dist(d, u, w);
        case MetricKind::v:
            return v_value(d, u, w);
        case MetricKind::tau:
            return v_family(d, u, w).tau;
        case MetricKind::tau_tilde:
            return v_family(d, u, w).tau_tilde;
        case MetricKind::rho_ball: {
            if (d.tag() != "ball")
                throw PreconditionError("rho_ball needs a ball domain");
            const Json spec = d.to_json();
            return exact_result(
                rho_ball(json_point(spec, "center"), json_number(spec, "radius"), u, w),
                "closed_form");
        }
        case MetricKind::rho_halfspace: {
            if (d.tag() != "half_space")
                throw PreconditionError("rho_halfspace needs a half-space domain");
            return exact_result(rho_halfspace(json_number(d.to_json(), "b"), u, w),
                                "closed_form");
        }
    }
    throw PreconditionError("unhandled metric kind");
}

}  // namespace hypgrow
