#include "hypgrow/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace hypgrow {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_int(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

Point rotate2(const Point& v, double ang) {
    const double c = std::cos(ang), s = std::sin(ang);
    return Point{c * v[0] - s * v[1], s * v[0] + c * v[1]};
}

Point rot90(const Point& v) { return Point{-v[1], v[0]}; }

void require_planar(int d, const char* op) {
    if (d != 2)
        throw PreconditionError(std::string(op) + " is only defined for planar domains");
}

// Golden-section minimization of f on [lo, hi], assuming the bracket holds a
// single local minimum; returns the abscissa. Fixed shrink schedule keeps the
// result bit-stable across runs.
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol = 1e-12) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Minimum of f over [lo, hi]: coarse scan, golden refinement around the three
// best coarse brackets, endpoints included.
template <typename F>
double scan_min(F&& f, double lo, double hi, int coarse = 33) {
    double best = std::min(f(lo), f(hi));
    std::vector<std::pair<double, int>> vals;
    vals.reserve(coarse);
    for (int i = 0; i < coarse; ++i) {
        double s = lo + (hi - lo) * i / (coarse - 1);
        vals.emplace_back(f(s), i);
    }
    std::sort(vals.begin(), vals.end());
    for (int k = 0; k < 3 && k < (int)vals.size(); ++k) {
        int i = vals[k].second;
        double a = lo + (hi - lo) * std::max(0, i - 1) / (coarse - 1);
        double b = lo + (hi - lo) * std::min(coarse - 1, i + 1) / (coarse - 1);
        double s = golden_min(f, a, b);
        best = std::min(best, f(s));
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundaryCurve

BoundaryCurve BoundaryCurve::segment(Point a, Point b) {
    BoundaryCurve c;
    c.kind = Kind::segment;
    c.a = std::move(a);
    c.b = std::move(b);
    return c;
}

BoundaryCurve BoundaryCurve::arc(Point center, double radius, double theta0, double theta1) {
    BoundaryCurve c;
    c.kind = Kind::arc;
    c.center = std::move(center);
    c.radius = radius;
    c.theta0 = theta0;
    c.theta1 = theta1;
    return c;
}

BoundaryCurve BoundaryCurve::ray(Point apex, const Point& dir, double scale) {
    BoundaryCurve c;
    c.kind = Kind::ray;
    c.a = std::move(apex);
    c.dir = normalized(dir);
    c.scale = scale;
    return c;
}

BoundaryCurve BoundaryCurve::line(Point foot, const Point& dir, double scale) {
    BoundaryCurve c;
    c.kind = Kind::line;
    c.a = std::move(foot);
    c.dir = normalized(dir);
    c.scale = scale;
    return c;
}

BoundaryCurve BoundaryCurve::graph(double s0, double s1, double sign, int expo) {
    BoundaryCurve c;
    c.kind = Kind::graph;
    c.s0 = s0;
    c.s1 = s1;
    c.sign = sign;
    c.expo = expo;
    return c;
}

BoundaryPoint BoundaryCurve::eval(double u) const {
    switch (kind) {
        case Kind::segment:
            if (u <= 0.0) return BoundaryPoint::finite(a);
            if (u >= 1.0) return BoundaryPoint::finite(b);
            return BoundaryPoint::finite(a + u * (b - a));
        case Kind::arc: {
            double th = theta0 + u * (theta1 - theta0);
            return BoundaryPoint::finite(
                Point{center[0] + radius * std::cos(th), center[1] + radius * std::sin(th)});
        }
        case Kind::ray: {
            if (u >= 1.0) return BoundaryPoint::infinity(dir);
            double v = std::max(u, 0.0);
            return BoundaryPoint::finite(a + (scale * v / (1.0 - v)) * dir);
        }
        case Kind::line: {
            if (u <= 0.0) return BoundaryPoint::infinity(-1.0 * dir);
            if (u >= 1.0) return BoundaryPoint::infinity(dir);
            return BoundaryPoint::finite(a + (scale * std::tan(kPi * (u - 0.5))) * dir);
        }
        case Kind::graph: {
            double v = std::clamp(u, 0.0, 1.0);
            double s = s0 + v * (s1 - s0);
            return BoundaryPoint::finite(Point{s, sign * pow_int(1.0 - std::abs(s), expo)});
        }
    }
    throw PreconditionError("BoundaryCurve::eval: bad kind");
}

// ---------------------------------------------------------------------------
// boundary node layout

namespace {

bool full_circle(const BoundaryCurve& c) {
    return c.kind == BoundaryCurve::Kind::arc &&
           std::abs((c.theta1 - c.theta0) - 2.0 * kPi) < 1e-12;
}

}  // namespace

int curve_node_count(const BoundaryCurve& c, int base) {
    switch (c.kind) {
        case BoundaryCurve::Kind::arc:
            if (full_circle(c)) {
                // A multiple of 8 keeps the axis points exact after snapping.
                int k = std::max(8, base);
                return ((k + 7) / 8) * 8;
            }
            [[fallthrough]];
        case BoundaryCurve::Kind::segment:
        case BoundaryCurve::Kind::graph:
        case BoundaryCurve::Kind::line: {
            int k = std::max(9, base);
            return (k % 2 == 0) ? k + 1 : k;
        }
        case BoundaryCurve::Kind::ray:
            return std::max(8, base);
    }
    throw PreconditionError("curve_node_count: bad kind");
}

double curve_node_param(const BoundaryCurve& c, int count, int i) {
    switch (c.kind) {
        case BoundaryCurve::Kind::arc:
            if (full_circle(c)) return static_cast<double>(i) / count;
            [[fallthrough]];
        case BoundaryCurve::Kind::segment:
        case BoundaryCurve::Kind::graph:
            return static_cast<double>(i) / (count - 1);
        case BoundaryCurve::Kind::ray:
            // u = i/count places the apex exactly, u = 1 stays the marker.
            return static_cast<double>(i) / count;
        case BoundaryCurve::Kind::line:
            // Interior nodes only; an odd count puts one node on the foot.
            return static_cast<double>(i + 1) / (count + 1);
    }
    throw PreconditionError("curve_node_param: bad kind");
}

std::vector<BoundaryPoint> Domain::boundary_samples(int budget) const {
    if (budget < 8) throw PreconditionError("boundary_samples: budget must be >= 8");
    const auto curves = boundary_curves();
    if (curves.empty()) throw PreconditionError("boundary_samples: domain has no boundary curves");
    const int nc = static_cast<int>(curves.size());
    const int base = (budget + nc - 1) / nc;

    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<std::size_t>(base + 2) * nc);

    static const double rt = std::sqrt(0.5);
    static const double cardinal[8][2] = {{1, 0},  {rt, rt},   {0, 1},  {-rt, rt},
                                          {-1, 0}, {-rt, -rt}, {0, -1}, {rt, -rt}};

    for (const auto& c : curves) {
        const int k = curve_node_count(c, base);
        if (full_circle(c)) {
            for (int i = 0; i < k; ++i) {
                if ((8LL * i) % k == 0) {
                    int j = static_cast<int>(8LL * i / k);
                    out.push_back(BoundaryPoint::finite(
                        Point{c.center[0] + c.radius * cardinal[j][0],
                              c.center[1] + c.radius * cardinal[j][1]}));
                } else {
                    out.push_back(c.eval(curve_node_param(c, k, i)));
                }
            }
        } else {
            for (int i = 0; i < k; ++i) out.push_back(c.eval(curve_node_param(c, k, i)));
        }
    }
    for (const auto& d : infinity_directions()) out.push_back(BoundaryPoint::infinity(d));
    return out;
}

// ---------------------------------------------------------------------------
// Concrete domains

namespace {

class BallDomain final : public Domain {
  public:
    BallDomain(Point center, double radius) : c_(std::move(center)), r_(radius) {
        if (!(r_ > 0.0)) throw PreconditionError("ball: radius must be positive");
        if (!(norm(c_) < r_)) throw PreconditionError("ball: origin must be interior");
    }

    int dim() const override { return static_cast<int>(c_.dim()); }
    std::string tag() const override { return "ball"; }

    bool contains(const Point& p) const override { return dist(p, c_) < r_; }

    double dist_boundary(const Point& p) const override {
        double d = r_ - dist(p, c_);
        if (d <= 0.0) throw OutsideDomainError("dist_boundary: point not in ball");
        return d;
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        require_planar(dim(), "boundary_curves");
        return {BoundaryCurve::arc(c_, r_, 0.0, 2.0 * kPi)};
    }

    std::vector<Point> infinity_directions() const override { return {}; }

    Point nearest_boundary_direction() const override {
        if (norm(c_) > 0.0) return normalized(-1.0 * c_);
        Point u(c_.dim());
        u[0] = -1.0;
        return u;
    }

    Json to_json() const override {
        return Json{{"type", "ball"}, {"center", c_.c}, {"radius", r_}};
    }

  private:
    Point c_;
    double r_;
};

class HalfSpaceDomain final : public Domain {
  public:
    explicit HalfSpaceDomain(double b) : b_(b) {
        if (!(b_ < 0.0)) throw PreconditionError("half_space: b must be negative");
    }

    int dim() const override { return 2; }
    std::string tag() const override { return "half_space"; }

    bool contains(const Point& p) const override { return p[p.dim() - 1] > b_; }

    double dist_boundary(const Point& p) const override {
        double d = p[p.dim() - 1] - b_;
        if (d <= 0.0) throw OutsideDomainError("dist_boundary: point not in half space");
        return d;
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        return {BoundaryCurve::line(Point{0.0, b_}, Point{1.0, 0.0}, std::max(1.0, -b_))};
    }

    std::vector<Point> infinity_directions() const override {
        return {Point{1.0, 0.0}, Point{-1.0, 0.0}};
    }

    Point nearest_boundary_direction() const override { return Point{0.0, -1.0}; }

    Json to_json() const override { return Json{{"type", "half_space"}, {"b", b_}}; }

  private:
    double b_;
};

// Complement of one or two closed sectors, optionally further cut by the
// closed half-plane {u : u.x <= -|x|^2}.
class SectorComplementDomain : public Domain {
  public:
    SectorComplementDomain(std::string tag, Point x, std::vector<Sector> sectors, bool cut_plane)
        : tag_(std::move(tag)), x_(std::move(x)), sectors_(std::move(sectors)), cut_(cut_plane) {
        xhat_ = normalized(x_);
        xnorm_ = norm(x_);
    }

    int dim() const override { return static_cast<int>(x_.dim()); }
    std::string tag() const override { return tag_; }

    bool contains(const Point& p) const override {
        for (const auto& s : sectors_)
            if (sector_contains(s, p)) return false;
        if (cut_ && !(dot(p, xhat_) > -xnorm_)) return false;
        return true;
    }

    double dist_boundary(const Point& p) const override {
        if (!contains(p)) throw OutsideDomainError("dist_boundary: point not in domain");
        double d = std::numeric_limits<double>::infinity();
        for (const auto& s : sectors_) d = std::min(d, dist_point_sector(p, s));
        if (cut_) d = std::min(d, dot(p, xhat_) + xnorm_);
        return d;
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        require_planar(dim(), "boundary_curves");
        std::vector<BoundaryCurve> out;
        for (const auto& s : sectors_) {
            double scale = std::max(1.0, norm(s.apex));
            out.push_back(BoundaryCurve::ray(s.apex, rotate2(s.axis, s.half_angle), scale));
            out.push_back(BoundaryCurve::ray(s.apex, rotate2(s.axis, -s.half_angle), scale));
        }
        if (cut_)
            out.push_back(
                BoundaryCurve::line(-1.0 * x_, rot90(xhat_), std::max(1.0, xnorm_)));
        return out;
    }

    std::vector<Point> infinity_directions() const override {
        require_planar(dim(), "infinity_directions");
        std::vector<Point> out;
        for (const auto& s : sectors_) {
            out.push_back(rotate2(s.axis, s.half_angle));
            out.push_back(rotate2(s.axis, -s.half_angle));
        }
        if (cut_) {
            out.push_back(rot90(xhat_));
            out.push_back(-1.0 * rot90(xhat_));
        }
        return out;
    }

    Json to_json() const override { return Json{{"type", tag_}, {"x", x_.c}}; }

  protected:
    std::string tag_;
    Point x_;
    Point xhat_;
    double xnorm_ = 0.0;
    std::vector<Sector> sectors_;
    bool cut_;
};

class G1Domain final : public SectorComplementDomain {
  public:
    explicit G1Domain(Point x)
        : SectorComplementDomain(
              "g1", x,
              {Sector::from_axis_point(-1.0 * x, -2.0 * x, kPi / 4.0),
               Sector::from_axis_point(3.0 * x, 4.0 * x, kPi / 4.0)},
              false) {}

    Point nearest_boundary_direction() const override { return -1.0 * xhat_; }
};

class G2Domain final : public SectorComplementDomain {
  public:
    explicit G2Domain(Point x)
        : SectorComplementDomain(
              "g2", x, {Sector::from_axis_point(x, 2.0 * x, kPi / 4.0)}, false) {}

    Point nearest_boundary_direction() const override { return xhat_; }
};

class G3Domain final : public SectorComplementDomain {
  public:
    explicit G3Domain(Point x)
        : SectorComplementDomain(
              "g3", x, {Sector::from_axis_point(x, 2.0 * x, kPi / 4.0)}, true) {}

    Point nearest_boundary_direction() const override {
        Point m = -1.0 * xhat_;
        return lex_less(m, xhat_) ? m : xhat_;
    }
};

class AlphaSharpDomain final : public SectorComplementDomain {
  public:
    explicit AlphaSharpDomain(Point x)
        : SectorComplementDomain(
              "alpha_sharp", x,
              {Sector::from_axis_point(-1.0 * x, -2.0 * x, kPi / 4.0),
               Sector::from_axis_point(x, 2.0 * x, kPi / 4.0)},
              false) {}

    Point nearest_boundary_direction() const override {
        Point m = -1.0 * xhat_;
        return lex_less(m, xhat_) ? m : xhat_;
    }
};

class QuadrantDomain final : public Domain {
  public:
    explicit QuadrantDomain(Point x) : x_(std::move(x)) {
        if (x_.dim() != 2) throw PreconditionError("quadrant: corner must be planar");
        if (!(x_[0] > 0.0 && x_[1] > 0.0))
            throw PreconditionError("quadrant: corner coordinates must be positive");
    }

    int dim() const override { return 2; }
    std::string tag() const override { return "quadrant"; }

    bool contains(const Point& p) const override {
        return !(p[0] >= x_[0] && p[1] >= x_[1]);
    }

    double dist_boundary(const Point& p) const override {
        if (!contains(p)) throw OutsideDomainError("dist_boundary: point not in domain");
        Point q{std::max(p[0], x_[0]), std::max(p[1], x_[1])};
        return dist(p, q);
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        double scale = std::max(1.0, norm(x_));
        return {BoundaryCurve::ray(x_, Point{1.0, 0.0}, scale),
                BoundaryCurve::ray(x_, Point{0.0, 1.0}, scale)};
    }

    std::vector<Point> infinity_directions() const override {
        return {Point{1.0, 0.0}, Point{0.0, 1.0}};
    }

    Point nearest_boundary_direction() const override { return normalized(x_); }

    Json to_json() const override { return Json{{"type", "quadrant"}, {"x", x_.c}}; }

  private:
    Point x_;
};

class CircularNotchedDomain final : public Domain {
  public:
    CircularNotchedDomain() {
        arcs_[0] = Arc{Point{1.0, 1.0}, 1.0, kPi, 1.5 * kPi};
        arcs_[1] = Arc{Point{-1.0, 1.0}, 1.0, 1.5 * kPi, 2.0 * kPi};
        arcs_[2] = Arc{Point{-1.0, -1.0}, 1.0, 0.0, 0.5 * kPi};
        arcs_[3] = Arc{Point{1.0, -1.0}, 1.0, 0.5 * kPi, kPi};
    }

    int dim() const override { return 2; }
    std::string tag() const override { return "circular_notched"; }

    bool contains(const Point& p) const override {
        if (!(norm(p) < 1.0)) return false;
        for (const auto& a : arcs_)
            if (!(dist(p, a.center) > 1.0)) return false;
        return true;
    }

    double dist_boundary(const Point& p) const override {
        if (!contains(p)) throw OutsideDomainError("dist_boundary: point not in domain");
        double d = std::numeric_limits<double>::infinity();
        for (const auto& a : arcs_) d = std::min(d, dist_point_arc(p, a));
        return d;
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        std::vector<BoundaryCurve> out;
        for (const auto& a : arcs_)
            out.push_back(BoundaryCurve::arc(a.center, a.radius, a.theta0, a.theta1));
        return out;
    }

    std::vector<Point> infinity_directions() const override { return {}; }

    Point nearest_boundary_direction() const override {
        return normalized(Point{-1.0, -1.0});
    }

    Json to_json() const override { return Json{{"type", "circular_notched"}}; }

  private:
    Arc arcs_[4];
};

class PolynomialDomain final : public Domain {
  public:
    explicit PolynomialDomain(int p) : p_(p) {
        if (p_ < 1) throw PreconditionError("polynomial: exponent must be a positive integer");
    }

    int dim() const override { return 2; }
    std::string tag() const override { return "polynomial"; }

    bool contains(const Point& q) const override {
        return std::abs(q[0]) < 1.0 && std::abs(q[1]) < pow_int(1.0 - std::abs(q[0]), p_);
    }

    double dist_boundary(const Point& q) const override {
        if (!contains(q)) throw OutsideDomainError("dist_boundary: point not in domain");
        double best = std::numeric_limits<double>::infinity();
        for (double sign : {1.0, -1.0}) {
            for (double lo : {-1.0, 0.0}) {
                const double hi = lo + 1.0;
                auto f = [&](double s) {
                    double dx = q[0] - s;
                    double dy = q[1] - sign * pow_int(1.0 - std::abs(s), p_);
                    return dx * dx + dy * dy;
                };
                best = std::min(best, scan_min(f, lo, hi));
            }
        }
        return std::sqrt(best);
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        return {BoundaryCurve::graph(0.0, 1.0, 1.0, p_),
                BoundaryCurve::graph(-1.0, 0.0, 1.0, p_),
                BoundaryCurve::graph(-1.0, 0.0, -1.0, p_),
                BoundaryCurve::graph(0.0, 1.0, -1.0, p_)};
    }

    std::vector<Point> infinity_directions() const override { return {}; }

    Point nearest_boundary_direction() const override {
        // Squared distance from the origin to the first-quadrant arc is
        // convex in s; golden section brackets the argmin, Newton sharpens it
        // past the sqrt(eps) limit of value-only minimization.
        auto f = [&](double s) { return s * s + pow_int(1.0 - s, 2 * p_); };
        double s = golden_min(f, 0.0, 1.0);
        for (int i = 0; i < 4; ++i) {
            double g = 2.0 * s - 2.0 * p_ * pow_int(1.0 - s, 2 * p_ - 1);
            double h = 2.0 + 2.0 * p_ * (2 * p_ - 1) * pow_int(1.0 - s, 2 * p_ - 2);
            s -= g / h;
        }
        Point n{-s, -pow_int(1.0 - s, p_)};
        return normalized(n);
    }

    Json to_json() const override { return Json{{"type", "polynomial"}, {"p", p_}}; }

  private:
    int p_;
};

class CombDomain final : public Domain {
  public:
    explicit CombDomain(int max_teeth) : teeth_count_(max_teeth) {
        if (teeth_count_ < 1)
            throw PreconditionError("comb: max_teeth must be a positive integer");
        teeth_.reserve(teeth_count_);
        for (int l = 0; l < teeth_count_; ++l) {
            Point a{1.0 - std::ldexp(1.0, -l), std::ldexp(1.0, -(l + 1))};
            teeth_.push_back(Segment{a, normalized(a)});
        }
    }

    int dim() const override { return 2; }
    std::string tag() const override { return "comb"; }

    bool contains(const Point& p) const override {
        if (!(norm(p) < 1.0)) return false;
        for (const auto& t : teeth_)
            if (dist_point_segment(p, t) == 0.0) return false;
        return true;
    }

    double dist_boundary(const Point& p) const override {
        if (!contains(p)) throw OutsideDomainError("dist_boundary: point not in domain");
        double d = 1.0 - norm(p);
        for (const auto& t : teeth_) d = std::min(d, dist_point_segment(p, t));
        return d;
    }

    std::vector<BoundaryCurve> boundary_curves() const override {
        std::vector<BoundaryCurve> out;
        out.push_back(BoundaryCurve::arc(Point{0.0, 0.0}, 1.0, 0.0, 2.0 * kPi));
        for (const auto& t : teeth_) out.push_back(BoundaryCurve::segment(t.a, t.b));
        return out;
    }

    std::vector<Point> infinity_directions() const override { return {}; }

    Point nearest_boundary_direction() const override { return Point{0.0, 1.0}; }

    Json to_json() const override {
        return Json{{"type", "comb"}, {"max_teeth", teeth_count_}};
    }

  private:
    int teeth_count_;
    std::vector<Segment> teeth_;
};

Point point_from_json(const Json& v, const std::string& field) {
    if (!v.is_array() || v.size() < 2 || v.size() > 3)
        throw ParseError("field \"" + field + "\" must be an array of 2 or 3 numbers");
    Point p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            throw ParseError("field \"" + field + "\" must be an array of numbers");
        p[i] = v[i].get<double>();
    }
    return p;
}

double number_from_json(const Json& v, const std::string& field) {
    if (!v.is_number()) throw ParseError("field \"" + field + "\" must be a number");
    return v.get<double>();
}

int integer_from_json(const Json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ParseError("field \"" + field + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

DomainPtr make_ball(Point center, double radius) {
    return std::make_shared<BallDomain>(std::move(center), radius);
}
DomainPtr make_half_space(double b) { return std::make_shared<HalfSpaceDomain>(b); }
DomainPtr make_g1(Point x) { return std::make_shared<G1Domain>(std::move(x)); }
DomainPtr make_g2(Point x) { return std::make_shared<G2Domain>(std::move(x)); }
DomainPtr make_g3(Point x) { return std::make_shared<G3Domain>(std::move(x)); }
DomainPtr make_alpha_sharp(Point x) {
    return std::make_shared<AlphaSharpDomain>(std::move(x));
}
DomainPtr make_quadrant(Point x) { return std::make_shared<QuadrantDomain>(std::move(x)); }
DomainPtr make_circular_notched() { return std::make_shared<CircularNotchedDomain>(); }
DomainPtr make_polynomial(int p) { return std::make_shared<PolynomialDomain>(p); }
DomainPtr make_comb(int max_teeth) { return std::make_shared<CombDomain>(max_teeth); }

DomainPtr domain_from_json(const Json& spec) {
    if (!spec.is_object() || !spec.contains("type") || !spec.at("type").is_string())
        throw ParseError("domain record must be an object with a string \"type\" tag");
    const std::string tag = spec.at("type").get<std::string>();
    auto need = [&](const char* field) -> const Json& {
        if (!spec.contains(field))
            throw ParseError("domain \"" + tag + "\" requires field \"" + field + "\"");
        return spec.at(field);
    };
    try {
        if (tag == "ball")
            return make_ball(point_from_json(need("center"), "center"),
                             number_from_json(need("radius"), "radius"));
        if (tag == "half_space") return make_half_space(number_from_json(need("b"), "b"));
        if (tag == "g1") return make_g1(point_from_json(need("x"), "x"));
        if (tag == "g2") return make_g2(point_from_json(need("x"), "x"));
        if (tag == "g3") return make_g3(point_from_json(need("x"), "x"));
        if (tag == "alpha_sharp") return make_alpha_sharp(point_from_json(need("x"), "x"));
        if (tag == "quadrant") return make_quadrant(point_from_json(need("x"), "x"));
        if (tag == "circular_notched") return make_circular_notched();
        if (tag == "polynomial") return make_polynomial(integer_from_json(need("p"), "p"));
        if (tag == "comb") return make_comb(integer_from_json(need("max_teeth"), "max_teeth"));
    } catch (const PreconditionError& e) {
        throw ParseError("domain \"" + tag + "\": " + e.what());
    } catch (const DegenerateInputError& e) {
        throw ParseError("domain \"" + tag + "\": " + e.what());
    }
    throw ParseError("unknown domain type \"" + tag +
                     "\"; expected one of ball, half_space, g1, g2, g3, alpha_sharp, "
                     "quadrant, circular_notched, polynomial, comb");
}

DomainPtr parse_domain(const std::string& text) {
    Json spec;
    try {
        spec = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("domain record is not valid JSON: ") + e.what());
    }
    return domain_from_json(spec);
}

}  // namespace hypgrow
