#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypgrow/errors.hpp"
#include "hypgrow/geometry.hpp"

namespace hypgrow {

using Json = nlohmann::ordered_json;

// A boundary element: either a finite point or a direction marker for an
// unbounded boundary component.
struct BoundaryPoint {
    bool at_infinity = false;
    Point p;

    static BoundaryPoint finite(Point q) { return {false, std::move(q)}; }
    static BoundaryPoint infinity(const Point& dir) {
        return {true, normalized(dir)};
    }
};

// One boundary component, parameterized over u in [0,1]. Unbounded kinds
// compactify: ray maps u=1 to its direction marker, line maps u=0 and u=1
// to the two direction markers and u=1/2 to the foot (the point of the line
// closest to the origin).
struct BoundaryCurve {
    enum class Kind { segment, arc, ray, line, graph };

    Kind kind = Kind::segment;
    Point a;          // segment start, ray apex, line foot
    Point b;          // segment end
    Point dir;        // ray or line direction, unit
    Point center;     // arc
    double radius = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
    double scale = 1.0;   // ray/line parameter scale
    double s0 = 0.0;      // graph abscissa range
    double s1 = 0.0;
    double sign = 1.0;    // graph ordinate sign
    int expo = 1;         // graph exponent

    BoundaryPoint eval(double u) const;
    bool unbounded() const { return kind == Kind::ray || kind == Kind::line; }

    static BoundaryCurve segment(Point a, Point b);
    static BoundaryCurve arc(Point center, double radius, double theta0, double theta1);
    static BoundaryCurve ray(Point apex, const Point& dir, double scale);
    static BoundaryCurve line(Point foot, const Point& dir, double scale);
    static BoundaryCurve graph(double s0, double s1, double sign, int expo);
};

// Node layout used by both boundary_samples and the sup solver, so that the
// solver's coarse grid contains the same points the sampling oracle sees.
int curve_node_count(const BoundaryCurve& c, int base);
double curve_node_param(const BoundaryCurve& c, int count, int i);

class Domain {
  public:
    virtual ~Domain() = default;

    virtual int dim() const = 0;
    virtual std::string tag() const = 0;
    // Open-set membership: boundary points are outside.
    virtual bool contains(const Point& p) const = 0;
    // d_G(p); throws OutsideDomainError if p is not in the domain.
    virtual double dist_boundary(const Point& p) const = 0;
    // Planar decomposition of the boundary; throws PreconditionError when dim != 2.
    virtual std::vector<BoundaryCurve> boundary_curves() const = 0;
    // Unit directions of unbounded boundary components, empty when bounded.
    virtual std::vector<Point> infinity_directions() const = 0;
    // Unit direction u such that dist_boundary(0)*u is a nearest boundary
    // point; ties broken by lexicographically smallest vector.
    virtual Point nearest_boundary_direction() const = 0;
    virtual Json to_json() const = 0;

    // At least `budget` points spread over all boundary components plus one
    // marker per asymptotic direction. budget >= 8.
    std::vector<BoundaryPoint> boundary_samples(int budget) const;
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_ball(Point center, double radius);
DomainPtr make_half_space(double b);
DomainPtr make_g1(Point x);
DomainPtr make_g2(Point x);
DomainPtr make_g3(Point x);
DomainPtr make_alpha_sharp(Point x);
DomainPtr make_quadrant(Point x);
DomainPtr make_circular_notched();
DomainPtr make_polynomial(int p);
DomainPtr make_comb(int max_teeth);

// Builds a domain from its tagged record, e.g. {"type":"ball","center":[0,0],
// "radius":1.0}. Unknown tags and malformed parameters raise ParseError.
DomainPtr domain_from_json(const Json& spec);
DomainPtr parse_domain(const std::string& text);

}  // namespace hypgrow
