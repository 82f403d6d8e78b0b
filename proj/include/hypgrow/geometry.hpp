#ifndef HYPGROW_GEOMETRY_HPP
#define HYPGROW_GEOMETRY_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hypgrow/errors.hpp"

namespace hypgrow {

// Euclidean point / vector. Most of the library works in the plane, but the
// type is dimension-agnostic so the closed-form metrics can run in any n >= 2.
struct Point {
  std::vector<double> c;

  Point() = default;
  Point(std::initializer_list<double> v) : c(v) {}
  explicit Point(std::size_t n) : c(n, 0.0) {}

  std::size_t dim() const { return c.size(); }
  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  static Point xy(double x, double y) { return Point{x, y}; }
};

bool operator==(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
Point operator*(const Point& a, double s);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
// |a - b| without building the intermediate vector.
double dist(const Point& a, const Point& b);
// a/|a|; throws DegenerateInputError on the zero vector.
Point normalized(const Point& a);

// Lexicographic comparison, used for deterministic tie-breaks.
bool lex_less(const Point& a, const Point& b);

// Angle at vertex b of the triangle (a, b, c), in [0, pi]. Computed via
// atan2 of the perpendicular and parallel components, which stays accurate
// for nearly collinear configurations where acos loses digits.
// Throws DegenerateInputError if a == b or c == b.
double angle(const Point& a, const Point& b, const Point& c);

struct Segment {
  Point a;
  Point b;

  Point at(double t) const { return a + t * (b - a); }
  double length() const { return dist(a, b); }
};

double dist_point_segment(const Point& p, const Segment& s);

// Circular arc of the circle |q - center| = radius with polar angle in
// [theta0, theta1] (theta1 may exceed theta0 by up to 2*pi). Plane only.
struct Arc {
  Point center;
  double radius = 1.0;
  double theta0 = 0.0;
  double theta1 = 0.0;

  Point at_angle(double theta) const;
};

double dist_point_arc(const Point& p, const Arc& arc);

// Infinite circular sector: apex plus all directions within half_angle of
// the axis. Membership is closed, so the bounding rays and the apex belong
// to the sector.
struct Sector {
  Point apex;
  Point axis;       // unit vector
  double half_angle = 0.0;

  // axis_point is any point on the axis distinct from the apex.
  static Sector from_axis_point(const Point& apex, const Point& axis_point,
                                double half_angle);
};

bool sector_contains(const Sector& s, const Point& p);
double dist_point_sector(const Point& p, const Sector& s);

} // namespace hypgrow

#endif
