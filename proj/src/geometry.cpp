#include "hypgrow/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hypgrow {

namespace {

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw DegenerateInputError("dimension mismatch between points");
}

} // namespace

bool operator==(const Point& a, const Point& b) { return a.c == b.c; }

Point operator+(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = s * a.c[i];
  return r;
}

Point operator*(const Point& a, double s) { return s * a; }

double dot(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.c[i] * b.c[i];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double dist(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a.c[i] - b.c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point normalized(const Point& a) {
  const double n = norm(a);
  if (n == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
  return (1.0 / n) * a;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(),
                                      b.c.end());
}

double angle(const Point& a, const Point& b, const Point& c) {
  const Point p = a - b;
  const Point q = c - b;
  const double np = norm(p);
  const double nq = norm(q);
  if (np == 0.0 || nq == 0.0)
    throw DegenerateInputError("angle vertex coincides with an endpoint");
  const double d = dot(p, q);
  double cross2;
  if (p.dim() == 2) {
    cross2 = std::abs(p[0] * q[1] - p[1] * q[0]);
  } else {
    // |p x q| = sqrt(|p|^2 |q|^2 - (p.q)^2), clamped against rounding.
    const double m = np * np * nq * nq - d * d;
    cross2 = std::sqrt(std::max(m, 0.0));
  }
  return std::atan2(cross2, d);
}

double dist_point_segment(const Point& p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, s.a);
  double t = dot(p - s.a, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

Point Arc::at_angle(double theta) const {
  Point r = center;
  r.c[0] += radius * std::cos(theta);
  r.c[1] += radius * std::sin(theta);
  return r;
}

double dist_point_arc(const Point& p, const Arc& arc) {
  const Point v = p - arc.center;
  const double phi = std::atan2(v[1], v[0]);
  const double two_pi = 2.0 * M_PI;
  // Shift phi by whole turns into [theta0, theta0 + 2 pi).
  double t = phi;
  while (t < arc.theta0) t += two_pi;
  while (t >= arc.theta0 + two_pi) t -= two_pi;
  if (t <= arc.theta1) return std::abs(norm(v) - arc.radius);
  return std::min(dist(p, arc.at_angle(arc.theta0)),
                  dist(p, arc.at_angle(arc.theta1)));
}

Sector Sector::from_axis_point(const Point& apex, const Point& axis_point,
                               double half_angle) {
  if (!(half_angle > 0.0) || !(half_angle < M_PI))
    throw DegenerateInputError("sector half-angle must lie in (0, pi)");
  Sector s;
  s.apex = apex;
  s.axis = normalized(axis_point - apex); // throws if axis_point == apex
  s.half_angle = half_angle;
  return s;
}

bool sector_contains(const Sector& s, const Point& p) {
  const Point v = p - s.apex;
  if (norm(v) == 0.0) return true;
  return angle(p, s.apex, s.apex + s.axis) <= s.half_angle;
}

double dist_point_sector(const Point& p, const Sector& s) {
  const Point v = p - s.apex;
  const double r = norm(v);
  if (r == 0.0) return 0.0;
  const double along = dot(v, s.axis);
  const double perp2 = std::max(r * r - along * along, 0.0);
  const double phi = std::atan2(std::sqrt(perp2), along);
  if (phi <= s.half_angle) return 0.0;
  if (phi >= s.half_angle + M_PI / 2.0) return r;
  return r * std::sin(phi - s.half_angle);
}

} // namespace hypgrow
