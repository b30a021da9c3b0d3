#pragma once

#include <cmath>

namespace ribbon {

struct Point {
  double x = 0;
  double y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point unit(Point a) { return (1.0 / norm(a)) * a; }

// Mirror image of p across the line through a and b.
Point reflect_point(Point p, Point a, Point b);

double point_segment_distance(Point p, Point a, Point b);

// x -> L·x + t with L orthogonal.
struct Isometry {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  double tx = 0, ty = 0;

  static Isometry rigid(Point origin, double heading);
  static Isometry reflection(Point a, Point b);

  Point apply(Point p) const { return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty}; }
  Point linear(Point v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
  double det() const { return m00 * m11 - m01 * m10; }
  // (*this)∘other
  Isometry compose(const Isometry& other) const;
};

}  // namespace ribbon
