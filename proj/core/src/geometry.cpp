#include "ribbon/geometry.hpp"

#include <algorithm>

#include "ribbon/error.hpp"

namespace ribbon {

Point reflect_point(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (!(len2 > 0)) throw Error(ErrorKind::invalid_input, "reflection line has coincident endpoints");
  const Point v = p - a;
  const Point foot = a + (dot(v, d) / len2) * d;
  return 2.0 * foot - p;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0) return dist(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return dist(p, a + t * d);
}

Isometry Isometry::rigid(Point origin, double heading) {
  const double c = std::cos(heading), s = std::sin(heading);
  return {c, -s, s, c, origin.x, origin.y};
}

Isometry Isometry::reflection(Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (!(len2 > 0)) throw Error(ErrorKind::invalid_input, "reflection line has coincident endpoints");
  const double c2 = (d.x * d.x - d.y * d.y) / len2;
  const double s2 = 2 * d.x * d.y / len2;
  Isometry r{c2, s2, s2, -c2, 0, 0};
  const Point ra = r.linear(a);
  r.tx = a.x - ra.x;
  r.ty = a.y - ra.y;
  return r;
}

Isometry Isometry::compose(const Isometry& o) const {
  Isometry r;
  r.m00 = m00 * o.m00 + m01 * o.m10;
  r.m01 = m00 * o.m01 + m01 * o.m11;
  r.m10 = m10 * o.m00 + m11 * o.m10;
  r.m11 = m10 * o.m01 + m11 * o.m11;
  r.tx = m00 * o.tx + m01 * o.ty + tx;
  r.ty = m10 * o.tx + m11 * o.ty + ty;
  return r;
}

}  // namespace ribbon
