#include "ribbon/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ribbon/error.hpp"

namespace ribbon {
namespace {

constexpr double pi = std::numbers::pi;

[[noreturn]] void bad_parameter(const std::string& what) { throw Error(ErrorKind::parameter, what); }

// A closed centerline with one crease per vertex. Segment i runs from
// vertices[i] to vertices[i+1]; crease i sits at vertices[i+1], so the last
// crease (the seam) sits at vertices[0].
struct RibbonPath {
  std::vector<Point> vertices;
  std::vector<Point> crease_dirs;  // indexed by vertex
  std::vector<int> heights;        // indexed by segment
  int seam_shift = 0;
  double width = 1;
  std::string label;
};

double fold_angle(Point dir, Point crease, double orient) {
  double a = std::atan2(orient * cross(dir, crease), dot(dir, crease));
  if (a <= 0) a += pi;
  return a;
}

FoldProgram program_from_path(const RibbonPath& path) {
  const std::size_t m = path.vertices.size();
  FoldProgram p;
  p.presentation = Presentation::closed;
  p.width = path.width;
  p.label = path.label;
  const Point d0 = unit(path.vertices[1] - path.vertices[0]);
  p.placement = {path.vertices[0], std::atan2(d0.y, d0.x)};
  double s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = path.vertices[i];
    const Point b = path.vertices[(i + 1) % m];
    s += dist(a, b);
    const double orient = i % 2 == 0 ? 1.0 : -1.0;
    const double angle = fold_angle(unit(b - a), path.crease_dirs[(i + 1) % m], orient);
    const int shift = i + 1 < m ? path.heights[i + 1] - path.heights[i] : path.seam_shift;
    p.creases.push_back({s, ExactAngle::from_radians(angle), shift});
  }
  p.length = s;

  // The program must reproduce the path it was read from.
  const FoldedLayout lay = layout(p);
  for (std::size_t i = 0; i < m; ++i)
    if (dist(lay.centerline[i].a, path.vertices[i]) > 1e-9)
      throw Error(ErrorKind::inconsistency, "builder path is not a flat fold of a strip: " + path.label);
  return p;
}

// Side midpoint j of the regular n-gon with side 1.
Point side_midpoint(int n, int j, double apothem) {
  const double phi = (2 * j + 1) * pi / n;
  return {apothem * std::cos(phi), apothem * std::sin(phi)};
}

Point side_direction(int n, int j) {
  const double phi = (2 * j + 1) * pi / n;
  return {-std::sin(phi), std::cos(phi)};
}

// Star {n/k} through the side midpoints of a regular n-gon, creased along the
// sides (or along the mirror lines, which coincide). Layers follow h_i = k·i mod n.
RibbonPath star_path(int n, int k, double apothem, double width, int seam_shift, std::string label) {
  RibbonPath path;
  path.width = width;
  path.label = std::move(label);
  path.seam_shift = seam_shift;
  for (int i = 0; i < n; ++i) {
    const int j = static_cast<int>((static_cast<long long>(i) * k) % n);
    path.vertices.push_back(side_midpoint(n, j, apothem));
    path.crease_dirs.push_back(side_direction(n, j));
    path.heights.push_back(j);
  }
  return path;
}

FoldProgram polygon_wrap(int n, int k, bool plain_stack, const std::string& label) {
  const double apothem = 0.5 / std::tan(pi / n);
  const double width = std::sin(k * pi / n);
  return program_from_path(star_path(n, k, apothem, width, plain_stack ? -(n - k) : k, label));
}

// Pentagon side-midpoint walk with steps of ±2. Where the step direction flips,
// the ribbon turns back on a crease perpendicular to the chord, epsilon short of
// the midpoint.
FoldProgram short_pentagon(const std::vector<int>& signs, const std::vector<int>& heights, double epsilon,
                           const std::string& label) {
  constexpr int n = 5;
  const double apothem = 0.5 / std::tan(pi / n);
  const double width = std::sin(2 * pi / n);
  if (!(epsilon > 0 && epsilon < 0.1 * width)) bad_parameter("epsilon must lie in (0, 0.1*w)");
  const int m = static_cast<int>(signs.size());
  std::vector<int> sides{0};
  for (int s : signs) sides.push_back(((sides.back() + 2 * s) % n + n) % n);

  RibbonPath path;
  path.width = width;
  path.label = label;
  path.heights = heights;
  path.seam_shift = heights.front() - heights.back();
  for (int k = 0; k < m; ++k) {
    const int prev = signs[(k + m - 1) % m];
    const int side = sides[k];
    const Point mid = side_midpoint(n, side, apothem);
    if (prev == signs[k]) {
      path.vertices.push_back(mid);
      path.crease_dirs.push_back(side_direction(n, side));
    } else {
      const int from = sides[(k + m - 1) % m];
      const Point d = unit(mid - side_midpoint(n, from, apothem));
      path.vertices.push_back(mid - epsilon * d);
      path.crease_dirs.push_back({-d.y, d.x});
    }
  }
  return program_from_path(path);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::odd_wrap: return "odd-wrap";
    case Family::star_polygon: return "star-polygon";
    case Family::pinwheel: return "pinwheel";
    case Family::even_wrap_plus2: return "even-wrap-plus2";
    case Family::even_wrap_plus4: return "even-wrap-plus4";
    case Family::short_52: return "short-52";
    case Family::short_72: return "short-72";
    case Family::rect_74: return "rect74";
  }
  return "?";
}

Family family_from_name(const std::string& raw) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '_', '-');
  if (name == "rect-74") name = "rect74";
  for (Family f : {Family::odd_wrap, Family::star_polygon, Family::pinwheel, Family::even_wrap_plus2,
                   Family::even_wrap_plus4, Family::short_52, Family::short_72, Family::rect_74})
    if (name == family_name(f)) return f;
  throw Error(ErrorKind::invalid_input, "unknown family '" + raw + "'");
}

bool is_parametric(Family f) {
  return f != Family::short_52 && f != Family::short_72 && f != Family::rect_74;
}

std::string family_label(const FamilyId& id) {
  std::string s = family_name(id.tag);
  if (!is_parametric(id.tag)) return s;
  return s + (id.tag == Family::star_polygon ? " p=" : " q=") + std::to_string(id.parameter);
}

void check_parameter(const FamilyId& id) {
  const int v = id.parameter;
  switch (id.tag) {
    case Family::odd_wrap:
    case Family::pinwheel:
      if (v < 2) bad_parameter("q must be at least 2");
      break;
    case Family::star_polygon:
      if (v < 7 || v % 2 == 0) bad_parameter("p must be odd and at least 7");
      break;
    case Family::even_wrap_plus2:
    case Family::even_wrap_plus4:
      if (v < 3 || v % 2 == 0) bad_parameter("q must be odd and at least 3");
      break;
    default:
      break;
  }
}

std::optional<TorusKnotParams> claimed_knot(const FamilyId& id) {
  check_parameter(id);
  const int v = id.parameter;
  switch (id.tag) {
    case Family::odd_wrap: return TorusKnotParams{v + 1, v};
    case Family::star_polygon: return TorusKnotParams{v, 2};
    case Family::pinwheel: return TorusKnotParams{2 * v + 1, v};
    case Family::even_wrap_plus2: return TorusKnotParams{2 * v + 2, v};
    case Family::even_wrap_plus4: return TorusKnotParams{2 * v + 4, v};
    case Family::short_52: return TorusKnotParams{5, 2};
    case Family::short_72: return TorusKnotParams{7, 2};
    case Family::rect_74: return std::nullopt;
  }
  return std::nullopt;
}

double polygon_circumradius(int n) { return 0.5 / std::sin(pi / n); }

Point polygon_vertex(int n, int j) {
  const double r = polygon_circumradius(n);
  const double phi = 2 * pi * j / n;
  return {r * std::cos(phi), r * std::sin(phi)};
}

FoldProgram build_odd_wrap(int q, Presentation presentation) {
  check_parameter({Family::odd_wrap, q});
  const int n = 2 * q + 1;
  FoldProgram closed = polygon_wrap(n, q, true, family_label({Family::odd_wrap, q}));
  if (presentation == Presentation::closed) return closed;

  // Drop the last panel; the ends lie flush with the two polygon sides it spanned.
  FoldProgram t = closed;
  t.presentation = Presentation::truncated;
  // The closed loop has an odd crease count, so panel 0 sees the seam mirrored.
  const ExactAngle seam = closed.creases.back().angle;
  t.start_cut = ExactAngle(seam.den() - seam.num(), seam.den());
  t.end_cut = closed.creases[n - 2].angle;
  t.length = closed.creases[n - 2].position;
  t.creases.resize(n - 2);
  return t;
}

FoldProgram build_star_polygon(int p) {
  check_parameter({Family::star_polygon, p});
  return polygon_wrap(p, 2, false, family_label({Family::star_polygon, p}));
}

FoldProgram build_pinwheel(int q) {
  check_parameter({Family::pinwheel, q});
  const int n = 2 * q + 1;
  const double width = 1.0;
  const double chord = width / std::tan(pi / (2 * n));
  const double apothem = chord / (2 * std::sin(q * pi / n));
  return program_from_path(star_path(n, q, apothem, width, q, family_label({Family::pinwheel, q})));
}

FoldProgram build_even_wrap(int q, int variant) {
  if (variant != 2 && variant != 4) bad_parameter("even wrap variant must be +2 or +4");
  const FamilyId id{variant == 2 ? Family::even_wrap_plus2 : Family::even_wrap_plus4, q};
  check_parameter(id);
  return polygon_wrap(2 * q + variant, q, false, family_label(id));
}

FoldProgram build_short_52(double epsilon) {
  return short_pentagon({1, -1, 1, 1, 1, 1, 1}, {0, 2, 6, 4, 1, 5, 3}, epsilon, "short-52");
}

FoldProgram build_short_72(double epsilon) {
  return short_pentagon({-1, 1, 1, 1, -1, 1, 1, 1, 1}, {2, 7, 4, 1, 5, 8, 6, 3, 0}, epsilon, "short-72");
}

FoldProgram build_74() {
  // Slope-one billiard in the 2x3 rectangle. The ribbon fills the band between
  // the two orbits through the corners, so its width is sqrt(2)/2.
  constexpr double a = 2, b = 3;
  RibbonPath path;
  path.width = std::sqrt(2.0) / 2;
  path.label = "rect74";
  Point p{0.5, 0};
  Point d{1, 1};
  do {
    path.vertices.push_back(p);
    path.crease_dirs.push_back(p.y == 0 || p.y == b ? Point{1, 0} : Point{0, 1});
    const double tx = d.x > 0 ? (a - p.x) / d.x : -p.x / d.x;
    const double ty = d.y > 0 ? (b - p.y) / d.y : -p.y / d.y;
    const double t = std::min(tx, ty);
    p = p + t * d;
    // Snap the wall coordinate so the wall test above stays exact.
    if (tx <= ty) p.x = d.x > 0 ? a : 0, d.x = -d.x;
    else p.y = d.y > 0 ? b : 0, d.y = -d.y;
  } while (dist(p, path.vertices.front()) > 1e-12);
  // The diagram is alternating, so no single stacking order exists; these
  // layers wind around a helix of period 4.
  path.heights = {0, 3, 0, 1, 0, 3, 0, 4, 2, 0};
  path.seam_shift = 4 - (path.heights.back() - path.heights.front());
  return program_from_path(path);
}

FoldProgram build(const FamilyId& id, Presentation presentation, double epsilon) {
  if (presentation == Presentation::truncated && id.tag != Family::odd_wrap)
    throw Error(ErrorKind::not_applicable, "only the odd wrap has a truncated presentation");
  switch (id.tag) {
    case Family::odd_wrap: return build_odd_wrap(id.parameter, presentation);
    case Family::star_polygon: return build_star_polygon(id.parameter);
    case Family::pinwheel: return build_pinwheel(id.parameter);
    case Family::even_wrap_plus2: return build_even_wrap(id.parameter, 2);
    case Family::even_wrap_plus4: return build_even_wrap(id.parameter, 4);
    case Family::short_52: return build_short_52(epsilon);
    case Family::short_72: return build_short_72(epsilon);
    case Family::rect_74: return build_74();
  }
  throw Error(ErrorKind::invalid_input, "unknown family");
}

namespace {

bool inside_convex(const Panel& panel, Point x) {
  int pos = 0, neg = 0;
  for (int i = 0; i < 4; ++i) {
    const Point a = panel.vertices[i], b = panel.vertices[(i + 1) % 4];
    if (dist(a, b) == 0) continue;
    const double c = cross(b - a, x - a);
    if (c > 1e-12) ++pos;
    if (c < -1e-12) ++neg;
  }
  return pos == 0 || neg == 0;
}

}  // namespace

double hole_inradius(const FoldedLayout& lay, Point center) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& panel : lay.panels) {
    if (inside_convex(panel, center)) return 0;
    for (int i = 0; i < 4; ++i)
      best = std::min(best, point_segment_distance(center, panel.vertices[i], panel.vertices[(i + 1) % 4]));
  }
  return best;
}

std::vector<Point> central_hole(const FoldedLayout& lay, Point center) {
  if (hole_inradius(lay, center) <= 1e-12) return {};
  double extent = 0;
  for (const auto& panel : lay.panels)
    for (const auto& v : panel.vertices) extent = std::max(extent, dist(v, center));
  std::vector<Point> poly{center + Point{-extent, -extent}, center + Point{extent, -extent},
                          center + Point{extent, extent}, center + Point{-extent, extent}};
  for (const auto& panel : lay.panels) {
    // The side of the panel facing the centre bounds the hole.
    int facing = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
      const Point a = panel.vertices[i], b = panel.vertices[(i + 1) % 4];
      if (dist(a, b) == 0) continue;
      const double dd = point_segment_distance(center, a, b);
      if (dd < best) best = dd, facing = i;
    }
    const Point a = panel.vertices[facing], b = panel.vertices[(facing + 1) % 4];
    const double side = cross(b - a, center - a) > 0 ? 1.0 : -1.0;
    std::vector<Point> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point p = poly[i], r = poly[(i + 1) % poly.size()];
      const double fp = side * cross(b - a, p - a), fr = side * cross(b - a, r - a);
      if (fp >= 0) next.push_back(p);
      if ((fp >= 0) != (fr >= 0)) next.push_back(p + (fp / (fp - fr)) * (r - p));
    }
    poly = std::move(next);
  }
  // Drop near-duplicate vertices produced by clipping through existing corners.
  std::vector<Point> out;
  for (const auto& v : poly)
    if (out.empty() || dist(out.back(), v) > 1e-9) out.push_back(v);
  while (out.size() > 1 && dist(out.front(), out.back()) <= 1e-9) out.pop_back();
  return out;
}

}  // namespace ribbon
