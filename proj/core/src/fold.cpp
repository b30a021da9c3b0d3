#include "ribbon/fold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ribbon/error.hpp"

namespace ribbon {
namespace {

// A crease or cut line crossing the strip.
struct Boundary {
  double s;
  double angle;
  double foot(double w) const { return s - 0.5 * w / std::tan(angle); }
  double head(double w) const { return s + 0.5 * w / std::tan(angle); }
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_program, what); }

// Lines bounding each panel, left to right.
std::vector<Boundary> boundaries(const FoldProgram& p) {
  std::vector<Boundary> out;
  if (p.presentation == Presentation::truncated) {
    out.push_back({0.0, p.start_cut.radians()});
    for (const auto& c : p.creases) out.push_back({c.position, c.angle.radians()});
    out.push_back({p.length, p.end_cut.radians()});
  } else {
    // With an odd crease count the loop closes orientation-reversed, so the seam
    // seen from panel 0 is mirrored across the centerline.
    const double seam = p.creases.back().angle.radians();
    out.push_back({0.0, p.creases.size() % 2 ? std::numbers::pi - seam : seam});
    for (const auto& c : p.creases) out.push_back({c.position, c.angle.radians()});
  }
  return out;
}

std::vector<int> heights(const FoldProgram& p, std::size_t panels) {
  std::vector<int> h(panels, 0);
  for (std::size_t k = 1; k < panels; ++k) h[k] = h[k - 1] + p.creases[k - 1].layer_shift;
  return h;
}

}  // namespace

const char* to_string(Presentation p) { return p == Presentation::closed ? "closed" : "truncated"; }

Presentation presentation_from_string(const std::string& s) {
  if (s == "closed") return Presentation::closed;
  if (s == "truncated") return Presentation::truncated;
  throw Error(ErrorKind::invalid_input, "unknown presentation '" + s + "'");
}

std::size_t panel_count(const FoldProgram& p) {
  return p.presentation == Presentation::closed ? p.creases.size() : p.creases.size() + 1;
}

int helix_period(const FoldProgram& p) {
  if (p.presentation != Presentation::closed) return 0;
  return std::accumulate(p.creases.begin(), p.creases.end(), 0,
                         [](int acc, const CreaseSpec& c) { return acc + c.layer_shift; });
}

void validate(const FoldProgram& p, const FoldOptions& opt) {
  if (!(p.width > 0) || !std::isfinite(p.width)) malformed("width must be positive");
  if (!(p.length > 0) || !std::isfinite(p.length)) malformed("length must be positive");
  for (std::size_t k = 0; k < p.creases.size(); ++k) {
    const auto& c = p.creases[k];
    if (!c.angle.strictly_inside_half_turn()) malformed("crease angle outside (0, pi)");
    if (c.layer_shift == 0) malformed("layer shift must be nonzero");
    if (!(c.position > 0)) malformed("crease position must be positive");
    if (k > 0 && !(c.position > p.creases[k - 1].position)) malformed("crease positions not increasing");
  }
  if (p.presentation == Presentation::truncated) {
    if (!p.start_cut.strictly_inside_half_turn() || !p.end_cut.strictly_inside_half_turn())
      malformed("cut angle outside (0, pi)");
    if (!p.creases.empty() && !(p.creases.back().position < p.length)) malformed("crease beyond strip end");
  } else {
    if (p.creases.empty()) malformed("closed program needs a seam crease");
    if (std::fabs(p.creases.back().position - p.length) > 1e-12 * p.length)
      malformed("closed program must end on its seam crease");
  }
  const auto bs = boundaries(p);
  const double tol = opt.edge_tolerance * std::max(1.0, p.length);
  for (std::size_t k = 0; k + 1 < bs.size(); ++k) {
    const double dfoot = bs[k + 1].foot(p.width) - bs[k].foot(p.width);
    const double dhead = bs[k + 1].head(p.width) - bs[k].head(p.width);
    if (dfoot < -tol || dhead < -tol) malformed("crease segment exits the ribbon span");
    if (dfoot <= tol && dhead <= tol) malformed("empty panel");
  }
}

std::vector<Isometry> panel_transforms(const FoldProgram& p) {
  std::vector<Isometry> ts;
  ts.reserve(p.creases.size() + 2);
  ts.push_back(Isometry::rigid(p.placement.origin, p.placement.heading));
  for (const auto& c : p.creases) {
    const double a = c.angle.radians();
    const Point on{c.position, 0.0};
    const Point dir{std::cos(a), std::sin(a)};
    ts.push_back(ts.back().compose(Isometry::reflection(on, on + dir)));
  }
  return ts;
}

FoldedLayout layout(const FoldProgram& p, const FoldOptions& opt) {
  validate(p, opt);
  const auto ts = panel_transforms(p);
  const auto bs = boundaries(p);
  const std::size_t n = panel_count(p);
  const auto h = heights(p, n);
  const double w = p.width;

  FoldedLayout out;
  out.source = p;
  out.helix_period = helix_period(p);
  out.panels.reserve(n);
  out.centerline.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& t = ts[k];
    const Boundary& l = bs[k];
    const Boundary& r = bs[k + 1];
    Panel panel;
    panel.vertices = {t.apply({l.foot(w), -0.5 * w}), t.apply({r.foot(w), -0.5 * w}),
                      t.apply({r.head(w), 0.5 * w}), t.apply({l.head(w), 0.5 * w})};
    panel.layer = h[k];
    out.panels.push_back(panel);
    out.centerline.push_back({t.apply({l.s, 0.0}), t.apply({r.s, 0.0})});
  }

  if (p.presentation == Presentation::closed) {
    const Isometry& first = ts.front();
    const Isometry& last = ts.back();
    const double dp = dist(last.apply({p.length, 0.0}), first.apply({0.0, 0.0}));
    const double dd = dist(last.linear({1.0, 0.0}), first.linear({1.0, 0.0}));
    if (dp > opt.closure_tolerance || dd > opt.closure_tolerance)
      throw Error(ErrorKind::closure, "closed program does not close (position error " + std::to_string(dp) +
                                          ", direction error " + std::to_string(dd) + ")");
  }
  return out;
}

double panel_width(const Panel& panel) {
  const auto& v = panel.vertices;
  const Point bottom = v[1] - v[0];
  const Point top = v[2] - v[3];
  // One ribbon edge may have zero length where two creases meet on it.
  const Point along = norm(bottom) >= norm(top) ? bottom : top;
  const Point base = norm(bottom) >= norm(top) ? v[0] : v[3];
  const Point other = norm(bottom) >= norm(top) ? v[3] : v[0];
  return std::fabs(cross(unit(along), other - base));
}

bool panel_is_isosceles(const Panel& panel, double tol) {
  const auto& v = panel.vertices;
  const double l1 = dist(v[1], v[2]);
  const double l3 = dist(v[3], v[0]);
  const double e0 = dist(v[0], v[1]), e2 = dist(v[2], v[3]);
  if (std::fabs(l1 - l3) > tol * std::max(1.0, l1)) return false;
  // Equal legs with equal edges would be a parallelogram, which is not the shape meant.
  if (std::fabs(e0 - e2) <= tol * std::max(1.0, e0)) return std::fabs(dot(v[1] - v[0], v[2] - v[1])) <= tol;
  return true;
}

FoldProgram unfold(const FoldedLayout& lay) {
  const std::size_t n = lay.panels.size();
  if (n == 0 || lay.centerline.size() != n) throw Error(ErrorKind::inconsistency, "layout has no panels");
  const bool closed = lay.source.presentation == Presentation::closed;

  FoldProgram p;
  p.presentation = lay.source.presentation;
  p.label = lay.source.label;
  p.width = panel_width(lay.panels[0]);
  for (const auto& panel : lay.panels)
    if (std::fabs(panel_width(panel) - p.width) > 1e-9 * p.width)
      throw Error(ErrorKind::inconsistency, "panels are not width-consistent");

  // Strip angle of a side running from the bottom edge to the top edge.
  auto strip_angle = [](Point dir, Point side, double orient) {
    return ExactAngle::from_radians(std::atan2(orient * cross(dir, side), dot(dir, side)));
  };

  double s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& seg = lay.centerline[k];
    const auto& v = lay.panels[k].vertices;
    const Point dir = unit(seg.b - seg.a);
    const double orient = cross(dir, v[3] - v[0]) > 0 ? 1.0 : -1.0;
    if (k == 0) {
      if (orient < 0) throw Error(ErrorKind::inconsistency, "first panel is mirrored");
      p.placement = {seg.a, std::atan2(dir.y, dir.x)};
      if (!closed) p.start_cut = strip_angle(dir, v[3] - v[0], orient);
    }
    s += dist(seg.a, seg.b);
    const ExactAngle right = strip_angle(dir, v[2] - v[1], orient);
    if (k + 1 < n || closed) {
      const int next = k + 1 < n ? lay.panels[k + 1].layer : lay.panels[0].layer + lay.helix_period;
      p.creases.push_back({s, right, next - lay.panels[k].layer});
    } else {
      p.end_cut = right;
    }
  }
  p.length = s;
  return p;
}

double centerline_length(const FoldedLayout& lay) {
  double s = 0;
  for (const auto& seg : lay.centerline) s += dist(seg.a, seg.b);
  return s;
}

double centerline_length(const FoldProgram& p) { return p.length; }

double ratio(const FoldedLayout& lay) {
  if (!(lay.source.width > 0)) throw Error(ErrorKind::invalid_input, "width must be positive");
  return centerline_length(lay) / lay.source.width;
}

double ratio(const FoldProgram& p) {
  if (!(p.width > 0)) throw Error(ErrorKind::invalid_input, "width must be positive");
  return p.length / p.width;
}

}  // namespace ribbon
