#include "ribbon/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ribbon/error.hpp"

namespace ribbon {
namespace {

constexpr std::array<const char*, 6> kPanelFill = {"#f2c14e", "#f78154", "#4d9078", "#5fad56", "#b4436c", "#5c80bc"};
constexpr std::array<const char*, 8> kSeriesColor = {"#1b4965", "#c44536", "#2a9d8f", "#e9c46a",
                                                     "#6d597a", "#f4a261", "#264653", "#8d99ae"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(Point p) {
    x0 = std::min(x0, p.x), y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x), y1 = std::max(y1, p.y);
  }
};

// Maps mathematical coordinates into the SVG user space (y pointing down).
struct Frame {
  Box box;
  double scale;
  double mx, my;
  double width() const { return (box.x1 - box.x0 + 2 * mx) * scale; }
  double height() const { return (box.y1 - box.y0 + 2 * my) * scale; }
  Point map(Point p) const { return {(p.x - box.x0 + mx) * scale, (box.y1 - p.y + my) * scale}; }
};

Frame make_frame(const Box& box, double scale) {
  Frame f{box, scale, 0, 0};
  const double w = box.x1 - box.x0, h = box.y1 - box.y0;
  const double span = std::max(w, h) > 0 ? std::max(w, h) : 1.0;
  f.mx = 0.05 * (w > 0 ? w : span);
  f.my = 0.05 * (h > 0 ? h : span);
  return f;
}

std::string header(const Frame& f) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(f.width()) << "\" height=\""
      << num(f.height()) << "\" viewBox=\"0 0 " << num(f.width()) << ' ' << num(f.height()) << "\">\n";
  return out.str();
}

Circle default_circle(const FoldedLayout& lay) {
  std::vector<Point> pts;
  for (const auto& p : lay.panels)
    for (const auto& v : p.vertices)
      if (std::none_of(pts.begin(), pts.end(), [&](Point q) { return dist(q, v) < 1e-9; })) pts.push_back(v);
  Point c{};
  for (const auto& p : pts) c = c + p;
  c = (1.0 / static_cast<double>(pts.size())) * c;
  double r = 0;
  for (const auto& p : pts) r = std::max(r, dist(p, c));
  return {c, r};
}

}  // namespace

std::string to_svg(const FoldedLayout& lay, const RenderOptions& opt) {
  if (lay.panels.empty()) throw Error(ErrorKind::invalid_input, "empty layout");
  if (!(opt.scale > 0)) throw Error(ErrorKind::invalid_input, "scale must be positive");

  std::vector<std::size_t> order(lay.panels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lay.panels[a].layer < lay.panels[b].layer; });
  std::vector<Point> shift(lay.panels.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    shift[order[rank]] = (opt.epsilon_display * static_cast<double>(rank)) * Point{1, -1};

  std::optional<Circle> circle;
  if (opt.show_circumcircle) circle = opt.circle ? *opt.circle : default_circle(lay);

  Box box;
  for (std::size_t k = 0; k < lay.panels.size(); ++k)
    for (const auto& v : lay.panels[k].vertices) box.add(v + shift[k]);
  if (circle) {
    box.add(circle->center - Point{circle->radius, circle->radius});
    box.add(circle->center + Point{circle->radius, circle->radius});
  }
  const Frame f = make_frame(box, opt.scale);

  std::ostringstream out;
  out << header(f);
  const double stroke = 0.01 * opt.scale;
  if (circle) {
    const Point c = f.map(circle->center);
    out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(circle->radius * opt.scale)
        << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  for (std::size_t k : order) {
    const auto& panel = lay.panels[k];
    out << "<polygon data-layer=\"" << panel.layer << "\" points=\"";
    for (int i = 0; i < 4; ++i) {
      const Point p = f.map(panel.vertices[i] + shift[k]);
      out << (i ? " " : "") << num(p.x) << ',' << num(p.y);
    }
    out << "\" fill=\"" << kPanelFill[k % kPanelFill.size()] << "\" fill-opacity=\"0.85\" stroke=\"#222222\""
        << " stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  if (opt.show_creases) {
    for (std::size_t k = 0; k < lay.panels.size(); ++k) {
      const auto& v = lay.panels[k].vertices;
      if (k + 1 == lay.panels.size() && lay.source.presentation == Presentation::truncated) break;
      const Point a = f.map(v[1] + shift[k]), b = f.map(v[2] + shift[k]);
      out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
          << "\" stroke=\"#222222\" stroke-dasharray=\"" << num(4 * stroke) << "\" stroke-width=\"" << num(stroke)
          << "\"/>\n";
    }
  }
  if (opt.show_centerline) {
    out << "<path d=\"";
    for (std::size_t k = 0; k < lay.centerline.size(); ++k) {
      const Point a = f.map(lay.centerline[k].a + shift[k]), b = f.map(lay.centerline[k].b + shift[k]);
      out << (k ? " " : "") << "M " << num(a.x) << ' ' << num(a.y) << " L " << num(b.x) << ' ' << num(b.y);
    }
    out << "\" fill=\"none\" stroke=\"#c1121f\" stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_table_figure(const std::vector<RatioReport>& reports) {
  if (reports.empty()) throw Error(ErrorKind::invalid_input, "no reports to plot");
  // One series per (family, presentation), in first-seen order.
  std::vector<std::pair<std::string, std::vector<Point>>> series;
  Box data;
  for (const auto& r : reports) {
    const std::string key = std::string(family_name(r.family.tag)) +
                            (r.presentation == Presentation::truncated ? " (truncated)" : "");
    auto it = std::find_if(series.begin(), series.end(), [&](const auto& s) { return s.first == key; });
    if (it == series.end()) it = series.insert(series.end(), {key, {}});
    const Point p{static_cast<double>(r.family.parameter), r.kusner_quotient};
    it->second.push_back(p);
    data.add(p);
  }
  const double guides[2] = {4 / std::numbers::pi, 2 / std::numbers::pi};
  for (double g : guides) data.add({data.x0, g});
  data.add({data.x0, 0.0});

  // Plot area is normalised to 8 x 5 units before scaling.
  const double xs = data.x1 > data.x0 ? 8.0 / (data.x1 - data.x0) : 1.0;
  const double ys = data.y1 > data.y0 ? 5.0 / (data.y1 - data.y0) : 1.0;
  auto to_plot = [&](Point p) { return Point{(p.x - data.x0) * xs, (p.y - data.y0) * ys}; };
  Box box;
  box.add({0, 0});
  box.add({8, 5});
  const Frame f = make_frame(box, 60);

  std::ostringstream out;
  out << header(f);
  const Point o = f.map({0, 0}), xe = f.map({8, 0}), ye = f.map({0, 5});
  out << "<line x1=\"" << num(o.x) << "\" y1=\"" << num(o.y) << "\" x2=\"" << num(xe.x) << "\" y2=\"" << num(xe.y)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << num(o.x) << "\" y1=\"" << num(o.y) << "\" x2=\"" << num(ye.x) << "\" y2=\"" << num(ye.y)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (double g : guides) {
    const Point a = f.map(to_plot({data.x0, g})), b = f.map(to_plot({data.x1, g}));
    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"#888888\" stroke-dasharray=\"6\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kSeriesColor[s % kSeriesColor.size()];
    const auto& pts = series[s].second;
    if (pts.size() > 1) {
      out << "<path d=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point p = f.map(to_plot(pts[i]));
        out << (i ? " L " : "M ") << num(p.x) << ' ' << num(p.y);
      }
      out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
    }
    for (const auto& pt : pts) {
      const Point p = f.map(to_plot(pt));
      out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ribbon
