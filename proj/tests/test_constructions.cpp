#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ribbon/ribbon.hpp"

using namespace ribbon;
namespace {

constexpr double pi = std::numbers::pi;
double cot(double x) { return 1 / std::tan(x); }

// Ribbon-edge lengths of a panel, shorter first.
std::pair<double, double> edges(const Panel& p) {
  const double a = dist(p.vertices[0], p.vertices[1]);
  const double b = dist(p.vertices[3], p.vertices[2]);
  return {std::min(a, b), std::max(a, b)};
}

void expect_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

double interior_angle(Point prev, Point at, Point next) {
  const Point u = unit(prev - at), v = unit(next - at);
  return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

}  // namespace

TEST(OddWrap, ReferenceRatios) {
  EXPECT_NEAR(ratio(layout(build_odd_wrap(3, Presentation::truncated))), 6 * cot(pi / 7), 1e-12);
  const auto closed = layout(build_odd_wrap(2, Presentation::closed));
  EXPECT_EQ(closed.panels.size(), 5u);
  EXPECT_NEAR(ratio(closed), 5 * cot(pi / 5), 1e-12);
}

TEST(OddWrap, HeptagonChordsMatchDirectConstruction) {
  // Chords of the circumscribed heptagon, read straight off its vertices.
  const int n = 7;
  const double r = 1 / (2 * std::sin(pi / n));
  auto vertex = [&](int j) { return Point{r * std::cos(2 * pi * j / n), r * std::sin(2 * pi * j / n)}; };
  const double base = dist(vertex(0), vertex(3));
  // The legs are the sides V0V6 and V3V4, so the top chord V6V4 lies across the centre.
  const double top = dist(vertex(6), vertex(4));
  const Point a = vertex(0), b = vertex(3);
  const double width = std::fabs(cross(unit(b - a), vertex(4) - a));

  const double b_formula = 1 / (2 * std::sin(pi / 14));
  const double t_formula = std::cos(3 * pi / 14) / std::sin(pi / 7);
  const double w_formula = std::cos(pi / 14);
  EXPECT_NEAR(b_formula, base, 1e-12);
  EXPECT_NEAR(t_formula, top, 1e-12);
  EXPECT_NEAR(w_formula, width, 1e-12);

  for (auto pres : {Presentation::truncated, Presentation::closed}) {
    const auto prog = build_odd_wrap(3, pres);
    EXPECT_NEAR(prog.width, w_formula, 1e-12);
    for (const auto& panel : layout(prog).panels) {
      const auto [t, bb] = edges(panel);
      EXPECT_NEAR(t, top, 1e-12);
      EXPECT_NEAR(bb, base, 1e-12);
      EXPECT_NEAR(dist(panel.vertices[1], panel.vertices[2]), 1, 1e-12);
    }
  }
}

TEST(OddWrap, ChordEndpointsOnCircumcircle) {
  for (int q = 2; q <= 12; ++q) {
    const double r = 1 / (2 * std::sin(pi / (2 * q + 1)));
    for (auto pres : {Presentation::truncated, Presentation::closed})
      for (const auto& panel : layout(build_odd_wrap(q, pres)).panels)
        for (const auto& v : panel.vertices) EXPECT_NEAR(norm(v), r, 1e-9) << "q=" << q;
  }
}

TEST(StarPolygon, Shape) {
  const auto prog = build_star_polygon(7);
  EXPECT_NEAR(prog.width, std::sin(2 * pi / 7), 1e-12);
  EXPECT_NEAR(ratio(prog), 7 * cot(pi / 7), 1e-12);
  EXPECT_NEAR(ratio(prog), 14.5, 0.05);
  const auto lay = layout(prog);
  ASSERT_EQ(lay.panels.size(), 7u);
  for (const auto& panel : lay.panels) {
    const auto [t, b] = edges(panel);
    EXPECT_NEAR(t, 1, 1e-12);
    EXPECT_NEAR(b, 1 + 2 * std::cos(2 * pi / 7), 1e-12);
    EXPECT_NEAR(dist(panel.vertices[1], panel.vertices[2]), 1, 1e-12);
    EXPECT_NEAR(dist(panel.vertices[0], panel.vertices[3]), 1, 1e-12);
  }
  EXPECT_NEAR(ratio(layout(build_star_polygon(9))), 9 * cot(pi / 9), 1e-9 * 9 * cot(pi / 9));
}

TEST(StarPolygon, CentralHoleIsConcentricRegularPolygon) {
  for (int p = 7; p <= 25; p += 2) {
    const auto hole = central_hole(layout(build_star_polygon(p)));
    ASSERT_EQ(hole.size(), static_cast<std::size_t>(p)) << "p=" << p;
    const double angle = pi * (p - 2) / p;
    const double radius = norm(hole[0]);
    EXPECT_GT(radius, 0.1);
    for (std::size_t i = 0; i < hole.size(); ++i) {
      const Point prev = hole[(i + hole.size() - 1) % hole.size()], next = hole[(i + 1) % hole.size()];
      EXPECT_NEAR(interior_angle(prev, hole[i], next), angle, 1e-9) << "p=" << p;
      EXPECT_NEAR(norm(hole[i]), radius, 1e-9) << "p=" << p;
    }
    EXPECT_LT(radius, polygon_circumradius(p));
  }
}

TEST(Pinwheel, ReferenceRatios) {
  EXPECT_NEAR(ratio(layout(build_pinwheel(2))), 5 * cot(pi / 10), 1e-12);
  EXPECT_NEAR(ratio(layout(build_pinwheel(2))), 15.4, 0.05);
  EXPECT_NEAR(ratio(layout(build_pinwheel(3))), 7 * cot(pi / 14), 1e-12);
}

TEST(Pinwheel, PanelShape) {
  for (int q = 2; q <= 8; ++q) {
    const int n = 2 * q + 1;
    const auto prog = build_pinwheel(q);
    const double w = prog.width;
    const auto lay = layout(prog);
    ASSERT_EQ(lay.panels.size(), static_cast<std::size_t>(n));
    for (const auto& panel : lay.panels) {
      const auto [t, b] = edges(panel);
      EXPECT_NEAR(t, 2 * w * cot(pi / n), 1e-9);
      EXPECT_NEAR(b, 2 * w / std::sin(pi / n), 1e-9);
    }
  }
  const auto [t, b] = edges(layout(build_pinwheel(2)).panels[0]);
  const double w = build_pinwheel(2).width;
  EXPECT_NEAR((b + t) / (2 * w), cot(pi / 10), 1e-12);
  const double x = pi / 5;
  EXPECT_NEAR(cot(x) + 1 / std::sin(x), cot(x / 2), 1e-12);
}

TEST(EvenWrap, ReferenceRatios) {
  EXPECT_NEAR(ratio(layout(build_even_wrap(3, 2))), 8 * cot(pi / 8), 1e-12);
  EXPECT_NEAR(ratio(layout(build_even_wrap(3, 4))), 10 * cot(pi / 10), 1e-12);
  EXPECT_NEAR(ratio(layout(build_even_wrap(5, 2))), 12 * cot(pi / 12), 1e-9 * 12 * cot(pi / 12));
}

TEST(EvenWrap, CentralHole) {
  // (8,3) closes with no gap in the centre.
  EXPECT_TRUE(central_hole(layout(build_even_wrap(3, 2))).empty());
  EXPECT_EQ(hole_inradius(layout(build_even_wrap(3, 2))), 0);
  for (int q = 3; q <= 11; q += 2) {
    const int n = 2 * q + 4;
    const auto lay = layout(build_even_wrap(q, 4));
    const auto hole = central_hole(lay);
    EXPECT_EQ(hole.size(), static_cast<std::size_t>(n)) << "q=" << q;
    EXPECT_GT(hole_inradius(lay), 0) << "q=" << q;
    // The plus-two wraps put a ribbon edge through the centre for every q.
    EXPECT_TRUE(central_hole(layout(build_even_wrap(q, 2))).empty()) << "q=" << q;
  }
}

TEST(ShortVariants, PanelCountsAndLimits) {
  for (double eps : {1e-2, 1e-3, 1e-5}) {
    EXPECT_EQ(layout(build_short_52(eps)).panels.size(), 7u);
    EXPECT_EQ(layout(build_short_72(eps)).panels.size(), 9u);
  }
  const double l52 = 7 * cot(pi / 5), l72 = 9 * cot(pi / 5);
  EXPECT_NEAR(l52, 9.6, 0.05);
  EXPECT_NEAR(l72, 12.4, 0.05);
  EXPECT_NEAR(ratio(layout(build_short_52(1e-6))), l52, 1e-4);
  EXPECT_NEAR(ratio(layout(build_short_72(1e-6))), l72, 1e-4);
}

TEST(ShortVariants, ErrorIsFirstOrderInEpsilon) {
  for (auto* builder : {&build_short_52, &build_short_72}) {
    const double limit = builder == &build_short_52 ? 7 * cot(pi / 5) : 9 * cot(pi / 5);
    const double e1 = ratio(layout((*builder)(1e-3))) - limit;
    const double e2 = ratio(layout((*builder)(1e-6))) - limit;
    EXPECT_NE(e1, 0);
    // Shrinking epsilon a thousandfold shrinks the error a thousandfold.
    EXPECT_NEAR(e2 / e1, 1e-3, 1e-5);
    EXPECT_NEAR(ratio(layout((*builder)(1e-3))) - ratio(layout((*builder)(1e-6))), e1 * (1 - 1e-3), 1e-9);
  }
}

TEST(SevenFour, RatioAndAspect) {
  const auto prog = build_74();
  const auto lay = layout(prog);
  EXPECT_NEAR(ratio(lay), 24, 1e-9);
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& panel : lay.panels)
    for (const auto& v : panel.vertices) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
  const double lo = std::min(xmax - xmin, ymax - ymin), hi = std::max(xmax - xmin, ymax - ymin);
  EXPECT_NEAR(hi / lo, 1.5, 1e-9);
  // Both sides are whole multiples of a common length.
  EXPECT_NEAR(lo / 2, hi / 3, 1e-9);
}

TEST(Builders, MatchClosedFormsAndClose) {
  auto check = [](const FamilyId& id, Presentation pres = Presentation::closed) {
    const auto prog = build(id, pres);
    const auto lay = layout(prog);
    const double expected = closed_form_ratio(id, pres).value;
    EXPECT_LT(std::fabs(ratio(lay) - expected) / expected, 1e-9) << family_label(id);
  };
  for (int q = 2; q <= 12; ++q) {
    check({Family::odd_wrap, q});
    check({Family::odd_wrap, q}, Presentation::truncated);
    check({Family::pinwheel, q});
  }
  for (int p = 7; p <= 25; p += 2) check({Family::star_polygon, p});
  for (int q = 3; q <= 11; q += 2) {
    check({Family::even_wrap_plus2, q});
    check({Family::even_wrap_plus4, q});
  }
  check({Family::rect_74, 0});
}

TEST(Builders, PanelCounts) {
  for (int q = 2; q <= 12; ++q) {
    EXPECT_EQ(panel_count(build_odd_wrap(q, Presentation::truncated)), static_cast<std::size_t>(2 * q));
    EXPECT_EQ(panel_count(build_odd_wrap(q, Presentation::closed)), static_cast<std::size_t>(2 * q + 1));
    EXPECT_EQ(panel_count(build_pinwheel(q)), static_cast<std::size_t>(2 * q + 1));
  }
  for (int p = 7; p <= 25; p += 2) EXPECT_EQ(panel_count(build_star_polygon(p)), static_cast<std::size_t>(p));
  for (int q = 3; q <= 11; q += 2) {
    EXPECT_EQ(panel_count(build_even_wrap(q, 2)), static_cast<std::size_t>(2 * q + 2));
    EXPECT_EQ(panel_count(build_even_wrap(q, 4)), static_cast<std::size_t>(2 * q + 4));
  }
}

TEST(Builders, ParameterErrors) {
  expect_error(ErrorKind::parameter, [] { build_odd_wrap(1, Presentation::closed); });
  expect_error(ErrorKind::parameter, [] { build_star_polygon(5); });
  expect_error(ErrorKind::parameter, [] { build_star_polygon(8); });
  expect_error(ErrorKind::parameter, [] { build_pinwheel(1); });
  expect_error(ErrorKind::parameter, [] { build_even_wrap(4, 2); });
  expect_error(ErrorKind::parameter, [] { build_even_wrap(3, 3); });
  expect_error(ErrorKind::parameter, [] { build_short_52(0); });
  expect_error(ErrorKind::parameter, [] { build_short_72(0.2); });
  expect_error(ErrorKind::not_applicable, [] { build({Family::star_polygon, 7}, Presentation::truncated); });
}

TEST(Builders, Names) {
  for (auto f : {Family::odd_wrap, Family::star_polygon, Family::pinwheel, Family::even_wrap_plus2,
                 Family::even_wrap_plus4, Family::short_52, Family::short_72, Family::rect_74})
    EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_EQ(family_from_name("odd_wrap"), Family::odd_wrap);
  EXPECT_THROW(family_from_name("hexagon"), Error);
  ASSERT_TRUE(claimed_knot({Family::even_wrap_plus4, 3}).has_value());
  EXPECT_EQ(claimed_knot({Family::even_wrap_plus4, 3})->p, 10);
  EXPECT_EQ(claimed_knot({Family::even_wrap_plus4, 3})->q, 3);
  EXPECT_FALSE(claimed_knot({Family::rect_74, 0}).has_value());
}
