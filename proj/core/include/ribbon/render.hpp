#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/fold.hpp"
#include "ribbon/formulas.hpp"

namespace ribbon {

struct Circle {
  Point center;
  double radius = 0;
};

struct RenderOptions {
  // Panels are shifted by epsilon_display times their rank in layer order, which
  // pulls coincident edges apart on screen.
  double epsilon_display = 0;
  bool show_creases = true;
  bool show_circumcircle = false;
  bool show_centerline = false;
  double scale = 100;
  // Circle drawn by show_circumcircle; by default the circle about the centroid
  // of the distinct panel vertices through the farthest one.
  std::optional<Circle> circle;
};

// Throws Error(invalid_input) for an empty layout or nonpositive scale.
std::string to_svg(const FoldedLayout& layout, const RenderOptions& options = {});

// Quotient against family parameter, with the 4/π and 2/π asymptotes.
std::string render_table_figure(const std::vector<RatioReport>& reports);

}  // namespace ribbon
