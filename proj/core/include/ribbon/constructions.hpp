#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/fold.hpp"

namespace ribbon {

enum class Family {
  odd_wrap,
  star_polygon,
  pinwheel,
  even_wrap_plus2,
  even_wrap_plus4,
  short_52,
  short_72,
  rect_74,
};

// `parameter` is q for the wrap and pinwheel families, p for star polygons and
// unused for the three fixed constructions.
struct FamilyId {
  Family tag = Family::odd_wrap;
  int parameter = 0;
};

struct TorusKnotParams {
  int p = 3;
  int q = 2;
};

const char* family_name(Family f);
// Accepts "odd-wrap", "odd_wrap", "rect74", ...
Family family_from_name(const std::string& name);
bool is_parametric(Family f);
std::string family_label(const FamilyId& id);

// Throws Error(parameter) when the parameter is out of range.
void check_parameter(const FamilyId& id);
// The torus knot a construction claims; nullopt for 7_4.
std::optional<TorusKnotParams> claimed_knot(const FamilyId& id);

FoldProgram build_odd_wrap(int q, Presentation presentation);
FoldProgram build_star_polygon(int p);
FoldProgram build_pinwheel(int q);
FoldProgram build_even_wrap(int q, int variant);
FoldProgram build_short_52(double epsilon);
FoldProgram build_short_72(double epsilon);
FoldProgram build_74();

FoldProgram build(const FamilyId& id, Presentation presentation = Presentation::closed, double epsilon = 1e-3);

// Regular n-gon with side 1, centred at the origin, vertex j at angle 2πj/n.
double polygon_circumradius(int n);
Point polygon_vertex(int n, int j);

// Uncovered region around `center`, as a convex polygon bounded by the panel
// edges nearest to it. Empty when `center` is covered by a panel.
std::vector<Point> central_hole(const FoldedLayout& layout, Point center = {});
// Distance from `center` to the nearest panel (0 when covered).
double hole_inradius(const FoldedLayout& layout, Point center = {});

}  // namespace ribbon
