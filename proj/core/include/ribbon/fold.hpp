#pragma once

#include <array>
#include <string>
#include <vector>

#include "ribbon/angle.hpp"
#include "ribbon/geometry.hpp"

namespace ribbon {

enum class Presentation { closed, truncated };

const char* to_string(Presentation p);
Presentation presentation_from_string(const std::string& s);

// A fold line crossing the strip at arclength `position`. The angle is measured
// counterclockwise from the strip direction to the crease line.
struct CreaseSpec {
  double position = 0;
  ExactAngle angle{1, 2};
  // Height change from the panel before this crease to the panel after it.
  int layer_shift = 1;
};

// World pose of the strip point (0, 0) and of the strip direction.
struct Placement {
  Point origin;
  double heading = 0;
};

// The strip occupies 0 <= s <= length, |y| <= width/2 in strip coordinates.
// Closed programs end with the seam crease at s == length; truncated programs
// are cut along start_cut at s = 0 and end_cut at s = length.
struct FoldProgram {
  double width = 1;
  double length = 0;
  std::vector<CreaseSpec> creases;
  Presentation presentation = Presentation::truncated;
  std::string label;
  ExactAngle start_cut{1, 2};
  ExactAngle end_cut{1, 2};
  Placement placement;
};

struct Panel {
  // Strip corners in the order: bottom-left, bottom-right, top-right, top-left.
  // Sides 0 and 2 are the ribbon edges; sides 1 and 3 lie on crease or cut lines.
  std::array<Point, 4> vertices;
  std::array<int, 2> parallel_pair{0, 2};
  int layer = 0;
};

struct Segment {
  Point a;
  Point b;
};

struct FoldedLayout {
  std::vector<Panel> panels;
  std::vector<Segment> centerline;
  FoldProgram source;
  // Sum of all layer shifts, seam included; zero for truncated programs.
  int helix_period = 0;
};

struct FoldOptions {
  double closure_tolerance = 1e-9;
  double edge_tolerance = 1e-12;
};

// Throws Error(malformed_program) on invariant violations.
void validate(const FoldProgram& program, const FoldOptions& options = {});

// Strip-to-world transform of each panel.
std::vector<Isometry> panel_transforms(const FoldProgram& program);

FoldedLayout layout(const FoldProgram& program, const FoldOptions& options = {});
FoldProgram unfold(const FoldedLayout& layout);

double centerline_length(const FoldedLayout& layout);
double centerline_length(const FoldProgram& program);
double ratio(const FoldedLayout& layout);
double ratio(const FoldProgram& program);

std::size_t panel_count(const FoldProgram& program);
int helix_period(const FoldProgram& program);

// Distance between the lines carrying the panel's ribbon edges.
double panel_width(const Panel& panel);
bool panel_is_isosceles(const Panel& panel, double tol = 1e-9);

std::string to_json(const FoldProgram& program);
// Rejects unsorted creases and missing fields with Error(invalid_input).
FoldProgram program_from_json(const std::string& text);

}  // namespace ribbon
