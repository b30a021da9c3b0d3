#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/constructions.hpp"

namespace ribbon {

// Conjectured truncated Ribbonlength of the figure-eight knot. It is an imported
// constant: no builder here produces it.
inline const double kFigureEightTruncatedRibbonlength = 6.0 + 2.0 * 1.4142135623730950488;
constexpr int kFigureEightCrossings = 4;
constexpr int kSevenFourCrossings = 7;

// coefficient · cot(angle), or a bare constant when angle is absent.
struct ClosedForm {
  double value = 0;
  long coefficient = 0;
  std::optional<ExactAngle> angle;
  std::string symbolic;
};

ClosedForm closed_form_ratio(const FamilyId& id, Presentation presentation = Presentation::closed);

// min{p(q-1), q(p-1)}; throws Error(invalid_input) unless gcd(p, q) = 1 and p, q >= 2.
long crossing_number(int p, int q);
long crossing_number(const FamilyId& id);

double kusner_quotient(const FamilyId& id, Presentation presentation = Presentation::closed);
std::string kusner_quotient_symbolic(const FamilyId& id, Presentation presentation = Presentation::closed);

struct LimitConstant {
  bool divergent = false;
  double value = 0;
  std::string symbolic;
};

// Throws Error(not_applicable) for the fixed constructions.
LimitConstant limit_constant(Family family);

struct BoundsRow {
  std::string constant;  // c1_closed, c1_truncated, c2_closed, c2_truncated
  std::string relation;  // "<=" or ">="
  double value = 0;
  std::string symbolic;
  std::string witness;
  // Smallest quotient actually computed for the witness family, for the c1 rows.
  std::optional<double> computed_infimum;
};

std::vector<BoundsRow> bounds_table(int q_max = 201);

// Ratio measured on the built layout. The short variants are exact only in the
// epsilon -> 0 limit; their error is linear in epsilon, so the value returned is
// the extrapolation 2·ratio(epsilon/2) - ratio(epsilon).
double measured_ratio(const FamilyId& id, Presentation presentation = Presentation::closed, double epsilon = 1e-3);

struct RatioReport {
  FamilyId family;
  std::optional<TorusKnotParams> params;
  Presentation presentation = Presentation::closed;
  std::optional<double> geometric_ratio;
  double closed_form_ratio = 0;
  long crossing_number = 0;
  double kusner_quotient = 0;
  std::string symbolic;
};

RatioReport ratio_report(const FamilyId& id, Presentation presentation, bool with_geometry);

// Rows ordered by family, then parameter, then presentation.
std::vector<RatioReport> quotient_rows(int q_max, int p_max, bool with_geometry = false);

enum class TableFormat { csv, markdown };

std::string quotient_table(const std::vector<RatioReport>& rows, TableFormat format);
std::string bounds_table_text(const std::vector<BoundsRow>& rows, TableFormat format);

// printf-style %.<digits>g
std::string format_significant(double value, int digits = 6);

}  // namespace ribbon
