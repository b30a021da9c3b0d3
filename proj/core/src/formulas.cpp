#include "ribbon/formulas.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ribbon/error.hpp"

namespace ribbon {
namespace {

constexpr double pi = std::numbers::pi;

ClosedForm cot_form(long coefficient, long den) {
  ClosedForm f;
  f.coefficient = coefficient;
  f.angle = ExactAngle(1, den);
  f.value = static_cast<double>(coefficient) / std::tan(f.angle->radians());
  f.symbolic = std::to_string(coefficient) + "cot(π/" + std::to_string(den) + ")";
  return f;
}

std::string fraction_text(long num, long den) {
  const long g = std::gcd(num, den);
  num /= g, den /= g;
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

ClosedForm closed_form_ratio(const FamilyId& id, Presentation presentation) {
  check_parameter(id);
  if (presentation == Presentation::truncated && id.tag != Family::odd_wrap)
    throw Error(ErrorKind::not_applicable, "only the odd wrap has a truncated presentation");
  const long v = id.parameter;
  switch (id.tag) {
    case Family::odd_wrap:
      return cot_form(presentation == Presentation::truncated ? 2 * v : 2 * v + 1, 2 * v + 1);
    case Family::star_polygon: return cot_form(v, v);
    case Family::pinwheel: return cot_form(2 * v + 1, 2 * (2 * v + 1));
    case Family::even_wrap_plus2: return cot_form(2 * v + 2, 2 * v + 2);
    case Family::even_wrap_plus4: return cot_form(2 * v + 4, 2 * v + 4);
    case Family::short_52: return cot_form(7, 5);
    case Family::short_72: return cot_form(9, 5);
    case Family::rect_74: {
      ClosedForm f;
      f.value = 24;
      f.coefficient = 24;
      f.symbolic = "24";
      return f;
    }
  }
  throw Error(ErrorKind::invalid_input, "unknown family");
}

long crossing_number(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error(ErrorKind::invalid_input, "torus knot needs coprime p, q >= 2");
  return std::min(static_cast<long>(p) * (q - 1), static_cast<long>(q) * (p - 1));
}

long crossing_number(const FamilyId& id) {
  const auto knot = claimed_knot(id);
  return knot ? crossing_number(knot->p, knot->q) : kSevenFourCrossings;
}

double kusner_quotient(const FamilyId& id, Presentation presentation) {
  return closed_form_ratio(id, presentation).value / static_cast<double>(crossing_number(id));
}

std::string kusner_quotient_symbolic(const FamilyId& id, Presentation presentation) {
  const ClosedForm f = closed_form_ratio(id, presentation);
  const long c = crossing_number(id);
  if (!f.angle) return fraction_text(f.coefficient, c);
  const long g = std::gcd(f.coefficient, c);
  const std::string coeff = f.coefficient / g == 1 && c / g == 1 ? "" : fraction_text(f.coefficient, c);
  return coeff + "cot(π/" + std::to_string(f.angle->den()) + ")";
}

LimitConstant limit_constant(Family family) {
  switch (family) {
    case Family::odd_wrap:
    case Family::pinwheel: return {false, 4 / pi, "4/π"};
    case Family::even_wrap_plus2:
    case Family::even_wrap_plus4: return {false, 2 / pi, "2/π"};
    case Family::star_polygon: return {true, INFINITY, "∞"};
    default: throw Error(ErrorKind::not_applicable, "fixed constructions have no limit");
  }
}

double measured_ratio(const FamilyId& id, Presentation presentation, double epsilon) {
  const double r = ratio(layout(build(id, presentation, epsilon)));
  if (id.tag != Family::short_52 && id.tag != Family::short_72) return r;
  return 2 * ratio(layout(build(id, presentation, 0.5 * epsilon))) - r;
}

std::vector<BoundsRow> bounds_table(int q_max) {
  double even_inf = INFINITY, odd_inf = INFINITY;
  for (int q = 3; q <= q_max; q += 2)
    for (Family f : {Family::even_wrap_plus2, Family::even_wrap_plus4})
      even_inf = std::min(even_inf, kusner_quotient({f, q}));
  for (int q = 2; q <= q_max; ++q)
    odd_inf = std::min(odd_inf, kusner_quotient({Family::odd_wrap, q}, Presentation::truncated));

  std::vector<BoundsRow> rows;
  rows.push_back({"c1_closed", "<=", 2 / pi, "2/π", "(2q+2,q) and (2q+4,q) torus knots as q → ∞", even_inf});
  rows.push_back({"c1_truncated", "<=", 4 / pi, "4/π", "(q+1,q) torus knots as q → ∞", odd_inf});
  rows.push_back({"c2_closed", ">=", kusner_quotient({Family::odd_wrap, 2}), "(5/3)cot(π/5)",
                  "closed trefoil (3,2)", std::nullopt});
  rows.push_back({"c2_truncated", ">=", kFigureEightTruncatedRibbonlength / kFigureEightCrossings, "(3+√2)/2",
                  "truncated figure-eight, conjectured Ribbonlength 6+2√2 (imported constant)", std::nullopt});
  return rows;
}

RatioReport ratio_report(const FamilyId& id, Presentation presentation, bool with_geometry) {
  RatioReport r;
  r.family = id;
  r.params = claimed_knot(id);
  r.presentation = presentation;
  const ClosedForm f = closed_form_ratio(id, presentation);
  r.closed_form_ratio = f.value;
  r.symbolic = f.symbolic;
  r.crossing_number = crossing_number(id);
  r.kusner_quotient = r.closed_form_ratio / static_cast<double>(r.crossing_number);
  if (with_geometry) r.geometric_ratio = measured_ratio(id, presentation);
  return r;
}

std::vector<RatioReport> quotient_rows(int q_max, int p_max, bool with_geometry) {
  std::vector<RatioReport> rows;
  for (int q = 2; q <= q_max; ++q)
    for (auto pr : {Presentation::closed, Presentation::truncated})
      rows.push_back(ratio_report({Family::odd_wrap, q}, pr, with_geometry));
  for (int p = 7; p <= p_max; p += 2)
    rows.push_back(ratio_report({Family::star_polygon, p}, Presentation::closed, with_geometry));
  for (int q = 2; q <= q_max; ++q)
    rows.push_back(ratio_report({Family::pinwheel, q}, Presentation::closed, with_geometry));
  for (Family f : {Family::even_wrap_plus2, Family::even_wrap_plus4})
    for (int q = 3; q <= q_max; q += 2) rows.push_back(ratio_report({f, q}, Presentation::closed, with_geometry));
  for (Family f : {Family::short_52, Family::short_72, Family::rect_74})
    rows.push_back(ratio_report({f, 0}, Presentation::closed, with_geometry));
  return rows;
}

std::string quotient_table(const std::vector<RatioReport>& rows, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "family,p,q,presentation,ratio,crossing,quotient\n";
    for (const auto& r : rows) {
      out << family_name(r.family.tag) << ',';
      if (r.params) out << r.params->p << ',' << r.params->q << ',';
      else out << ",,";
      out << to_string(r.presentation) << ',' << full_precision(r.closed_form_ratio) << ',' << r.crossing_number
          << ',' << full_precision(r.kusner_quotient) << '\n';
    }
    return out.str();
  }
  out << "| family | (p,q) | presentation | ratio | closed form | crossing | quotient |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << family_name(r.family.tag) << " | ";
    if (r.params) out << '(' << r.params->p << ',' << r.params->q << ')';
    else out << "7_4";
    out << " | " << to_string(r.presentation) << " | " << format_significant(r.closed_form_ratio) << " | "
        << r.symbolic << " | " << r.crossing_number << " | " << format_significant(r.kusner_quotient) << " |\n";
  }
  out << "\nRatios are conjectured Ribbonlengths or upper bounds on Ribbonlength, not established minima.\n";
  return out.str();
}

std::string bounds_table_text(const std::vector<BoundsRow>& rows, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "constant,symbolic,relation,value,computed_infimum,witness\n";
    for (const auto& r : rows)
      out << r.constant << ',' << r.symbolic << ',' << r.relation << ',' << full_precision(r.value) << ','
          << (r.computed_infimum ? full_precision(*r.computed_infimum) : "") << ",\"" << r.witness << "\"\n";
    return out.str();
  }
  out << "| constant | bound | value | computed infimum | witness |\n|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << r.constant << " | " << r.constant.substr(0, 2) << ' ' << r.relation << ' ' << r.symbolic << " | "
        << format_significant(r.value) << " | "
        << (r.computed_infimum ? format_significant(*r.computed_infimum) : "-") << " | " << r.witness << " |\n";
  out << "\nc1 rows are upper bounds on c1 reached only in the limit; the computed infimum is the smallest\n"
         "quotient evaluated for the witness family. The figure-eight value is an imported constant.\n";
  return out.str();
}

}  // namespace ribbon
