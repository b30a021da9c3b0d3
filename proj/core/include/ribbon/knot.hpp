#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "ribbon/constructions.hpp"
#include "ribbon/fold.hpp"

namespace ribbon {

using Integer = boost::multiprecision::cpp_int;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<int, Integer> coefficients);
  // c[0] + c[1] t + c[2] t^2 + ..., all shifted by t^low.
  static LaurentPolynomial from_coefficients(const std::vector<long>& c, int low = 0);

  const std::map<int, Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  // Dense coefficient list from min_exponent to max_exponent.
  std::vector<Integer> dense() const;

  // Shift to minimum exponent 0 and make the constant term positive.
  LaurentPolynomial normalized() const;
  bool is_palindromic() const;
  // Value at t = 1 and t = -1 (exact).
  Integer at_one() const;
  Integer at_minus_one() const;
  std::string str() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, Integer> coeffs_;
};

// Equality up to multiplication by ±t^k.
bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);

struct Crossing {
  int id = 0;
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  int sign = 1;
  Point position;
};

struct GaussEntry {
  int crossing = 0;
  bool over = false;
  int sign = 1;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

struct KnotDiagram {
  std::vector<GaussEntry> gauss;
  std::vector<Crossing> crossings;
  int arcs = 0;

  std::size_t crossing_count() const { return crossings.size(); }
  // Crossing k appears as +(k+1) when passing over and -(k+1) when passing under.
  std::vector<long> signed_code() const;
};

// Builds arcs and crossings from a Gauss sequence; throws Error(invalid_diagram)
// unless every crossing occurs exactly twice, once over and once under, with one sign.
KnotDiagram diagram_from_gauss(const std::vector<GaussEntry>& gauss);

struct ExtractOptions {
  // Vertex displacement; 0 selects 1e-6 of the ribbon width.
  double perturbation = 0;
  // Re-extract at half the perturbation and require the same Gauss code.
  bool recheck = true;
};

KnotDiagram extract_diagram(const FoldedLayout& layout, const ExtractOptions& options = {});

// Deletes row `row` and column `col` (defaults: the last ones) of the crossing/arc
// matrix and returns the normalized determinant.
LaurentPolynomial alexander_polynomial(const KnotDiagram& diagram, int row = -1, int col = -1);
LaurentPolynomial torus_alexander(int p, int q);
Integer determinant_invariant(const KnotDiagram& diagram);

// Fraction-free determinant of a square matrix over Z[t]; polynomials are dense
// coefficient vectors starting at t^0.
using IntPoly = std::vector<Integer>;
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> matrix);

struct CertificationReport {
  std::string label;
  std::string expected;
  std::size_t crossing_count = 0;
  long crossing_lower_bound = 0;
  std::vector<long> gauss;
  LaurentPolynomial alexander;
  LaurentPolynomial reference;
  Integer determinant;
  bool alexander_match = false;
  bool crossing_bound_ok = false;

  bool verdict() const { return alexander_match && crossing_bound_ok; }
  std::string text() const;
  std::string json() const;
};

CertificationReport verify_knot_type(const FoldProgram& program, const TorusKnotParams& expected,
                                     const ExtractOptions& options = {});
// Certification against an arbitrary reference polynomial (used for 7_4).
CertificationReport verify_knot_type(const FoldProgram& program, const LaurentPolynomial& reference,
                                     long crossing_lower_bound, const std::string& expected,
                                     const ExtractOptions& options = {});

// 4t^2 - 7t + 4
LaurentPolynomial seven_four_alexander();

}  // namespace ribbon
