#include "ribbon/knot.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <sstream>

#include "ribbon/error.hpp"
#include "ribbon/formulas.hpp"

namespace ribbon {
namespace {

// ---- dense polynomial arithmetic over Z ----

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly sub(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

IntPoly div_exact(IntPoly num, const IntPoly& den) {
  if (den.empty()) throw Error(ErrorKind::invalid_diagram, "division by the zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw Error(ErrorKind::invalid_diagram, "inexact polynomial division");
  IntPoly q(num.size() - den.size() + 1);
  const Integer& lead = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = num[k + den.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(ErrorKind::invalid_diagram, "inexact polynomial division");
    q[k] = top / lead;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorKind::invalid_diagram, "inexact polynomial division");
  trim(q);
  return q;
}

IntPoly monomial_minus_one(int degree) {
  IntPoly p(static_cast<std::size_t>(degree) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(degree)] = 1;
  return p;
}

LaurentPolynomial to_laurent(const IntPoly& p) {
  std::map<int, Integer> m;
  for (std::size_t i = 0; i < p.size(); ++i) m[static_cast<int>(i)] = p[i];
  return LaurentPolynomial(std::move(m));
}

// ---- diagram extraction ----

// Over/under rule for panel layers; nullopt on a tie.
struct LayerOrder {
  std::vector<int> heights;
  int period = 0;

  std::optional<bool> over(std::size_t i, std::size_t j) const {
    const int hi = heights[i], hj = heights[j];
    if (period == 0) {
      if (hi == hj) return std::nullopt;
      return hi > hj;
    }
    const int p = std::abs(period);
    const int d = ((hi - hj) % p + p) % p;
    if (d == 0 || 2 * d == p) return std::nullopt;
    return 2 * d < p;
  }
};

struct Event {
  double param;
  int pair;
  bool first;  // true for the lower-indexed segment of the pair
};

struct RawCrossing {
  std::size_t i, j;
  bool i_over;
  int sign;
  Point at;
};

constexpr double kGoldenAngle = 2.399963229728653;

std::vector<Point> perturbed(const std::vector<Point>& v, double eps) {
  std::vector<Point> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double a = kGoldenAngle * static_cast<double>(k) + 0.3;
    out[k] = v[k] + eps * Point{std::cos(a), std::sin(a)};
  }
  return out;
}

[[noreturn]] void degenerate(const std::string& what) { throw Error(ErrorKind::degenerate_diagram, what); }

std::vector<GaussEntry> gauss_at(const std::vector<Point>& base, const LayerOrder& order, double eps,
                                 std::vector<Point>* positions) {
  const std::size_t m = base.size();
  const auto v = perturbed(base, eps);
  std::vector<RawCrossing> raw;
  std::vector<Event> events;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = v[i], b = v[(i + 1) % m];
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      const Point c = v[j], d = v[(j + 1) % m];
      const Point d1 = b - a, d2 = d - c;
      const double den = cross(d1, d2);
      const Point w = c - a;
      if (std::fabs(den) <= 1e-14 * norm(d1) * norm(d2)) {
        if (std::fabs(cross(d1, w)) <= 1e-14 * norm(d1) * std::max(1.0, norm(w))) {
          const double s0 = dot(c - a, d1) / dot(d1, d1), s1 = dot(d - a, d1) / dot(d1, d1);
          if (std::max(s0, s1) > 0 && std::min(s0, s1) < 1) degenerate("coincident segments survive perturbation");
        }
        continue;
      }
      const double s = cross(w, d2) / den;
      const double u = cross(w, d1) / den;
      if (s < -1e-12 || s > 1 + 1e-12 || u < -1e-12 || u > 1 + 1e-12) continue;
      if (s < 1e-12 || s > 1 - 1e-12 || u < 1e-12 || u > 1 - 1e-12)
        degenerate("segments touch at an endpoint after perturbation");
      const auto o = order.over(i, j);
      if (!o) throw Error(ErrorKind::layering, "equal layers at a crossing of panels " + std::to_string(i) +
                                                   " and " + std::to_string(j));
      // Positive when the under strand turns counterclockwise onto the over strand.
      const double z = den;
      const int sign = *o ? (-z > 0 ? 1 : -1) : (z > 0 ? 1 : -1);
      const int id = static_cast<int>(raw.size());
      raw.push_back({i, j, *o, sign, a + s * d1});
      events.push_back({static_cast<double>(i) + s, id, true});
      events.push_back({static_cast<double>(j) + u, id, false});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.param < y.param; });

  // Number crossings by first appearance along the knot.
  std::vector<int> renum(raw.size(), -1);
  int next = 0;
  std::vector<GaussEntry> gauss;
  if (positions) positions->assign(raw.size(), Point{});
  for (const auto& e : events) {
    if (renum[e.pair] < 0) renum[e.pair] = next++;
    const auto& r = raw[e.pair];
    gauss.push_back({renum[e.pair], e.first == r.i_over, r.sign});
    if (positions) (*positions)[renum[e.pair]] = r.at;
  }
  return gauss;
}

}  // namespace

std::vector<long> KnotDiagram::signed_code() const {
  std::vector<long> out;
  out.reserve(gauss.size());
  for (const auto& g : gauss) out.push_back(g.over ? g.crossing + 1 : -(g.crossing + 1));
  return out;
}

KnotDiagram diagram_from_gauss(const std::vector<GaussEntry>& gauss) {
  const std::size_t len = gauss.size();
  if (len % 2 != 0) throw Error(ErrorKind::invalid_diagram, "Gauss code has odd length");
  const std::size_t n = len / 2;
  std::vector<int> over_pos(n, -1), under_pos(n, -1);
  std::vector<int> sign(n, 0);
  for (std::size_t p = 0; p < len; ++p) {
    const auto& g = gauss[p];
    if (g.crossing < 0 || static_cast<std::size_t>(g.crossing) >= n || (g.sign != 1 && g.sign != -1))
      throw Error(ErrorKind::invalid_diagram, "bad Gauss entry");
    auto& slot = g.over ? over_pos[g.crossing] : under_pos[g.crossing];
    if (slot >= 0) throw Error(ErrorKind::invalid_diagram, "crossing repeated with the same strand role");
    slot = static_cast<int>(p);
    if (sign[g.crossing] != 0 && sign[g.crossing] != g.sign)
      throw Error(ErrorKind::invalid_diagram, "crossing sign differs between its two passes");
    sign[g.crossing] = g.sign;
  }

  KnotDiagram d;
  d.gauss = gauss;
  d.arcs = static_cast<int>(n);
  if (n == 0) return d;
  // Arc a starts just after the a-th under-pass (counting from the first one).
  std::vector<int> arc_of(len);
  const std::size_t start = static_cast<std::size_t>(*std::min_element(under_pos.begin(), under_pos.end()));
  int cur = 0;
  for (std::size_t k = 1; k <= len; ++k) {
    const std::size_t p = (start + k) % len;
    arc_of[p] = cur;
    if (!gauss[p].over) cur = (cur + 1) % static_cast<int>(n);
  }
  for (std::size_t c = 0; c < n; ++c) {
    Crossing x;
    x.id = static_cast<int>(c);
    x.over_arc = arc_of[over_pos[c]];
    x.under_in_arc = arc_of[under_pos[c]];
    x.under_out_arc = (x.under_in_arc + 1) % static_cast<int>(n);
    x.sign = sign[c];
    d.crossings.push_back(x);
  }
  return d;
}

KnotDiagram extract_diagram(const FoldedLayout& lay, const ExtractOptions& opt) {
  if (lay.source.presentation != Presentation::closed) degenerate("an open strip has no knot diagram");
  const std::size_t m = lay.centerline.size();
  std::vector<Point> v(m);
  LayerOrder order;
  order.period = lay.helix_period;
  double extent = 1;
  for (std::size_t k = 0; k < m; ++k) {
    v[k] = lay.centerline[k].a;
    order.heights.push_back(lay.panels[k].layer);
    extent = std::max({extent, std::fabs(v[k].x), std::fabs(v[k].y)});
  }

  // A vertex resting on another segment is only resolvable by perturbation if
  // both segments at the vertex pass the same way relative to it.
  const double tol = 1e-9 * extent;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t before = (k + m - 1) % m;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k || j == before) continue;
      if (point_segment_distance(v[k], v[j], v[(j + 1) % m]) > tol) continue;
      const auto a = order.over(before, j), b = order.over(k, j);
      if (!a || !b || *a != *b)
        degenerate("vertex " + std::to_string(k) + " lies on segment " + std::to_string(j) +
                   " with ambiguous layering");
    }
  }

  const double eps = opt.perturbation > 0 ? opt.perturbation : 1e-6 * lay.source.width;
  std::vector<Point> positions;
  const auto gauss = gauss_at(v, order, eps, &positions);
  if (opt.recheck && gauss_at(v, order, 0.5 * eps, nullptr) != gauss)
    degenerate("Gauss code changes when the perturbation is halved");
  KnotDiagram d = diagram_from_gauss(gauss);
  for (auto& c : d.crossings) c.position = positions[static_cast<std::size_t>(c.id)];
  return d;
}

IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return {Integer(1)};
  int sign = 1;
  IntPoly prev{Integer(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = div_exact(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  IntPoly det = a[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  return det;
}

LaurentPolynomial alexander_polynomial(const KnotDiagram& d, int row, int col) {
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return LaurentPolynomial::from_coefficients({1});
  if (d.arcs != n) throw Error(ErrorKind::invalid_diagram, "not a knot diagram");
  if (row < 0) row = n - 1;
  if (col < 0) col = n - 1;
  if (row >= n || col >= n) throw Error(ErrorKind::invalid_input, "deleted row/column out of range");

  // Entries are polynomials of degree <= 1: {constant, t-coefficient}.
  std::vector<std::vector<std::array<long, 2>>> m(n, std::vector<std::array<long, 2>>(n, {0, 0}));
  for (const auto& c : d.crossings) {
    auto& r = m[c.id];
    r[c.over_arc][0] += 1;
    r[c.over_arc][1] -= 1;
    if (c.sign > 0) {
      r[c.under_in_arc][1] += 1;
      r[c.under_out_arc][0] -= 1;
    } else {
      r[c.under_in_arc][0] -= 1;
      r[c.under_out_arc][1] += 1;
    }
  }
  std::vector<std::vector<IntPoly>> minor;
  for (int i = 0; i < n; ++i) {
    if (i == row) continue;
    std::vector<IntPoly> line;
    for (int j = 0; j < n; ++j) {
      if (j == col) continue;
      IntPoly p{Integer(m[i][j][0]), Integer(m[i][j][1])};
      trim(p);
      line.push_back(std::move(p));
    }
    minor.push_back(std::move(line));
  }
  return to_laurent(bareiss_determinant(std::move(minor))).normalized();
}

LaurentPolynomial torus_alexander(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw Error(ErrorKind::invalid_input, "torus knot needs coprime positive p, q");
  const IntPoly num = mul(monomial_minus_one(p * q), monomial_minus_one(1));
  const IntPoly den = mul(monomial_minus_one(p), monomial_minus_one(q));
  return to_laurent(div_exact(num, den)).normalized();
}

Integer determinant_invariant(const KnotDiagram& d) {
  Integer v = alexander_polynomial(d).at_minus_one();
  return v < 0 ? Integer(-v) : v;
}

LaurentPolynomial seven_four_alexander() { return LaurentPolynomial::from_coefficients({4, -7, 4}); }

CertificationReport verify_knot_type(const FoldProgram& program, const LaurentPolynomial& reference,
                                     long crossing_lower_bound, const std::string& expected,
                                     const ExtractOptions& options) {
  if (program.presentation != Presentation::closed)
    throw Error(ErrorKind::invalid_input, "knot certification needs a closed program");
  const KnotDiagram d = extract_diagram(layout(program), options);
  CertificationReport r;
  r.label = program.label;
  r.expected = expected;
  r.crossing_count = d.crossing_count();
  r.crossing_lower_bound = crossing_lower_bound;
  r.gauss = d.signed_code();
  r.alexander = alexander_polynomial(d);
  r.reference = reference.normalized();
  const Integer det = r.alexander.at_minus_one();
  r.determinant = det < 0 ? Integer(-det) : det;
  r.alexander_match = equal_up_to_units(r.alexander, r.reference);
  r.crossing_bound_ok = static_cast<long>(r.crossing_count) >= crossing_lower_bound;
  return r;
}

CertificationReport verify_knot_type(const FoldProgram& program, const TorusKnotParams& expected,
                                     const ExtractOptions& options) {
  const std::string name = "(" + std::to_string(expected.p) + "," + std::to_string(expected.q) + ") torus knot";
  return verify_knot_type(program, torus_alexander(expected.p, expected.q), crossing_number(expected.p, expected.q),
                          name, options);
}

std::string CertificationReport::text() const {
  std::ostringstream out;
  out << "construction: " << label << '\n';
  out << "expected: " << expected << '\n';
  out << "crossings: " << crossing_count << " (lower bound " << crossing_lower_bound << ")\n";
  out << "gauss:";
  for (long g : gauss) out << ' ' << g;
  out << '\n';
  out << "alexander: " << alexander.str() << '\n';
  out << "reference: " << reference.str() << '\n';
  out << "determinant: " << determinant << '\n';
  out << "verdict: " << (verdict() ? "match" : "mismatch") << '\n';
  return out.str();
}

std::string CertificationReport::json() const {
  auto coeffs = [](const LaurentPolynomial& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.dense()) a.push_back(c.convert_to<long long>());
    return a;
  };
  nlohmann::ordered_json j;
  j["construction"] = label;
  j["expected"] = expected;
  j["crossings"] = crossing_count;
  j["crossing_lower_bound"] = crossing_lower_bound;
  j["gauss"] = gauss;
  j["alexander"] = coeffs(alexander);
  j["reference"] = coeffs(reference);
  j["determinant"] = determinant.convert_to<long long>();
  j["alexander_match"] = alexander_match;
  j["crossing_bound_ok"] = crossing_bound_ok;
  j["verdict"] = verdict() ? "match" : "mismatch";
  return j.dump(2) + "\n";
}

}  // namespace ribbon
