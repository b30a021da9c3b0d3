#include <sstream>

#include "ribbon/knot.hpp"

namespace ribbon {

LaurentPolynomial::LaurentPolynomial(std::map<int, Integer> coefficients) {
  for (auto& [e, c] : coefficients)
    if (c != 0) coeffs_.emplace(e, std::move(c));
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::vector<long>& c, int low) {
  std::map<int, Integer> m;
  for (std::size_t i = 0; i < c.size(); ++i) m[low + static_cast<int>(i)] = c[i];
  return LaurentPolynomial(std::move(m));
}

int LaurentPolynomial::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::vector<Integer> LaurentPolynomial::dense() const {
  std::vector<Integer> out;
  if (coeffs_.empty()) return out;
  out.resize(static_cast<std::size_t>(max_exponent() - min_exponent() + 1));
  for (const auto& [e, c] : coeffs_) out[static_cast<std::size_t>(e - min_exponent())] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (coeffs_.empty()) return {};
  const int low = min_exponent();
  const bool flip = coeffs_.begin()->second < 0;
  std::map<int, Integer> m;
  for (const auto& [e, c] : coeffs_) m[e - low] = flip ? Integer(-c) : c;
  return LaurentPolynomial(std::move(m));
}

bool LaurentPolynomial::is_palindromic() const {
  const auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != d[d.size() - 1 - i]) return false;
  return true;
}

Integer LaurentPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

Integer LaurentPolynomial::at_minus_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += (e % 2 == 0) ? c : Integer(-c);
  return s;
}

std::string LaurentPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) out << 't';
    if (e != 0 && e != 1) out << '^' << e;
  }
  return out.str();
}

bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

}  // namespace ribbon
