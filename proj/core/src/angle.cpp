#include "ribbon/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ribbon/error.hpp"

namespace ribbon {

ExactAngle::ExactAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::invalid_input, "angle denominator must be positive");
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

ExactAngle ExactAngle::from_radians(double radians, std::int64_t max_den, double tol) {
  const long double x = static_cast<long double>(radians) / std::numbers::pi_v<long double>;
  // Continued-fraction convergents of x.
  long double rem = x;
  std::int64_t p0 = 1, q0 = 0, p1 = static_cast<std::int64_t>(std::floor(rem)), q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    if (q1 > max_den) break;
    const long double err = std::fabs(x - static_cast<long double>(p1) / q1) * std::numbers::pi_v<long double>;
    if (err <= tol) return ExactAngle(p1, q1);
    const long double frac = rem - std::floor(rem);
    if (frac < 1e-18L) break;
    rem = 1.0L / frac;
    const auto a = static_cast<std::int64_t>(std::floor(rem));
    const std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
  }
  throw Error(ErrorKind::inconsistency, "angle is not a small rational multiple of pi");
}

double ExactAngle::radians() const {
  return static_cast<double>(static_cast<long double>(num_) * std::numbers::pi_v<long double> /
                             static_cast<long double>(den_));
}

ExactAngle ExactAngle::normalized() const {
  const std::int64_t period = 2 * den_;
  std::int64_t n = num_ % period;
  if (n < 0) n += period;
  return ExactAngle(n, den_);
}

std::string ExactAngle::str() const {
  if (num_ == 0) return "0";
  std::string s = num_ == 1 ? "" : num_ == -1 ? "-" : std::to_string(num_);
  s += "pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

}  // namespace ribbon
