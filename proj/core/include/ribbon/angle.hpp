#pragma once

#include <cstdint>
#include <string>

namespace ribbon {

// An angle stored as (num/den)·π.
class ExactAngle {
 public:
  constexpr ExactAngle() = default;
  ExactAngle(std::int64_t num, std::int64_t den);

  // Best rational multiple of π with denominator <= max_den within tol radians.
  static ExactAngle from_radians(double radians, std::int64_t max_den = 10000, double tol = 1e-9);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;
  // Same angle reduced into [0, 2π).
  ExactAngle normalized() const;
  bool strictly_inside_half_turn() const { return num_ > 0 && num_ < den_; }
  std::string str() const;

  friend bool operator==(const ExactAngle&, const ExactAngle&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ribbon
