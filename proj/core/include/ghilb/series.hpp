#pragma once

#include <vector>

#include "ghilb/rational.hpp"

namespace ghilb {

// Truncated power series in eps over Q, fixed order, exact coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(order + 1) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_[i]; }
  Rat& operator[](int i) { return c_[i]; }

  // (1 + eps)^k for any integer k (negative exponents included).
  static PowerSeries binomial(long long k, int order);

  void add_scaled(const PowerSeries& other, int sign);
  PowerSeries mul(const PowerSeries& other) const;
  PowerSeries inverse() const;  // requires nonzero constant term

 private:
  std::vector<Rat> c_;
};

// Binomial coefficient C(k, j) for arbitrary integer k, j >= 0.
Int binomial_coefficient(long long k, int j);

}  // namespace ghilb
