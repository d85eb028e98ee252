#include "ghilb/series.hpp"

#include "ghilb/errors.hpp"

namespace ghilb {

Int binomial_coefficient(long long k, int j) {
  Int c = 1;
  for (int i = 1; i <= j; ++i) {
    c *= to_int(k) - (i - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return c;
}

PowerSeries PowerSeries::binomial(long long k, int order) {
  PowerSeries s(order);
  Int c = 1;
  s[0] = 1;
  for (int i = 1; i <= order; ++i) {
    c *= to_int(k) - (i - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    s[i] = Rat(c);
  }
  return s;
}

void PowerSeries::add_scaled(const PowerSeries& other, int sign) {
  for (int i = 0; i <= order(); ++i) {
    if (sign > 0)
      c_[i] += other[i];
    else
      c_[i] -= other[i];
  }
}

PowerSeries PowerSeries::mul(const PowerSeries& other) const {
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) {
      if (other[j] == 0) continue;
      out[i + j] += c_[i] * other[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0] == 0) throw ConsistencyError("series inverse: zero constant term");
  PowerSeries out(order());
  out[0] = 1 / c_[0];
  for (int n = 1; n <= order(); ++n) {
    Rat s = 0;
    for (int i = 1; i <= n; ++i) s += c_[i] * out[n - i];
    out[n] = -s / c_[0];
  }
  return out;
}

}  // namespace ghilb
