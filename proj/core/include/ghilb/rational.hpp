#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace ghilb {

// All lattice and K-theory arithmetic is exact. Int/Rat are the only numeric
// types that ever touch mathematical data; doubles appear nowhere.
using Int = mpz_class;
using Rat = mpq_class;

using Vec3l = std::array<long long, 3>;  // small exponents, scaled points
using Vec3z = std::array<Int, 3>;        // lattice vectors
using Vec3q = std::array<Rat, 3>;        // rational points
using Mat3z = std::array<Vec3z, 3>;      // rows
using Mat3q = std::array<Vec3q, 3>;      // rows

// gmpxx has no long long constructor; on LP64 targets long is wide enough.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat dot(const Vec3q& a, const Vec3q& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Rat dot(const Vec3z& a, const Vec3q& b) {
  return Rat(a[0]) * b[0] + Rat(a[1]) * b[1] + Rat(a[2]) * b[2];
}

inline Int dot(const Vec3z& a, const Vec3z& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline long long dot(const Vec3l& a, const Vec3l& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Concrete return type: gmpxx expression templates must not escape.
template <typename V>
typename V::value_type det3(const V& a, const V& b, const V& c) {
  typename V::value_type d = a[0] * (b[1] * c[2] - b[2] * c[1]);
  d -= a[1] * (b[0] * c[2] - b[2] * c[0]);
  d += a[2] * (b[0] * c[1] - b[1] * c[0]);
  return d;
}

// Inverse of the matrix whose rows are a, b, c. Throws on singular input.
Mat3q inverse3(const Vec3q& a, const Vec3q& b, const Vec3q& c);

inline Vec3l add(const Vec3l& a, const Vec3l& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3l sub(const Vec3l& a, const Vec3l& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3l scale(long long k, const Vec3l& a) {
  return {k * a[0], k * a[1], k * a[2]};
}

// "p/q" with q omitted when 1; matches mpq_class::get_str.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Fixed-point decimal rendering (round half away from zero), used by the
// SVG/TikZ emitters so output never depends on floating point formatting.
std::string format_decimal(const Rat& value, int digits);

}  // namespace ghilb
