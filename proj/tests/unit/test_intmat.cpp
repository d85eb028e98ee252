#include <doctest.h>

#include <random>

#include "ghilb/errors.hpp"
#include "ghilb/intmat.hpp"

using namespace ghilb;

namespace {

Mat3z mat_mul(const Mat3z& a, const Mat3z& b) {
  Mat3z out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

// membership of a row vector in the row lattice of a triangular basis
bool in_row_lattice(const Mat3z& basis, Vec3z v) {
  for (int i = 2; i >= 0; --i) {
    if (basis[i][i] == 0) return false;
    if (v[i] % basis[i][i] != 0) return false;
    Int f = v[i] / basis[i][i];
    for (int c = 0; c < 3; ++c) v[c] -= f * basis[i][c];
  }
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

}  // namespace

TEST_CASE("hnf contains the input rows and is normalized") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec3z> rows;
    int m = 3 + trial % 3;
    for (int i = 0; i < m; ++i) rows.push_back({Int(d(rng)), Int(d(rng)), Int(d(rng))});
    // mix in a scaled identity so the span always has rank 3
    rows.push_back({Int(12), Int(0), Int(0)});
    rows.push_back({Int(0), Int(12), Int(0)});
    rows.push_back({Int(0), Int(0), Int(12)});
    Mat3z h = hnf_row_basis(rows);
    for (int i = 0; i < 3; ++i) {
      CHECK(h[i][i] > 0);
      for (int j = i + 1; j < 3; ++j) {
        CHECK(h[j][i] == 0);                       // triangular
        CHECK(h[i][j] >= 0);
        CHECK(h[i][j] < h[j][j]);                  // reduced above pivots
      }
    }
    for (const auto& row : rows) CHECK(in_row_lattice(h, row));
  }
}

TEST_CASE("hnf rejects rank-deficient input") {
  std::vector<Vec3z> rows = {{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(6)}};
  CHECK_THROWS_AS(hnf_row_basis(rows), ConsistencyError);
}

TEST_CASE("smith form: u*a*v = diag with divisibility chain") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Mat3z a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a[i][j] = d(rng);
    SmithDecomposition s = smith_form(a);
    CHECK(abs(det3(s.u[0], s.u[1], s.u[2])) == 1);
    CHECK(abs(det3(s.v[0], s.v[1], s.v[2])) == 1);
    Mat3z lhs = mat_mul(mat_mul(s.u, a), s.v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j)
          CHECK(lhs[i][j] == s.diag[i]);
        else
          CHECK(lhs[i][j] == 0);
      }
    CHECK(s.diag[0] >= 0);
    if (s.diag[0] != 0) CHECK(s.diag[1] % s.diag[0] == 0);
    if (s.diag[1] != 0) CHECK(s.diag[2] % s.diag[1] == 0);
  }
}

TEST_CASE("unimodular inverse") {
  Mat3z a = {{{Int(1), Int(2), Int(3)}, {Int(0), Int(1), Int(4)}, {Int(0), Int(0), Int(1)}}};
  Mat3z inv = unimodular_inverse(a);
  Mat3z prod = mat_mul(a, inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
  Mat3z sing = {{{Int(2), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}};
  CHECK_THROWS_AS(unimodular_inverse(sing), ConsistencyError);
}

TEST_CASE("format_decimal is exact fixed-point rounding") {
  CHECK(format_decimal(Rat(26, 5), 4) == "5.2");
  CHECK(format_decimal(Rat(1, 3), 4) == "0.3333");
  CHECK(format_decimal(Rat(2, 3), 4) == "0.6667");
  CHECK(format_decimal(Rat(-1, 8), 4) == "-0.125");
  CHECK(format_decimal(Rat(0), 4) == "0");
  CHECK(format_decimal(Rat(3), 4) == "3");
}
