#include "ghilb/intmat.hpp"

#include "ghilb/errors.hpp"

namespace ghilb {

Mat3q inverse3(const Vec3q& a, const Vec3q& b, const Vec3q& c) {
  Rat d = det3(a, b, c);
  if (d == 0) throw ConsistencyError("inverse3: singular matrix");
  Mat3q inv;
  // adjugate transpose / det
  inv[0][0] = (b[1] * c[2] - b[2] * c[1]) / d;
  inv[1][0] = -(b[0] * c[2] - b[2] * c[0]) / d;
  inv[2][0] = (b[0] * c[1] - b[1] * c[0]) / d;
  inv[0][1] = -(a[1] * c[2] - a[2] * c[1]) / d;
  inv[1][1] = (a[0] * c[2] - a[2] * c[0]) / d;
  inv[2][1] = -(a[0] * c[1] - a[1] * c[0]) / d;
  inv[0][2] = (a[1] * b[2] - a[2] * b[1]) / d;
  inv[1][2] = -(a[0] * b[2] - a[2] * b[0]) / d;
  inv[2][2] = (a[0] * b[1] - a[1] * b[0]) / d;
  return inv;
}

std::string format_decimal(const Rat& value, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = value * Rat(scale);
  Int num = scaled.get_num(), den = scaled.get_den();
  // round half away from zero
  Int twice = 2 * num;
  Int q;
  if (num >= 0) {
    q = (twice + den) / (2 * den);
  } else {
    q = -(((-twice) + den) / (2 * den));
  }
  bool neg = q < 0;
  Int mag = abs(q);
  Int whole = mag / scale, frac = mag % scale;
  std::string out = neg && (whole != 0 || frac != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    f.insert(f.begin(), digits - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    if (!f.empty()) out += "." + f;
  }
  return out;
}

namespace {

void swap_rows(Mat3z& m, int i, int j) { std::swap(m[i], m[j]); }

void swap_cols(Mat3z& m, int i, int j) {
  for (int r = 0; r < 3; ++r) std::swap(m[r][i], m[r][j]);
}

void add_row(Mat3z& m, int dst, int src, const Int& f) {
  for (int c = 0; c < 3; ++c) m[dst][c] += f * m[src][c];
}

void add_col(Mat3z& m, int dst, int src, const Int& f) {
  for (int r = 0; r < 3; ++r) m[r][dst] += f * m[r][src];
}

}  // namespace

Mat3z hnf_row_basis(const std::vector<Vec3z>& rows) {
  std::vector<Vec3z> work = rows;
  const int m = static_cast<int>(work.size());
  int pivot_row = 0;
  for (int col = 0; col < 3; ++col) {
    // reduce all entries below pivot_row in this column to zero
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < m; ++i) {
        if (work[i][col] != 0 && (best < 0 || abs(work[i][col]) < abs(work[best][col]))) best = i;
      }
      if (best < 0) break;
      std::swap(work[pivot_row], work[best]);
      bool clean = true;
      for (int i = pivot_row + 1; i < m; ++i) {
        if (work[i][col] == 0) continue;
        Int f = work[i][col] / work[pivot_row][col];
        for (int c = 0; c < 3; ++c) work[i][c] -= f * work[pivot_row][c];
        if (work[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (pivot_row < m && work[pivot_row][col] != 0) ++pivot_row;
  }
  if (pivot_row != 3) throw ConsistencyError("hnf_row_basis: rows do not span rank 3");

  Mat3z h = {work[0], work[1], work[2]};
  // normalize: positive pivots, entries above each pivot reduced
  for (int i = 0; i < 3; ++i) {
    if (h[i][i] < 0) {
      for (int c = 0; c < 3; ++c) h[i][c] = -h[i][c];
    }
  }
  for (int i = 2; i >= 1; --i) {
    for (int j = 0; j < i; ++j) {
      // floor division so residues land in [0, pivot)
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), h[j][i].get_mpz_t(), h[i][i].get_mpz_t());
      for (int c = 0; c < 3; ++c) h[j][c] -= f * h[i][c];
    }
  }
  return h;
}

SmithDecomposition smith_form(const Mat3z& a) {
  Mat3z d = a;
  Mat3z u = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3z v = u;

  auto is_lone = [&](int s) {
    for (int i = s + 1; i < 3; ++i)
      if (d[i][s] != 0) return false;
    for (int j = s + 1; j < 3; ++j)
      if (d[s][j] != 0) return false;
    return true;
  };

  for (int s = 0; s < 3; ++s) {
    while (true) {
      int ir = -1, ic = -1;
      for (int i = s; i < 3; ++i)
        for (int j = s; j < 3; ++j)
          if (d[i][j] != 0 && (ir < 0 || abs(d[i][j]) < abs(d[ir][ic]))) { ir = i; ic = j; }
      if (ir < 0) break;  // all-zero block
      swap_rows(d, s, ir); swap_rows(u, s, ir);
      swap_cols(d, s, ic); swap_cols(v, s, ic);
      bool reduced = true;
      for (int i = s + 1; i < 3; ++i) {
        if (d[i][s] != 0) {
          Int f = d[i][s] / d[s][s];
          add_row(d, i, s, -f); add_row(u, i, s, -f);
          if (d[i][s] != 0) reduced = false;
        }
      }
      for (int j = s + 1; j < 3; ++j) {
        if (d[s][j] != 0) {
          Int f = d[s][j] / d[s][s];
          add_col(d, j, s, -f); add_col(v, j, s, -f);
          if (d[s][j] != 0) reduced = false;
        }
      }
      if (!reduced) continue;
      if (!is_lone(s)) continue;
      // divisibility pass: d[s][s] must divide the remaining block
      bool divides = true;
      for (int i = s + 1; i < 3 && divides; ++i)
        for (int j = s + 1; j < 3 && divides; ++j)
          if (d[i][j] % d[s][s] != 0) {
            add_row(d, s, i, 1); add_row(u, s, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d[s][s] < 0) {
      for (int c = 0; c < 3; ++c) d[s][c] = -d[s][c];
      for (int c = 0; c < 3; ++c) u[s][c] = -u[s][c];
    }
  }
  return SmithDecomposition{u, v, {d[0][0], d[1][1], d[2][2]}};
}

Mat3z unimodular_inverse(const Mat3z& a) {
  Int det = det3(a[0], a[1], a[2]);
  if (det != 1 && det != -1) throw ConsistencyError("unimodular_inverse: determinant not +-1");
  Mat3z inv;
  inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) * det;
  inv[1][0] = -(a[1][0] * a[2][2] - a[1][2] * a[2][0]) * det;
  inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) * det;
  inv[0][1] = -(a[0][1] * a[2][2] - a[0][2] * a[2][1]) * det;
  inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) * det;
  inv[2][1] = -(a[0][0] * a[2][1] - a[0][1] * a[2][0]) * det;
  inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) * det;
  inv[1][2] = -(a[0][0] * a[1][2] - a[0][2] * a[1][0]) * det;
  inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) * det;
  return inv;
}

}  // namespace ghilb
