#pragma once

#include <vector>

#include "ghilb/rational.hpp"

namespace ghilb {

// Hermite normal form of the lattice generated by the given rows.
// Requires the rows to span rank 3; returns a triangular 3x3 basis.
Mat3z hnf_row_basis(const std::vector<Vec3z>& rows);

// Smith normal form u * a * v = d with u, v unimodular and
// d = diag(d1, d2, d3), d1 | d2 | d3, all nonnegative.
struct SmithDecomposition {
  Mat3z u;
  Mat3z v;
  Vec3z diag;
};
SmithDecomposition smith_form(const Mat3z& a);

// Inverse of a unimodular integer matrix (det = +-1).
Mat3z unimodular_inverse(const Mat3z& a);

}  // namespace ghilb
