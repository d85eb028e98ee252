#pragma once

#include <string>
#include <vector>

#include "ghilb/fan.hpp"
#include "ghilb/series.hpp"

namespace ghilb {

// Sign conventions of the fixed-point localization. The geometry does not
// pin these a priori; the duality identity does. The defaults are the unique
// combination for which the duality matrix is the identity (see the
// convention-search test); they are asserted on every analysis run.
struct Conventions {
  int tautSign = +1;          // fiber exponent of the tautological bundle at a fixed point
  int denomSign = -1;         // denominator factors (1 - t^{denomSign * u_i})
  bool nuSubtractsChi = false;  // nu(S, chi) = [e_S] - chi instead of [e_S] + chi
};

struct FixedPointData {
  std::array<Vec3l, 3> dualBasis;  // u_{T,i} in M, <u_i, v_j> = delta_ij
  Vec3l ample;                     // w_T = sum over classes of the G-graph exponents
};

// Localized K-class: per triangle, a signed list of Laurent exponents.
struct LocalizedClass {
  std::vector<std::vector<std::pair<int, Vec3l>>> terms;  // [triangle][term]
};

class KTheoryContext {
 public:
  KTheoryContext(const LatticeContext& ctx, const Fan& fan, Conventions conv = {},
                 bool calibrateAmple = true);

  const LatticeContext& lattice() const { return *ctx_; }
  const Fan& fan() const { return *fan_; }
  const Conventions& conventions() const { return conv_; }
  const std::vector<FixedPointData>& fixed_points() const { return fixed_; }
  const Vec3l& generic_direction() const { return generic_; }
  int ample_sign() const { return ampleSign_; }

  const PowerSeries& inverse_denominator(int triangle) const { return invDen_[triangle]; }

 private:
  const LatticeContext* ctx_;
  const Fan* fan_;
  Conventions conv_;
  std::vector<FixedPointData> fixed_;
  Vec3l generic_{};
  int ampleSign_ = 0;
  std::vector<PowerSeries> invDen_;
};

// Koszul-resolved localized class of the transform of the chi-skyscraper.
LocalizedClass psi_class(const Character& chi, const KTheoryContext& kt);

// Tensor with the dual tautological line bundle of class mu.
LocalizedClass tensor_dual_tautological(LocalizedClass cls, const Character& mu,
                                        const KTheoryContext& kt);

// Exact value of the localization sum at t -> 1, twisted by the n-th power of
// the calibrated ample class. Throws ConsistencyError on a pole (non-compact
// support or convention error).
Rat euler_characteristic(const LocalizedClass& cls, long twistPower, const KTheoryContext& kt);

// Degree of the tautological bundle of chi on the exceptional curve of a wall.
long wall_degree(const Wall& wall, const Character& chi, const Fan& fan,
                 const LatticeContext& ctx);

// Structure-sheaf classes of compact torus-invariant strata, in the same
// localization frame (used by calibration, verification and oracles).
LocalizedClass wall_curve_class(const Wall& wall, const KTheoryContext& kt);
LocalizedClass vertex_divisor_class(int pointIndex, const KTheoryContext& kt);

struct PsiClassRecord {
  Character chi;
  std::string label;
  LocalizedClass localized;
  std::array<Rat, 3> hilbert;  // p(n) = hilbert[2] n^2 + hilbert[1] n + hilbert[0]
  Rat leading;
  int homologicalDegree = 0;  // 0 or -1
  int supportDim = 0;
};

PsiClassRecord classify_character(const Character& chi, const KTheoryContext& kt);

// Full r x r pairing matrix (mu row, chi column); must equal the identity.
std::vector<std::vector<Rat>> duality_matrix(const KTheoryContext& kt);

// Throws ConsistencyError if the duality matrix is not the identity.
void assert_duality_identity(const KTheoryContext& kt);

struct B0Report {
  long r = 1;
  std::vector<PsiClassRecord> records;      // nontrivial classes, canonical order
  std::vector<long> h0;                     // flat indices with homological degree 0
  Rat b0;                                   // |h0| / (r - 1)
  std::vector<std::vector<long>> wallDegrees;  // [wall][flat class], empty unless requested
};

B0Report classify_all(const KTheoryContext& kt, bool withWallDegrees = false);

}  // namespace ghilb
