#pragma once

#include <string>
#include <vector>

#include "ghilb/group.hpp"
#include "ghilb/oracle.hpp"

namespace ghilb {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool allPassed = true;
};

// The full invariant suite: lattice identities, tiling, wall relations,
// ample positivity, duality, purity fits, inversion robustness, permutation
// equivariance, the sampling oracle and the brute duality oracle.
VerifyResult run_verification(const GroupSpec& spec, const OracleConfig& config);

}  // namespace ghilb
