#pragma once

#include <string>

#include "ghilb/fan.hpp"
#include "ghilb/ktheory.hpp"

namespace ghilb {

struct OracleConfig {
  unsigned long seed = 1;
  int sampleCount = 1000;
  long rCap = 15;  // bound for the brute-force loops
};

struct SamplingWitness {
  long samples = 0;
  long mismatches = 0;
  bool ok = false;
  std::string detail;  // first failing witness (point and class), if any
};

// Random interior points, rejected and resampled when they land on a wall
// (detected by a tie in some class). Each clean point must lie in exactly one
// fan triangle, and its pointwise minimizers must equal that cone's G-graph.
SamplingWitness sampling_fan_oracle(const LatticeContext& ctx, const Fan& fan,
                                    const OracleConfig& config);

struct DualityComparison {
  bool ok = false;
  bool skipped = false;  // r above the cap
  std::string detail;
};

// Recomputes the duality matrix by full rational-function normalization
// (exact polynomial division, no series truncation) and compares entrywise.
DualityComparison brute_duality_oracle(const KTheoryContext& kt, const OracleConfig& config);

}  // namespace ghilb
