#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ghilb/rational.hpp"

namespace ghilb {

struct SurveyRecord {
  long r = 0, a = 0, b = 0;
  long juniorCount = 0;
  long triangleCount = 0;
  long interiorEdgeCount = 0;
  long boundaryEdgeCount = 0;
  long h0Size = 0;
  Rat b0;
  bool isolated = false;
  long runtimeMs = 0;
  bool failed = false;
  std::string failureReason;
};

// All (a, b) with a, b >= 1 and a + b = r - 1; r = 2 yields the empty list.
std::vector<std::pair<long, long>> enumerate_embeddings(long r, bool dedupeSymmetry);

struct SweepOptions {
  long rMin = 3;
  long rMax = 8;
  bool dedupeSymmetry = false;
  bool isolatedOnly = false;
  int jobs = 1;
  bool fixedRuntime = false;  // write runtime_ms as 0 for reproducible output
  std::function<void(const SurveyRecord&)> onRecord;  // streaming hook, any thread
};

// One record per (r, a, b), deterministic order regardless of scheduling.
std::vector<SurveyRecord> sweep(const SweepOptions& options);

SurveyRecord analyze_embedding(long r, long a, long b, bool fixedRuntime);

struct SweepAggregate {
  bool any = false;
  Rat min, max;
  std::vector<std::pair<Rat, long>> histogram;      // exact value -> count
  std::vector<SurveyRecord> boundViolations;        // b0 outside [1/4, 1]
  long failures = 0;
};

SweepAggregate aggregate(const std::vector<SurveyRecord>& records);

std::string csv_header();
std::string csv_line(const SurveyRecord& rec);

}  // namespace ghilb
