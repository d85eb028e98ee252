#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ghilb/fan.hpp"
#include "ghilb/ktheory.hpp"

namespace ghilb {

struct RationalPair {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};
RationalPair to_pair(const Rat& q);

struct WallReport {
  std::array<int, 2> v{};
  std::array<int, 2> triangles{};
  std::array<int, 2> opposite{};
  std::array<long, 2> relation{};     // (alpha, beta)
  std::vector<long> degrees;          // per nontrivial class, empty unless requested
  friend bool operator==(const WallReport&, const WallReport&) = default;
};

struct CharacterReport {
  std::string label;
  long index = 0;  // flat character index
  int homologicalDegree = 0;
  int supportDim = 0;
  RationalPair hilbertLinear;     // coefficient of n
  RationalPair hilbertQuadratic;  // coefficient of n^2
  friend bool operator==(const CharacterReport&, const CharacterReport&) = default;
};

struct InvariantResults {
  bool tiling = false;
  bool wallRelations = false;
  bool dualityIdentity = false;
  bool purityFit = false;
  bool ampleConvex = false;
  friend bool operator==(const InvariantResults&, const InvariantResults&) = default;
};

struct AnalysisReport {
  int schemaVersion = 1;
  std::string toolVersion;
  std::string group;  // normalized spec echo
  long r = 0;
  std::vector<std::array<std::string, 3>> juniorPoints;  // "p/q" coordinates
  std::vector<std::array<int, 3>> triangles;
  std::vector<WallReport> walls;
  long interiorVertexCount = 0;
  long boundaryEdgeCount = 0;
  std::vector<CharacterReport> characters;
  std::vector<std::string> h0;  // labels
  RationalPair b0;
  InvariantResults invariants;
  std::vector<std::string> notes;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

// Full pipeline for one group. Owns every intermediate stage.
struct Analysis {
  std::unique_ptr<LatticeContext> ctx;
  std::unique_ptr<Fan> fan;
  std::unique_ptr<KTheoryContext> ktheory;
  std::unique_ptr<B0Report> classification;
  AnalysisReport report;
};

// Throws ParseError for the trivial group (b0 has denominator r - 1 = 0).
Analysis run_analysis(const GroupSpec& spec, bool withWallDegrees);

}  // namespace ghilb
