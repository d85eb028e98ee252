#pragma once

#include <vector>

#include "ghilb/ggraph.hpp"
#include "ghilb/group.hpp"

namespace ghilb {

struct Triangle {
  std::array<int, 3> v{};  // indices into Fan::points, ascending
  Mat3z nCoords{};         // vertex coordinates in the nBasis, one row per vertex
  GGraph graph;
};

struct Wall {
  std::array<int, 2> v{};         // endpoint indices, ascending
  std::array<int, 2> triangle{};  // the two incident triangles
  std::array<int, 2> opposite{};  // third vertex of each side, aligned with `triangle`
  long alpha = 0, beta = 0;       // w + w' = alpha*v1 + beta*v2, alpha + beta = 2
};

struct Fan {
  std::vector<JuniorPoint> points;
  std::vector<Triangle> triangles;
  std::vector<Wall> walls;
  std::vector<std::array<int, 2>> boundaryEdges;
  std::vector<int> interiorVertices;  // indices of junior points off the boundary
};

struct FanStatistics {
  long triangleCount = 0;
  long interiorEdgeCount = 0;
  long boundaryEdgeCount = 0;
  long interiorVertexCount = 0;
  bool eulerCheck = false;  // V - E + F == 1
};

// All 3-subsets of junior points that are unimodular in N, as index triples.
std::vector<std::array<int, 3>> candidate_triangles(const LatticeContext& ctx);

// The G-Hilb triangulation: candidates whose cones carry a G-graph.
// Verifies the tiling invariants before returning; throws TilingError.
Fan build_fan(const LatticeContext& ctx);

FanStatistics fan_statistics(const Fan& fan);

}  // namespace ghilb
