#pragma once

#include <optional>
#include <vector>

#include "ghilb/group.hpp"

namespace ghilb {

// Monomial basis of a torus-fixed G-cluster: one exponent per character class,
// indexed by flat character index. Forms an order ideal in Z>=0^3.
struct GGraph {
  std::vector<Vec3l> assign;

  const Vec3l& exponent(const Character& chi, const CharacterTable& table) const {
    return assign[table.flat_index(chi)];
  }
};

enum class GGraphFailure { no_minimizer, non_unique };

struct GGraphResult {
  std::optional<GGraph> graph;
  GGraphFailure failure = GGraphFailure::no_minimizer;
  Character offending{};

  bool ok() const { return graph.has_value(); }
};

// Integer pairing values <e, r*u> for the junior points; r*u is integral.
struct MinimaTable {
  long r = 1;
  std::vector<Vec3l> scaledPoints;
  std::vector<std::vector<long long>> minValue;  // [flat class][point index]
};

MinimaTable build_minima_table(const LatticeContext& ctx, const std::vector<JuniorPoint>& points);

// All exponents in the class of chi inside the box [0,r)^3 that are
// simultaneously minimal against every vertex. Sorted lexicographically.
std::vector<Vec3l> class_minimizers(const Character& chi, const std::vector<Vec3q>& vertices,
                                    const LatticeContext& ctx);

// G-graph of the cone over a triangle spanning three dimensions.
GGraphResult ggraph_for_cone(const std::array<Vec3q, 3>& triangle, const LatticeContext& ctx);

// Order-ideal, transversal and box invariants. Throws ConsistencyError.
void validate_ggraph(const GGraph& graph, const LatticeContext& ctx);

}  // namespace ghilb
