#include "ghilb/ggraph.hpp"

#include <algorithm>
#include <set>

#include "ghilb/errors.hpp"

namespace ghilb {

namespace {

Vec3l scaled_point(const Vec3q& u, long r) {
  Vec3l s;
  for (int i = 0; i < 3; ++i) {
    Rat x = u[i] * r;
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      throw ConsistencyError("junior point does not scale to integers by r");
    s[i] = x.get_num().get_si();
  }
  return s;
}

// Walks the box [0,r)^3 in lexicographic order, tracking the character class
// incrementally; visit(e, flatClass) is called for every exponent.
template <typename F>
void scan_box(const LatticeContext& ctx, F&& visit) {
  const long r = ctx.r;
  const CharacterTable& T = ctx.characters;
  const Character cx = T.class_of(Vec3l{1, 0, 0});
  const Character cy = T.class_of(Vec3l{0, 1, 0});
  const Character cz = T.class_of(Vec3l{0, 0, 1});
  Character c0 = T.class_of(Vec3l{0, 0, 0});
  for (long e0 = 0; e0 < r; ++e0) {
    Character c1 = c0;
    for (long e1 = 0; e1 < r; ++e1) {
      Character c2 = c1;
      for (long e2 = 0; e2 < r; ++e2) {
        visit(Vec3l{e0, e1, e2}, T.flat_index(c2));
        c2 = T.add(c2, cz);
      }
      c1 = T.add(c1, cy);
    }
    c0 = T.add(c0, cx);
  }
}

}  // namespace

MinimaTable build_minima_table(const LatticeContext& ctx, const std::vector<JuniorPoint>& points) {
  MinimaTable t;
  t.r = ctx.r;
  for (const auto& p : points) t.scaledPoints.push_back(scaled_point(p.v, ctx.r));
  const size_t np = t.scaledPoints.size();
  t.minValue.assign(ctx.r, std::vector<long long>(np, -1));
  scan_box(ctx, [&](const Vec3l& e, long cls) {
    auto& row = t.minValue[cls];
    for (size_t j = 0; j < np; ++j) {
      long long v = dot(e, t.scaledPoints[j]);
      if (row[j] < 0 || v < row[j]) row[j] = v;
    }
  });
  return t;
}

std::vector<Vec3l> class_minimizers(const Character& chi, const std::vector<Vec3q>& vertices,
                                    const LatticeContext& ctx) {
  if (vertices.empty()) throw ConsistencyError("class_minimizers: empty vertex list");
  std::vector<Vec3l> sp;
  for (const auto& v : vertices) sp.push_back(scaled_point(v, ctx.r));
  const long target = ctx.characters.flat_index(chi);
  std::vector<long long> best(sp.size(), -1);
  scan_box(ctx, [&](const Vec3l& e, long cls) {
    if (cls != target) return;
    for (size_t j = 0; j < sp.size(); ++j) {
      long long v = dot(e, sp[j]);
      if (best[j] < 0 || v < best[j]) best[j] = v;
    }
  });
  std::vector<Vec3l> out;
  scan_box(ctx, [&](const Vec3l& e, long cls) {
    if (cls != target) return;
    for (size_t j = 0; j < sp.size(); ++j)
      if (dot(e, sp[j]) != best[j]) return;
    out.push_back(e);
  });
  std::sort(out.begin(), out.end());
  return out;
}

GGraphResult ggraph_for_cone(const std::array<Vec3q, 3>& triangle, const LatticeContext& ctx) {
  if (det3(triangle[0], triangle[1], triangle[2]) == 0)
    throw ConsistencyError("ggraph_for_cone: vertices do not span a 3-dimensional cone");
  std::array<Vec3l, 3> sp;
  for (int j = 0; j < 3; ++j) sp[j] = scaled_point(triangle[j], ctx.r);

  const long r = ctx.r;
  std::vector<std::array<long long, 3>> best(r, {-1, -1, -1});
  scan_box(ctx, [&](const Vec3l& e, long cls) {
    for (int j = 0; j < 3; ++j) {
      long long v = dot(e, sp[j]);
      if (best[cls][j] < 0 || v < best[cls][j]) best[cls][j] = v;
    }
  });

  GGraph g;
  g.assign.assign(r, Vec3l{0, 0, 0});
  std::vector<int> hits(r, 0);
  scan_box(ctx, [&](const Vec3l& e, long cls) {
    for (int j = 0; j < 3; ++j)
      if (dot(e, sp[j]) != best[cls][j]) return;
    if (hits[cls]++ == 0) g.assign[cls] = e;
  });
  for (long cls = 0; cls < r; ++cls) {
    if (hits[cls] == 0)
      return GGraphResult{std::nullopt, GGraphFailure::no_minimizer,
                          ctx.characters.from_flat(cls)};
    if (hits[cls] > 1)
      return GGraphResult{std::nullopt, GGraphFailure::non_unique, ctx.characters.from_flat(cls)};
  }
  return GGraphResult{std::move(g), GGraphFailure::no_minimizer, Character{}};
}

void validate_ggraph(const GGraph& graph, const LatticeContext& ctx) {
  const long r = ctx.r;
  const CharacterTable& T = ctx.characters;
  if (static_cast<long>(graph.assign.size()) != r)
    throw ConsistencyError("ggraph: expected one exponent per character class");
  if (graph.assign[T.flat_index(T.class_of(Vec3l{0, 0, 0}))] != Vec3l{0, 0, 0})
    throw ConsistencyError("ggraph: trivial class not assigned the constant monomial");
  std::set<Vec3l> mono(graph.assign.begin(), graph.assign.end());
  if (static_cast<long>(mono.size()) != r)
    throw ConsistencyError("ggraph: assigned exponents are not a transversal");
  for (long cls = 0; cls < r; ++cls) {
    const Vec3l& e = graph.assign[cls];
    for (int i = 0; i < 3; ++i) {
      if (e[i] < 0 || e[i] >= r) throw ConsistencyError("ggraph: exponent outside the box");
      if (e[i] > 0) {
        Vec3l d = e;
        d[i] -= 1;
        long dc = T.flat_index(T.class_of(d));
        if (graph.assign[dc] != d)
          throw ConsistencyError("ggraph: order-ideal property violated");
      }
    }
  }
}

}  // namespace ghilb
