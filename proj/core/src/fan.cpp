#include "ghilb/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ghilb/errors.hpp"

namespace ghilb {

namespace {

bool unimodular(const LatticeContext& ctx, const Vec3q& a, const Vec3q& b, const Vec3q& c) {
  // [N : Z^3] = r, so the N-normalized volume is r * |det|.
  Rat d = det3(a, b, c);
  return abs(d) * ctx.r == 1;
}

// Barycentric coordinates of p with respect to the triangle (a, b, c); all
// four points lie on the plane x+y+z = 1, so the 3x3 system is regular.
Vec3q barycentric(const Vec3q& p, const Vec3q& a, const Vec3q& b, const Vec3q& c) {
  Mat3q inv = inverse3(a, b, c);
  Vec3q out;
  for (int j = 0; j < 3; ++j) out[j] = p[0] * inv[0][j] + p[1] * inv[1][j] + p[2] * inv[2][j];
  return out;
}

Rat doubled_area_xy(const Vec3q& a, const Vec3q& b, const Vec3q& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

std::vector<std::array<int, 3>> candidate_triangles(const LatticeContext& ctx) {
  auto pts = junior_points(ctx);
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (unimodular(ctx, pts[i].v, pts[j].v, pts[k].v)) out.push_back({i, j, k});
  return out;
}

Fan build_fan(const LatticeContext& ctx) {
  Fan fan;
  fan.points = junior_points(ctx);
  const int n = static_cast<int>(fan.points.size());
  const long r = ctx.r;
  MinimaTable table = build_minima_table(ctx, fan.points);

  // Candidate filter: unimodular and empty (a basic triangle contains no
  // lattice point besides its vertices, so junior points inside disqualify).
  std::vector<std::array<int, 3>> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec3q &a = fan.points[i].v, &b = fan.points[j].v, &c = fan.points[k].v;
        if (!unimodular(ctx, a, b, c)) continue;
        bool empty = true;
        for (int p = 0; p < n && empty; ++p) {
          if (p == i || p == j || p == k) continue;
          Vec3q bc = barycentric(fan.points[p].v, a, b, c);
          if (bc[0] >= 0 && bc[1] >= 0 && bc[2] >= 0) empty = false;
        }
        if (empty) candidates.push_back({i, j, k});
      }

  // Membership: a cone is in the fan iff every class attains its three
  // per-vertex minima simultaneously, i.e. min of the summed pairing equals
  // the sum of the per-vertex minima.
  for (const auto& cand : candidates) {
    Vec3l ssum{0, 0, 0};
    for (int j : cand) ssum = add(ssum, table.scaledPoints[j]);
    std::vector<long long> minSum(r, -1);
    const CharacterTable& T = ctx.characters;
    {
      const Character cx = T.class_of(Vec3l{1, 0, 0});
      const Character cy = T.class_of(Vec3l{0, 1, 0});
      const Character cz = T.class_of(Vec3l{0, 0, 1});
      Character c0 = T.class_of(Vec3l{0, 0, 0});
      for (long e0 = 0; e0 < r; ++e0) {
        Character c1 = c0;
        for (long e1 = 0; e1 < r; ++e1) {
          Character c2 = c1;
          long long base = e0 * ssum[0] + e1 * ssum[1];
          for (long e2 = 0; e2 < r; ++e2) {
            long long v = base + e2 * ssum[2];
            long cls = T.flat_index(c2);
            if (minSum[cls] < 0 || v < minSum[cls]) minSum[cls] = v;
            c2 = T.add(c2, cz);
          }
          c1 = T.add(c1, cy);
        }
        c0 = T.add(c0, cx);
      }
    }
    bool member = true;
    for (long cls = 0; cls < r && member; ++cls) {
      long long parts = 0;
      for (int j : cand) parts += table.minValue[cls][j];
      if (minSum[cls] != parts) member = false;
    }
    if (!member) continue;

    std::array<Vec3q, 3> tri{fan.points[cand[0]].v, fan.points[cand[1]].v, fan.points[cand[2]].v};
    GGraphResult res = ggraph_for_cone(tri, ctx);
    if (!res.ok()) {
      if (res.failure == GGraphFailure::non_unique)
        throw ConsistencyError("build_fan: non-unique minimizer on a unimodular cone (class " +
                               ctx.characters.label(res.offending) + ")");
      throw TilingError("build_fan: membership test accepted a cone without a G-graph");
    }
    validate_ggraph(*res.graph, ctx);

    Triangle t;
    t.v = cand;
    for (int j = 0; j < 3; ++j) t.nCoords[j] = ctx.n_coordinates(fan.points[cand[j]].v);
    t.graph = std::move(*res.graph);
    fan.triangles.push_back(std::move(t));
  }

  std::sort(fan.triangles.begin(), fan.triangles.end(),
            [](const Triangle& a, const Triangle& b) { return a.v < b.v; });

  if (static_cast<long>(fan.triangles.size()) != r)
    throw TilingError("build_fan: expected " + std::to_string(r) + " triangles, found " +
                      std::to_string(fan.triangles.size()));

  // edge incidence
  std::map<std::array<int, 2>, std::vector<int>> edges;
  for (int ti = 0; ti < static_cast<int>(fan.triangles.size()); ++ti) {
    const auto& v = fan.triangles[ti].v;
    edges[{v[0], v[1]}].push_back(ti);
    edges[{v[0], v[2]}].push_back(ti);
    edges[{v[1], v[2]}].push_back(ti);
  }
  for (const auto& [e, tris] : edges) {
    const Vec3q &p = fan.points[e[0]].v, &q = fan.points[e[1]].v;
    bool onBoundary = false;
    for (int i = 0; i < 3; ++i)
      if (p[i] == 0 && q[i] == 0) onBoundary = true;
    if (onBoundary) {
      if (tris.size() != 1)
        throw TilingError("build_fan: boundary edge with " + std::to_string(tris.size()) +
                          " incident triangles");
      fan.boundaryEdges.push_back(e);
    } else {
      if (tris.size() != 2)
        throw TilingError("build_fan: interior edge with " + std::to_string(tris.size()) +
                          " incident triangles");
      Wall w;
      w.v = e;
      w.triangle = {tris[0], tris[1]};
      for (int s = 0; s < 2; ++s) {
        for (int vv : fan.triangles[tris[s]].v)
          if (vv != e[0] && vv != e[1]) w.opposite[s] = vv;
      }
      // w + w' = alpha*v1 + beta*v2: solve in the integer coordinates of the
      // unimodular basis (v1, v2, w) of side 0.
      Mat3z basis{ctx.n_coordinates(fan.points[e[0]].v), ctx.n_coordinates(fan.points[e[1]].v),
                  ctx.n_coordinates(fan.points[w.opposite[0]].v)};
      Mat3z inv = unimodular_inverse(basis);
      Vec3z wp = ctx.n_coordinates(fan.points[w.opposite[1]].v);
      Vec3z coeff;
      for (int j = 0; j < 3; ++j) coeff[j] = wp[0] * inv[0][j] + wp[1] * inv[1][j] + wp[2] * inv[2][j];
      if (coeff[2] != -1 || coeff[0] + coeff[1] != 2)
        throw ConsistencyError("build_fan: wall relation violated");
      w.alpha = coeff[0].get_si();
      w.beta = coeff[1].get_si();
      fan.walls.push_back(w);
    }
  }

  // tiling certificate: positive areas summing to the simplex area
  Rat total = 0;
  for (const auto& t : fan.triangles) {
    Rat a2 = abs(doubled_area_xy(fan.points[t.v[0]].v, fan.points[t.v[1]].v, fan.points[t.v[2]].v));
    if (a2 == 0) throw TilingError("build_fan: degenerate triangle");
    total += a2;
  }
  if (total != 1) throw TilingError("build_fan: triangle areas do not tile the simplex");

  std::set<int> used;
  for (const auto& t : fan.triangles) used.insert(t.v.begin(), t.v.end());
  if (static_cast<int>(used.size()) != n)
    throw TilingError("build_fan: some junior point is not a vertex of the triangulation");

  for (int i = 0; i < n; ++i)
    if (!fan.points[i].boundary) fan.interiorVertices.push_back(i);

  long V = n;
  long E = static_cast<long>(fan.walls.size() + fan.boundaryEdges.size());
  long F = static_cast<long>(fan.triangles.size());
  if (V - E + F != 1) throw TilingError("build_fan: Euler characteristic check failed");

  return fan;
}

FanStatistics fan_statistics(const Fan& fan) {
  FanStatistics s;
  s.triangleCount = static_cast<long>(fan.triangles.size());
  s.interiorEdgeCount = static_cast<long>(fan.walls.size());
  s.boundaryEdgeCount = static_cast<long>(fan.boundaryEdges.size());
  s.interiorVertexCount = static_cast<long>(fan.interiorVertices.size());
  long V = static_cast<long>(fan.points.size());
  s.eulerCheck = (V - (s.interiorEdgeCount + s.boundaryEdgeCount) + s.triangleCount) == 1;
  return s;
}

}  // namespace ghilb
