#include "ghilb/ktheory.hpp"

#include <algorithm>

#include "ghilb/errors.hpp"

namespace ghilb {

namespace {

constexpr int kSeriesOrder = 5;  // pole order 3 + 2 guard terms

Vec3l to_vec3l(const Vec3q& q) {
  Vec3l out;
  for (int i = 0; i < 3; ++i) {
    if (q[i].get_den() != 1 || !q[i].get_num().fits_slong_p())
      throw ConsistencyError("expected an integer vector");
    out[i] = q[i].get_num().get_si();
  }
  return out;
}

constexpr std::array<Vec3l, 8> kSubsetSums = {
    Vec3l{0, 0, 0}, Vec3l{1, 0, 0}, Vec3l{0, 1, 0}, Vec3l{1, 1, 0},
    Vec3l{0, 0, 1}, Vec3l{1, 0, 1}, Vec3l{0, 1, 1}, Vec3l{1, 1, 1}};
constexpr std::array<int, 8> kSubsetSigns = {1, -1, -1, 1, -1, 1, 1, -1};

}  // namespace

KTheoryContext::KTheoryContext(const LatticeContext& ctx, const Fan& fan, Conventions conv,
                               bool calibrateAmple)
    : ctx_(&ctx), fan_(&fan), conv_(conv) {
  const long r = ctx.r;
  for (const auto& tri : fan.triangles) {
    FixedPointData fp;
    Mat3q inv = inverse3(fan.points[tri.v[0]].v, fan.points[tri.v[1]].v, fan.points[tri.v[2]].v);
    for (int i = 0; i < 3; ++i)
      fp.dualBasis[i] = to_vec3l(Vec3q{inv[0][i], inv[1][i], inv[2][i]});
    fp.ample = {0, 0, 0};
    for (long cls = 0; cls < r; ++cls) fp.ample = add(fp.ample, tri.graph.assign[cls]);
    fixed_.push_back(fp);
  }

  // strict positivity of the polarization across every wall, plus the
  // Cartier compatibility of the per-cone ample characters
  for (const auto& w : fan.walls) {
    long total = 0;
    for (long cls = 0; cls < r; ++cls)
      total += wall_degree(w, ctx.characters.from_flat(cls), fan, ctx);
    if (total < 1) throw ConsistencyError("ample_data: wall with zero total degree");
    Vec3l diff = sub(fixed_[w.triangle[1]].ample, fixed_[w.triangle[0]].ample);
    for (int end : w.v) {
      Rat p = Rat(to_int(diff[0])) * fan.points[end].v[0] + Rat(to_int(diff[1])) * fan.points[end].v[1] +
              Rat(to_int(diff[2])) * fan.points[end].v[2];
      if (p != 0) throw ConsistencyError("ample_data: Cartier condition violated on a wall");
    }
  }

  // deterministic generic direction: first c = (1, k, k^2) with no
  // denominator exponent vanishing
  for (long long k = 2;; ++k) {
    if (k > 4096) throw ConsistencyError("no generic direction found");
    Vec3l c{1, k, k * k};
    bool ok = true;
    for (const auto& fp : fixed_)
      for (const auto& u : fp.dualBasis)
        if (dot(c, u) == 0) ok = false;
    if (ok) {
      generic_ = c;
      break;
    }
  }

  for (const auto& fp : fixed_) {
    PowerSeries den(kSeriesOrder);
    den[0] = 1;
    for (const auto& u : fp.dualBasis) {
      long long d = conv_.denomSign * dot(generic_, u);
      PowerSeries f(kSeriesOrder);
      for (int j = 0; j <= kSeriesOrder; ++j) f[j] = -Rat(binomial_coefficient(d, j + 1));
      den = den.mul(f);
    }
    invDen_.push_back(den.inverse());
  }

  if (!calibrateAmple) return;

  // Orientation of the ample twist: on an exceptional curve the Euler
  // characteristic of O_C twisted by A^n must grow with slope deg_C(A).
  if (fan.walls.empty()) {
    ampleSign_ = +1;  // no compact curves; orientation immaterial
    return;
  }
  const Wall& w = fan.walls.front();
  long deg = 0;
  for (long cls = 0; cls < r; ++cls)
    deg += wall_degree(w, ctx.characters.from_flat(cls), fan, ctx);
  LocalizedClass oc = wall_curve_class(w, *this);
  for (int sign : {+1, -1}) {
    ampleSign_ = sign;
    if (euler_characteristic(oc, 0, *this) == 1 &&
        euler_characteristic(oc, 1, *this) == Rat(1 + deg)) {
      return;
    }
  }
  ampleSign_ = 0;
  throw ConsistencyError("ample_data: no orientation makes the polarization convex");
}

LocalizedClass psi_class(const Character& chi, const KTheoryContext& kt) {
  const LatticeContext& ctx = kt.lattice();
  const CharacterTable& T = ctx.characters;
  LocalizedClass out;
  out.terms.reserve(kt.fan().triangles.size());
  for (const auto& tri : kt.fan().triangles) {
    std::vector<std::pair<int, Vec3l>> terms;
    terms.reserve(8);
    for (int s = 0; s < 8; ++s) {
      const Vec3l& eS = kSubsetSums[s];
      Character base = T.class_of(eS);
      Character nu = kt.conventions().nuSubtractsChi ? T.add(base, T.negate(chi))
                                                     : T.add(base, chi);
      const Vec3l& m = tri.graph.assign[T.flat_index(nu)];
      Vec3l e = sub(scale(kt.conventions().tautSign, m), eS);
      terms.emplace_back(kSubsetSigns[s], e);
    }
    out.terms.push_back(std::move(terms));
  }
  return out;
}

LocalizedClass tensor_dual_tautological(LocalizedClass cls, const Character& mu,
                                        const KTheoryContext& kt) {
  const CharacterTable& T = kt.lattice().characters;
  const long idx = T.flat_index(mu);
  for (size_t t = 0; t < cls.terms.size(); ++t) {
    Vec3l shift = scale(-kt.conventions().tautSign, kt.fan().triangles[t].graph.assign[idx]);
    for (auto& [sign, e] : cls.terms[t]) e = add(e, shift);
  }
  return cls;
}

Rat euler_characteristic(const LocalizedClass& cls, long twistPower, const KTheoryContext& kt) {
  if (cls.terms.size() != kt.fan().triangles.size())
    throw ConsistencyError("euler_characteristic: class/fan size mismatch");
  std::array<Rat, kSeriesOrder + 1> laurent{};  // index i <-> eps^{i-3}
  const Vec3l& c = kt.generic_direction();
  for (size_t t = 0; t < cls.terms.size(); ++t) {
    long long twist = 0;
    if (twistPower != 0) {
      Vec3l a = scale(twistPower * kt.ample_sign() * kt.conventions().tautSign,
                      kt.fixed_points()[t].ample);
      twist = dot(c, a);
    }
    PowerSeries num(kSeriesOrder);
    bool any = false;
    for (const auto& [sign, e] : cls.terms[t]) {
      num.add_scaled(PowerSeries::binomial(dot(c, e) + twist, kSeriesOrder), sign);
      any = true;
    }
    if (!any) continue;
    PowerSeries term = num.mul(kt.inverse_denominator(static_cast<int>(t)));
    for (int i = 0; i <= kSeriesOrder; ++i) laurent[i] += term[i];
  }
  for (int i = 0; i < 3; ++i)
    if (laurent[i] != 0)
      throw ConsistencyError(
          "euler_characteristic: pole at t = 1 (non-compact support or convention error)");
  return laurent[3];
}

long wall_degree(const Wall& wall, const Character& chi, const Fan& fan,
                 const LatticeContext& ctx) {
  const long idx = ctx.characters.flat_index(chi);
  const Vec3l& m0 = fan.triangles[wall.triangle[0]].graph.assign[idx];
  const Vec3l& m1 = fan.triangles[wall.triangle[1]].graph.assign[idx];
  Vec3l diff = sub(m1, m0);
  const Vec3q& w0 = fan.points[wall.opposite[0]].v;
  const Vec3q& w1 = fan.points[wall.opposite[1]].v;
  Rat d = Rat(to_int(diff[0])) * w0[0] + Rat(to_int(diff[1])) * w0[1] + Rat(to_int(diff[2])) * w0[2];
  Rat d2 = -(Rat(to_int(diff[0])) * w1[0] + Rat(to_int(diff[1])) * w1[1] + Rat(to_int(diff[2])) * w1[2]);
  if (d.get_den() != 1 || d != d2)
    throw ConsistencyError("wall_degree: non-integral or asymmetric degree");
  if (d < 0) throw ConsistencyError("wall_degree: negative degree (nefness violated)");
  return static_cast<long>(d.get_num().get_si());
}

namespace {

// (1 - t^{denomSign * u_i}) factors for the coordinates cutting out a stratum.
void append_cut_factors(std::vector<std::pair<int, Vec3l>>& terms, const Vec3l& u, int denomSign) {
  std::vector<std::pair<int, Vec3l>> next;
  for (const auto& [sign, e] : terms) {
    next.emplace_back(sign, e);
    next.emplace_back(-sign, add(e, scale(denomSign, u)));
  }
  terms = std::move(next);
}

}  // namespace

LocalizedClass wall_curve_class(const Wall& wall, const KTheoryContext& kt) {
  LocalizedClass out;
  out.terms.resize(kt.fan().triangles.size());
  for (int s = 0; s < 2; ++s) {
    int t = wall.triangle[s];
    const Triangle& tri = kt.fan().triangles[t];
    std::vector<std::pair<int, Vec3l>> terms{{1, Vec3l{0, 0, 0}}};
    for (int i = 0; i < 3; ++i) {
      if (tri.v[i] == wall.v[0] || tri.v[i] == wall.v[1])
        append_cut_factors(terms, kt.fixed_points()[t].dualBasis[i],
                           kt.conventions().denomSign);
    }
    out.terms[t] = std::move(terms);
  }
  return out;
}

LocalizedClass vertex_divisor_class(int pointIndex, const KTheoryContext& kt) {
  LocalizedClass out;
  out.terms.resize(kt.fan().triangles.size());
  for (size_t t = 0; t < kt.fan().triangles.size(); ++t) {
    const Triangle& tri = kt.fan().triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (tri.v[i] == pointIndex) {
        std::vector<std::pair<int, Vec3l>> terms{{1, Vec3l{0, 0, 0}}};
        append_cut_factors(terms, kt.fixed_points()[t].dualBasis[i],
                           kt.conventions().denomSign);
        out.terms[t] = std::move(terms);
      }
    }
  }
  return out;
}

PsiClassRecord classify_character(const Character& chi, const KTheoryContext& kt) {
  PsiClassRecord rec;
  rec.chi = chi;
  rec.label = kt.lattice().characters.label(chi);
  rec.localized = psi_class(chi, kt);

  std::array<Rat, 6> p;
  for (long n = 0; n < 6; ++n) p[n] = euler_characteristic(rec.localized, n, kt);
  if (p[0] != 0) throw ConsistencyError("classify: p(0) != 0 for " + rec.label);
  for (int i = 0; i + 3 < 6; ++i) {
    Rat d3 = p[i + 3] - 3 * p[i + 2] + 3 * p[i + 1] - p[i];
    if (d3 != 0)
      throw ConsistencyError("classify: Euler characteristic is not a quadratic polynomial for " +
                             rec.label);
  }
  Rat c2 = (p[2] - 2 * p[1]) / 2;
  Rat c1 = p[1] - c2;
  rec.hilbert = {Rat(0), c1, c2};
  if (c1 == 0 && c2 == 0)
    throw ConsistencyError("classify: zero Hilbert polynomial for " + rec.label);
  rec.leading = (c2 != 0) ? c2 : c1;
  rec.homologicalDegree = rec.leading > 0 ? 0 : -1;
  rec.supportDim = (c2 != 0) ? 2 : 1;
  if (rec.homologicalDegree == -1 && rec.supportDim != 2)
    throw ConsistencyError("classify: degree -1 image with non-surface support for " + rec.label);
  return rec;
}

std::vector<std::vector<Rat>> duality_matrix(const KTheoryContext& kt) {
  const long r = kt.lattice().r;
  const CharacterTable& T = kt.lattice().characters;
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r));
  for (long chi = 0; chi < r; ++chi) {
    LocalizedClass cls = psi_class(T.from_flat(chi), kt);
    for (long mu = 0; mu < r; ++mu) {
      LocalizedClass twisted = tensor_dual_tautological(cls, T.from_flat(mu), kt);
      m[mu][chi] = euler_characteristic(twisted, 0, kt);
    }
  }
  return m;
}

void assert_duality_identity(const KTheoryContext& kt) {
  auto m = duality_matrix(kt);
  const long r = kt.lattice().r;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      if (m[i][j] != ((i == j) ? 1 : 0)) {
        const CharacterTable& T = kt.lattice().characters;
        throw ConsistencyError("duality check failed at (mu, chi) = (" +
                               T.label(T.from_flat(i)) + ", " + T.label(T.from_flat(j)) +
                               "): got " + rat_str(m[i][j]));
      }
    }
}

B0Report classify_all(const KTheoryContext& kt, bool withWallDegrees) {
  const long r = kt.lattice().r;
  if (r < 2) throw ParseError("no nontrivial characters: the group is trivial");
  B0Report rep;
  rep.r = r;
  const CharacterTable& T = kt.lattice().characters;
  for (long idx = 0; idx < r; ++idx) {
    Character chi = T.from_flat(idx);
    if (T.is_trivial(chi)) continue;
    PsiClassRecord rec = classify_character(chi, kt);
    if (rec.homologicalDegree == 0) rep.h0.push_back(idx);
    rep.records.push_back(std::move(rec));
  }
  rep.b0 = Rat(static_cast<long>(rep.h0.size()), r - 1);
  rep.b0.canonicalize();
  if (withWallDegrees) {
    for (const auto& w : kt.fan().walls) {
      std::vector<long> row;
      for (long idx = 0; idx < r; ++idx)
        row.push_back(wall_degree(w, T.from_flat(idx), kt.fan(), kt.lattice()));
      rep.wallDegrees.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace ghilb
