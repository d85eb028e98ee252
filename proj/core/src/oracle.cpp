#include "ghilb/oracle.hpp"

#include <algorithm>
#include <random>

#include "ghilb/errors.hpp"

namespace ghilb {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long next_prime(long n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::string vec_str(const Vec3q& v) {
  return "(" + rat_str(v[0]) + "," + rat_str(v[1]) + "," + rat_str(v[2]) + ")";
}

}  // namespace

SamplingWitness sampling_fan_oracle(const LatticeContext& ctx, const Fan& fan,
                                    const OracleConfig& config) {
  SamplingWitness out;
  const long r = ctx.r;
  std::mt19937_64 rng(config.seed);
  long denom = next_prime(std::max(50L, 3 * r + 1));

  // pointwise minimizer per class at a sample point, via the same box bound
  // used everywhere: values are <e, denom * point>, exact integers
  const CharacterTable& T = ctx.characters;
  const Character cx = T.class_of(Vec3l{1, 0, 0});
  const Character cy = T.class_of(Vec3l{0, 1, 0});
  const Character cz = T.class_of(Vec3l{0, 0, 1});

  std::vector<Mat3q> triangleFrames;
  for (const auto& tri : fan.triangles)
    triangleFrames.push_back(
        inverse3(fan.points[tri.v[0]].v, fan.points[tri.v[1]].v, fan.points[tri.v[2]].v));

  long produced = 0;
  long consecutiveRejects = 0;
  while (produced < config.sampleCount) {
    std::uniform_int_distribution<long> pick(1, denom - 2);
    long i = pick(rng), j = pick(rng);
    if (i + j >= denom) continue;  // keep the third coordinate positive
    Vec3l sp{i, j, denom - i - j};

    std::vector<long long> best(r, -1);
    std::vector<Vec3l> argmin(r);
    std::vector<int> ties(r, 0);
    {
      Character c0 = T.class_of(Vec3l{0, 0, 0});
      for (long e0 = 0; e0 < r; ++e0) {
        Character c1 = c0;
        for (long e1 = 0; e1 < r; ++e1) {
          Character c2 = c1;
          long long base = e0 * sp[0] + e1 * sp[1];
          for (long e2 = 0; e2 < r; ++e2) {
            long long v = base + e2 * sp[2];
            long cls = T.flat_index(c2);
            if (best[cls] < 0 || v < best[cls]) {
              best[cls] = v;
              argmin[cls] = Vec3l{e0, e1, e2};
              ties[cls] = 1;
            } else if (v == best[cls]) {
              ++ties[cls];
            }
            c2 = T.add(c2, cz);
          }
          c1 = T.add(c1, cy);
        }
        c0 = T.add(c0, cx);
      }
    }
    bool onWall = std::any_of(ties.begin(), ties.end(), [](int t) { return t > 1; });
    if (onWall) {
      if (++consecutiveRejects > 200) denom = next_prime(denom + 1);
      continue;
    }
    consecutiveRejects = 0;
    ++produced;

    Vec3q point{Rat(i, denom), Rat(j, denom), Rat(denom - i - j, denom)};
    for (auto& q : point) q.canonicalize();

    // containment: strictly inside exactly one triangle
    int container = -1;
    int containerCount = 0;
    for (int ti = 0; ti < static_cast<int>(fan.triangles.size()); ++ti) {
      const Mat3q& inv = triangleFrames[ti];
      bool inside = true;
      for (int c = 0; c < 3 && inside; ++c) {
        Rat bc = point[0] * inv[0][c] + point[1] * inv[1][c] + point[2] * inv[2][c];
        if (bc <= 0) inside = false;
      }
      if (inside) {
        container = ti;
        ++containerCount;
      }
    }
    if (containerCount != 1) {
      ++out.mismatches;
      if (out.detail.empty())
        out.detail = "point " + vec_str(point) + " lies in " + std::to_string(containerCount) +
                     " triangles";
      continue;
    }
    const GGraph& g = fan.triangles[container].graph;
    for (long cls = 0; cls < r; ++cls) {
      if (g.assign[cls] != argmin[cls]) {
        ++out.mismatches;
        if (out.detail.empty())
          out.detail = "point " + vec_str(point) + ", class " +
                       T.label(T.from_flat(cls)) + ": pointwise minimizer disagrees with the fan";
        break;
      }
    }
  }
  out.samples = produced;
  out.ok = out.mismatches == 0;
  return out;
}

namespace {

// Dense integer-coefficient polynomials; enough for the exact normalization.
struct PolyZ {
  std::vector<Int> c;  // c[i] is the coefficient of s^i

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
  }
};

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  PolyZ out;
  out.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  out.trim();
  return out;
}

// divide by (1 - s^m); remainder must vanish
PolyZ poly_divide_cyclotomic_factor(const PolyZ& p, long m) {
  // (1 - s^m) * q = p  <=>  p_k = q_k - q_{k-m}, so q_k = p_k + q_{k-m};
  // exactness means the recurrence dies out above degree(p) - m.
  const int dp = p.degree();
  const int dq = dp - static_cast<int>(m);
  if (dq < 0) throw ConsistencyError("brute oracle: inexact division (pole at s = 1)");
  std::vector<Int> qc(dp + 1, Int(0));
  for (int k = 0; k <= dp; ++k) {
    qc[k] = p.c[k];
    if (k >= m) qc[k] += qc[k - m];
  }
  for (int k = dq + 1; k <= dp; ++k)
    if (qc[k] != 0) throw ConsistencyError("brute oracle: inexact division (pole at s = 1)");
  PolyZ q;
  q.c.assign(qc.begin(), qc.begin() + dq + 1);
  q.trim();
  return q;
}

}  // namespace

DualityComparison brute_duality_oracle(const KTheoryContext& kt, const OracleConfig& config) {
  DualityComparison out;
  const long r = kt.lattice().r;
  if (r > config.rCap) {
    out.skipped = true;
    out.ok = true;
    out.detail = "skipped: r exceeds the oracle cap";
    return out;
  }
  const Vec3l& c = kt.generic_direction();
  const int numTriangles = static_cast<int>(kt.fan().triangles.size());

  // Per-triangle denominator data: factors (1 - s^{m}) with m > 0, plus the
  // monomial prefactor sign * s^{shift} produced by normalizing negatives.
  struct DenData {
    std::vector<long> factors;
    int sign = 1;
    long shift = 0;
  };
  std::vector<DenData> dens(numTriangles);
  std::vector<PolyZ> denPoly(numTriangles);
  for (int t = 0; t < numTriangles; ++t) {
    DenData& d = dens[t];
    for (const auto& u : kt.fixed_points()[t].dualBasis) {
      long long e = kt.conventions().denomSign * dot(c, u);
      if (e > 0) {
        d.factors.push_back(static_cast<long>(e));
      } else {
        // 1/(1 - s^e) = -s^{-e}/(1 - s^{-e}) for e < 0
        d.factors.push_back(static_cast<long>(-e));
        d.sign = -d.sign;
        d.shift += static_cast<long>(-e);
      }
    }
    PolyZ p;
    p.c = {Int(1)};
    for (long m : d.factors) {
      PolyZ f;
      f.c.assign(m + 1, Int(0));
      f.c[0] = 1;
      f.c[m] = -1;
      p = poly_mul(p, f);
    }
    denPoly[t] = p;
  }
  // cofactor products over the other triangles
  std::vector<PolyZ> prefix(numTriangles + 1), suffix(numTriangles + 1);
  prefix[0].c = {Int(1)};
  for (int t = 0; t < numTriangles; ++t) prefix[t + 1] = poly_mul(prefix[t], denPoly[t]);
  suffix[numTriangles].c = {Int(1)};
  for (int t = numTriangles - 1; t >= 0; --t) suffix[t] = poly_mul(suffix[t + 1], denPoly[t]);

  const CharacterTable& T = kt.lattice().characters;
  for (long chi = 0; chi < r; ++chi) {
    LocalizedClass base = psi_class(T.from_flat(chi), kt);
    for (long mu = 0; mu < r; ++mu) {
      LocalizedClass cls = tensor_dual_tautological(base, T.from_flat(mu), kt);
      // gather shifted numerator monomials per triangle
      long long minExp = 0;
      std::vector<std::vector<std::pair<long long, int>>> numer(numTriangles);
      for (int t = 0; t < numTriangles; ++t) {
        for (const auto& [sign, e] : cls.terms[t]) {
          long long k = dot(c, e) + dens[t].shift;
          numer[t].emplace_back(k, sign * dens[t].sign);
          minExp = std::min(minExp, k);
        }
      }
      // P = sum_t N_t * prod_{t' != t} D_{t'}, shifted so exponents >= 0
      PolyZ total;
      total.c = {Int(0)};
      for (int t = 0; t < numTriangles; ++t) {
        PolyZ cof = poly_mul(prefix[t], suffix[t + 1]);
        for (const auto& [k, sign] : numer[t]) {
          size_t off = static_cast<size_t>(k - minExp);
          if (total.c.size() < cof.c.size() + off) total.c.resize(cof.c.size() + off, Int(0));
          for (size_t i = 0; i < cof.c.size(); ++i) {
            if (sign > 0)
              total.c[i + off] += cof.c[i];
            else
              total.c[i + off] -= cof.c[i];
          }
        }
      }
      total.trim();
      // divide by every factor of the common denominator
      PolyZ reduced = total;
      bool zero = reduced.degree() == 0 && reduced.c[0] == 0;
      if (!zero) {
        try {
          for (int t = 0; t < numTriangles; ++t)
            for (long m : dens[t].factors) reduced = poly_divide_cyclotomic_factor(reduced, m);
        } catch (const ConsistencyError& e) {
          out.ok = false;
          out.detail = "entry (" + T.label(T.from_flat(mu)) + ", " + T.label(T.from_flat(chi)) +
                       "): " + e.what();
          return out;
        }
      }
      Int value = 0;
      if (!zero)
        for (const auto& coeff : reduced.c) value += coeff;
      Int expected = (mu == chi) ? 1 : 0;
      if (value != expected) {
        out.ok = false;
        out.detail = "entry (" + T.label(T.from_flat(mu)) + ", " + T.label(T.from_flat(chi)) +
                     ") = " + value.get_str() + ", expected " + expected.get_str();
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace ghilb
