#include "ghilb/verify.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

#include "ghilb/errors.hpp"
#include "ghilb/fan.hpp"
#include "ghilb/ktheory.hpp"

namespace ghilb {

namespace {

void record(VerifyResult& out, const std::string& name, bool passed, std::string detail = "") {
  out.checks.push_back({name, passed, std::move(detail)});
  if (!passed) out.allPassed = false;
}

template <typename F>
void guarded(VerifyResult& out, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    record(out, name, false, e.what());
  }
}

std::array<long, 3> sorted_multiset(const PsiClassRecord& r) {
  return {r.homologicalDegree, r.supportDim, 0};
}

}  // namespace

VerifyResult run_verification(const GroupSpec& spec, const OracleConfig& config) {
  VerifyResult out;

  LatticeContext ctx;
  guarded(out, "lattice", [&] {
    ctx = build_lattice_context(spec);
    Rat detN = det3(ctx.nBasis[0], ctx.nBasis[1], ctx.nBasis[2]);
    bool ok = abs(detN) * ctx.r == 1 && ctx.characters.order() == ctx.r &&
              static_cast<long>(ctx.groupElements.size()) == ctx.r;
    record(out, "lattice", ok,
           "r = " + std::to_string(ctx.r) + ", [N:Z^3] = " + rat_str(1 / abs(detN)));
  });
  if (out.checks.empty() || !out.checks.front().passed) return out;

  guarded(out, "junior-points", [&] {
    auto pts = junior_points(ctx);
    bool ok = true;
    std::string detail = std::to_string(pts.size()) + " points";
    for (const auto& p : pts) {
      if (!ctx.contains_in_n(p.v)) ok = false;
      for (long k = 2; k <= ctx.r; ++k) {
        Vec3q frac{p.v[0] / k, p.v[1] / k, p.v[2] / k};
        if (ctx.contains_in_n(frac)) ok = false;  // primitivity
      }
      Rat age = p.v[0] + p.v[1] + p.v[2];
      if (age != 1) ok = false;
    }
    record(out, "junior-points", ok, detail);
  });

  Fan fan;
  guarded(out, "tiling", [&] {
    fan = build_fan(ctx);  // throws TilingError on any defect
    record(out, "tiling", static_cast<long>(fan.triangles.size()) == ctx.r,
           std::to_string(fan.triangles.size()) + " triangles");
  });
  if (!out.checks.back().passed) return out;

  guarded(out, "edge-bound", [&] {
    FanStatistics st = fan_statistics(fan);
    bool bound = 2 * st.interiorEdgeCount <= 3 * ctx.r - 3;
    std::string detail = std::to_string(st.interiorEdgeCount) + " interior edges, bound " +
                         std::to_string(3 * ctx.r - 3) + "/2";
    if (spec.generators.size() == 1) {
      const auto& g = spec.generators.front();
      bool coprime = std::gcd(g.weights[0], g.order) == 1 &&
                     std::gcd(g.weights[1], g.order) == 1 &&
                     std::gcd(g.weights[2], g.order) == 1;
      bool equality = 2 * st.interiorEdgeCount == 3 * ctx.r - 3;
      if (equality != coprime) bound = false;
      detail += coprime ? "; weights coprime to r (equality expected)"
                        : "; gcd(weights, r) = (" +
                              std::to_string(std::gcd(g.weights[0], g.order)) + "," +
                              std::to_string(std::gcd(g.weights[1], g.order)) + "," +
                              std::to_string(std::gcd(g.weights[2], g.order)) + ")";
    }
    record(out, "edge-bound", bound && st.eulerCheck, detail);
  });

  guarded(out, "wall-relations", [&] {
    bool ok = true;
    for (const auto& w : fan.walls)
      if (w.alpha + w.beta != 2) ok = false;
    record(out, "wall-relations", ok, std::to_string(fan.walls.size()) + " walls");
  });

  // K-theory: the context constructor re-checks Cartier compatibility and
  // wall positivity, and calibrates the ample orientation.
  std::unique_ptr<KTheoryContext> kt;
  guarded(out, "ample-convexity", [&] {
    kt = std::make_unique<KTheoryContext>(ctx, fan);
    bool ok = true;
    std::string detail;
    for (const auto& w : fan.walls) {
      long total = 0;
      for (long idx = 0; idx < ctx.r; ++idx)
        total += wall_degree(w, ctx.characters.from_flat(idx), fan, ctx);
      LocalizedClass oc = wall_curve_class(w, *kt);
      for (long n = 0; n <= 2; ++n) {
        if (euler_characteristic(oc, n, *kt) != Rat(1 + n * total)) ok = false;
      }
      if (total < 1) ok = false;
    }
    record(out, "ample-convexity", ok, "chi(O_C x A^n) = 1 + n deg on every wall");
  });
  if (!kt) return out;

  guarded(out, "duality-identity", [&] {
    assert_duality_identity(*kt);
    record(out, "duality-identity", true,
           std::to_string(ctx.r) + "x" + std::to_string(ctx.r) + " identity");
  });

  B0Report rep;
  bool haveReport = false;
  if (ctx.r >= 2) {
    guarded(out, "purity-fit", [&] {
      rep = classify_all(*kt);
      haveReport = true;
      // classify_character already asserts p(0) = 0, the exact quadratic fit
      // on n = 0..5 and a nonzero leading coefficient
      bool ok = true;
      for (const auto& r : rep.records)
        if (r.homologicalDegree == -1 && r.supportDim != 2) ok = false;
      record(out, "purity-fit", ok, "b0 = " + rat_str(rep.b0));
    });
  } else {
    record(out, "purity-fit", true, "trivial group: no nontrivial characters");
  }

  if (haveReport) {
    guarded(out, "inversion-robustness", [&] {
      const CharacterTable& T = ctx.characters;
      std::set<long> h0(rep.h0.begin(), rep.h0.end());
      long inverted = 0;
      for (const auto& r : rep.records)
        if (h0.count(T.flat_index(T.negate(r.chi)))) ++inverted;
      record(out, "inversion-robustness", inverted == static_cast<long>(h0.size()),
             "|H0| = " + std::to_string(h0.size()));
    });

    guarded(out, "permutation-equivariance", [&] {
      bool ok = true;
      const std::array<std::array<int, 3>, 2> perms = {{{1, 0, 2}, {1, 2, 0}}};
      for (const auto& p : perms) {
        GroupSpec permuted = spec;
        for (auto& g : permuted.generators) {
          std::array<long, 3> w{};
          for (int i = 0; i < 3; ++i) w[i] = g.weights[p[i]];
          g.weights = w;
        }
        LatticeContext pctx = build_lattice_context(permuted);
        Fan pfan = build_fan(pctx);
        KTheoryContext pkt(pctx, pfan);
        B0Report prep = classify_all(pkt);
        if (prep.b0 != rep.b0) ok = false;
        auto key = [](const B0Report& r) {
          std::vector<std::array<long, 3>> v;
          for (const auto& rec : r.records) v.push_back(sorted_multiset(rec));
          std::sort(v.begin(), v.end());
          return v;
        };
        if (key(prep) != key(rep)) ok = false;
      }
      record(out, "permutation-equivariance", ok, "xy swap and xyz rotation");
    });
  }

  guarded(out, "sampling-oracle", [&] {
    SamplingWitness w = sampling_fan_oracle(ctx, fan, config);
    record(out, "sampling-oracle", w.ok,
           std::to_string(w.samples) + " samples, " + std::to_string(w.mismatches) +
               " mismatches" + (w.detail.empty() ? "" : "; " + w.detail));
  });

  guarded(out, "brute-duality-oracle", [&] {
    DualityComparison d = brute_duality_oracle(*kt, config);
    record(out, "brute-duality-oracle", d.ok, d.detail.empty() ? "entrywise agreement" : d.detail);
  });

  return out;
}

}  // namespace ghilb
