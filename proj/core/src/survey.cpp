#include "ghilb/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "ghilb/errors.hpp"
#include "ghilb/fan.hpp"
#include "ghilb/ktheory.hpp"

namespace ghilb {

std::vector<std::pair<long, long>> enumerate_embeddings(long r, bool dedupeSymmetry) {
  std::vector<std::pair<long, long>> out;
  if (r < 3) return out;
  for (long a = 1; a <= r - 2; ++a) {
    long b = r - 1 - a;
    if (dedupeSymmetry && a > b) continue;
    out.emplace_back(a, b);
  }
  return out;
}

SurveyRecord analyze_embedding(long r, long a, long b, bool fixedRuntime) {
  SurveyRecord rec;
  rec.r = r;
  rec.a = a;
  rec.b = b;
  rec.isolated = std::gcd(a, r) == 1 && std::gcd(b, r) == 1;
  auto start = std::chrono::steady_clock::now();
  try {
    GroupSpec spec;
    spec.generators.push_back(Generator{r, {1 % r, a % r, b % r}});
    LatticeContext ctx = build_lattice_context(spec);
    if (ctx.r != r) throw ConsistencyError("sweep: embedding does not generate Z/r");
    Fan fan = build_fan(ctx);
    FanStatistics st = fan_statistics(fan);
    rec.juniorCount = static_cast<long>(fan.points.size());
    rec.triangleCount = st.triangleCount;
    rec.interiorEdgeCount = st.interiorEdgeCount;
    rec.boundaryEdgeCount = st.boundaryEdgeCount;
    KTheoryContext kt(ctx, fan);
    B0Report rep = classify_all(kt);
    rec.h0Size = static_cast<long>(rep.h0.size());
    rec.b0 = rep.b0;
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.failureReason = e.what();
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  rec.runtimeMs =
      fixedRuntime ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return rec;
}

std::vector<SurveyRecord> sweep(const SweepOptions& options) {
  if (options.rMin < 2 || options.rMin > options.rMax)
    throw ParseError("sweep: need 2 <= r-min <= r-max");
  struct Task {
    long r, a, b;
  };
  std::vector<Task> tasks;
  for (long r = options.rMin; r <= options.rMax; ++r) {
    for (auto [a, b] : enumerate_embeddings(r, options.dedupeSymmetry)) {
      if (options.isolatedOnly && (std::gcd(a, r) != 1 || std::gcd(b, r) != 1)) continue;
      tasks.push_back({r, a, b});
    }
  }
  std::vector<SurveyRecord> records(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex hookMutex;
  int jobs = std::max(1, options.jobs);
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      records[i] = analyze_embedding(tasks[i].r, tasks[i].a, tasks[i].b, options.fixedRuntime);
      if (options.onRecord) {
        std::lock_guard<std::mutex> lock(hookMutex);
        options.onRecord(records[i]);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

SweepAggregate aggregate(const std::vector<SurveyRecord>& records) {
  SweepAggregate agg;
  std::vector<std::pair<Rat, long>>& hist = agg.histogram;
  for (const auto& rec : records) {
    if (rec.failed) {
      ++agg.failures;
      continue;
    }
    if (!agg.any) {
      agg.min = agg.max = rec.b0;
      agg.any = true;
    } else {
      if (rec.b0 < agg.min) agg.min = rec.b0;
      if (rec.b0 > agg.max) agg.max = rec.b0;
    }
    auto it = std::find_if(hist.begin(), hist.end(),
                           [&](const auto& p) { return p.first == rec.b0; });
    if (it == hist.end())
      hist.emplace_back(rec.b0, 1);
    else
      ++it->second;
    if (rec.b0 < Rat(1, 4) || rec.b0 > 1) agg.boundViolations.push_back(rec);
  }
  std::sort(hist.begin(), hist.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return agg;
}

std::string csv_header() {
  return "r,a,b,junior_points,triangles,interior_edges,boundary_edges,h0_size,b0_num,b0_den,"
         "isolated_flag,runtime_ms";
}

std::string csv_line(const SurveyRecord& rec) {
  std::string out;
  out += std::to_string(rec.r) + "," + std::to_string(rec.a) + "," + std::to_string(rec.b) + ",";
  out += std::to_string(rec.juniorCount) + "," + std::to_string(rec.triangleCount) + ",";
  out += std::to_string(rec.interiorEdgeCount) + "," + std::to_string(rec.boundaryEdgeCount) + ",";
  out += std::to_string(rec.h0Size) + ",";
  out += rec.b0.get_num().get_str() + "," + rec.b0.get_den().get_str() + ",";
  out += std::string(rec.isolated ? "1" : "0") + "," + std::to_string(rec.runtimeMs);
  return out;
}

}  // namespace ghilb
