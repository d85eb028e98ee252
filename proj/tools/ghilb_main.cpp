// ghilb: exact G-Hilbert scheme triangulations and homological degree
// statistics for finite abelian subgroups of SL3(C).
//
// Exit codes: 0 success, 1 usage or input error, 2 invariant failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "ghilb/errors.hpp"
#include "ghilb/render.hpp"
#include "ghilb/report.hpp"
#include "ghilb/survey.hpp"
#include "ghilb/verify.hpp"

namespace {

using namespace ghilb;

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << bytes;
}

int cmd_analyze(const std::string& groupText, const std::string& jsonPath,
                const std::string& svgPath, const std::string& tikzPath, bool degrees,
                const std::string& annotate) {
  GroupSpec spec = parse_group_spec(groupText);
  AnnotationMode mode = annotation_mode_from_string(annotate);
  bool needDegrees = degrees || mode != AnnotationMode::none;
  Analysis a = run_analysis(spec, needDegrees);
  if (!degrees) {
    for (auto& w : a.report.walls) w.degrees.clear();
  }

  const AnalysisReport& rep = a.report;
  std::cout << "group:            " << rep.group << "\n";
  std::cout << "r:                " << rep.r << "\n";
  std::cout << "junior points:    " << rep.juniorPoints.size() << "\n";
  std::cout << "triangles:        " << rep.triangles.size() << "\n";
  std::cout << "interior edges:   " << rep.walls.size() << "\n";
  std::cout << "boundary edges:   " << rep.boundaryEdgeCount << "\n";
  std::cout << "interior vertices:" << rep.interiorVertexCount << "\n";
  std::cout << "h0 characters:    ";
  for (size_t i = 0; i < rep.h0.size(); ++i) std::cout << (i ? " " : "") << rep.h0[i];
  std::cout << "\n";
  std::cout << "b0:               " << rep.b0.num << "/" << rep.b0.den << "\n";
  for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";

  if (!jsonPath.empty()) write_file(jsonPath, report_to_json(rep));
  if (!svgPath.empty() || !tikzPath.empty()) {
    Layout layout = make_layout(*a.fan);
    if (!svgPath.empty())
      write_file(svgPath,
                 emit_svg(*a.fan, layout, mode, a.ktheory.get(), a.classification.get()));
    if (!tikzPath.empty())
      write_file(tikzPath,
                 emit_tikz(*a.fan, layout, mode, a.ktheory.get(), a.classification.get()));
  }
  return 0;
}

int cmd_sweep(long rMin, long rMax, bool dedupe, bool isolatedOnly, const std::string& csvPath,
              int jobs, bool fixedRuntime) {
  std::ofstream csv(csvPath, std::ios::binary);
  if (!csv) throw ParseError("cannot open output file: " + csvPath);
  csv << csv_header() << "\n";
  csv.flush();

  SweepOptions opt;
  opt.rMin = rMin;
  opt.rMax = rMax;
  opt.dedupeSymmetry = dedupe;
  opt.isolatedOnly = isolatedOnly;
  opt.jobs = jobs;
  opt.fixedRuntime = fixedRuntime;
  opt.onRecord = [&](const SurveyRecord& rec) {
    if (rec.failed) {
      std::cerr << "record 1/" << rec.r << "(1," << rec.a << "," << rec.b
                << ") failed: " << rec.failureReason << "\n";
      return;
    }
    csv << csv_line(rec) << "\n";  // crash-safe streaming append
    csv.flush();
  };
  std::vector<SurveyRecord> records = sweep(opt);

  // integrity pass: rewrite in deterministic task order
  csv.close();
  std::ofstream final_csv(csvPath, std::ios::binary | std::ios::trunc);
  final_csv << csv_header() << "\n";
  for (const auto& rec : records)
    if (!rec.failed) final_csv << csv_line(rec) << "\n";
  final_csv.close();

  SweepAggregate agg = aggregate(records);
  std::cout << "records:    " << records.size() << "\n";
  std::cout << "failures:   " << agg.failures << "\n";
  if (agg.any) {
    std::cout << "b0 min:     " << rat_str(agg.min) << "\n";
    std::cout << "b0 max:     " << rat_str(agg.max) << "\n";
    std::cout << "histogram:  ";
    for (size_t i = 0; i < agg.histogram.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << rat_str(agg.histogram[i].first) << " x" << agg.histogram[i].second;
    }
    std::cout << "\n";
  }
  std::cout << "bound violations: " << agg.boundViolations.size() << "\n";
  for (const auto& rec : agg.boundViolations)
    std::cout << "  1/" << rec.r << "(1," << rec.a << "," << rec.b << "): b0 = " << rat_str(rec.b0)
              << (rec.isolated ? " (isolated!)" : " (non-isolated)") << "\n";
  return 0;
}

int cmd_verify(const std::string& groupText, int samples, unsigned long seed, long rCap) {
  GroupSpec spec = parse_group_spec(groupText);
  OracleConfig cfg;
  cfg.sampleCount = samples;
  cfg.seed = seed;
  cfg.rCap = rCap;
  VerifyResult res = run_verification(spec, cfg);
  for (const auto& c : res.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  return res.allPassed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G-Hilb triangulations and BKR degree statistics"};
  app.set_version_flag("--version", GHILB_VERSION_STRING);
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one group");
  std::string groupText, jsonPath, svgPath, tikzPath, annotate = "none";
  bool degrees = false;
  analyze->add_option("--group", groupText, "group spec, e.g. \"1/5(1,1,3)\"")->required();
  analyze->add_option("--json", jsonPath, "write the analysis report as JSON");
  analyze->add_option("--svg", svgPath, "write an SVG drawing of the triangulation");
  analyze->add_option("--tikz", tikzPath, "write a TikZ drawing of the triangulation");
  analyze->add_flag("--degrees", degrees, "include the per-wall character degree table");
  analyze->add_option("--annotate", annotate, "drawing annotations: none|wall-degrees|h0-classes");

  auto* sweepCmd = app.add_subcommand("sweep", "sweep the embeddings 1/r(1,a,b), a+b = r-1");
  long rMin = 3, rMax = 8, rCap = 15;
  bool dedupe = false, isolatedOnly = false, fixedRuntime = false;
  int jobs = 1, samples = 1000;
  unsigned long seed = 1;
  std::string csvPath;
  sweepCmd->add_option("--r-min", rMin, "smallest group order")->required();
  sweepCmd->add_option("--r-max", rMax, "largest group order")->required();
  sweepCmd->add_flag("--dedupe-symmetry", dedupe, "keep only a <= b");
  sweepCmd->add_flag("--isolated-only", isolatedOnly, "only isolated singularities");
  sweepCmd->add_option("--csv", csvPath, "output CSV path")->required();
  sweepCmd->add_option("--jobs", jobs, "worker threads");
  sweepCmd->add_flag("--fixed-runtime", fixedRuntime,
                     "write runtime_ms as 0 for byte-reproducible output");

  auto* verifyCmd = app.add_subcommand("verify", "run the invariant suite on one group");
  verifyCmd->add_option("--group", groupText, "group spec")->required();
  verifyCmd->add_option("--samples", samples, "sampling oracle size");
  verifyCmd->add_option("--seed", seed, "sampling oracle seed");
  verifyCmd->add_option("--r-cap", rCap, "brute-force oracle order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(groupText, jsonPath, svgPath, tikzPath, degrees, annotate);
    if (app.got_subcommand(sweepCmd))
      return cmd_sweep(rMin, rMax, dedupe, isolatedOnly, csvPath, jobs, fixedRuntime);
    if (app.got_subcommand(verifyCmd)) return cmd_verify(groupText, samples, seed, rCap);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
