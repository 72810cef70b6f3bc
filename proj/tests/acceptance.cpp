// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "generators.hpp"
#include "reqlex/cli.hpp"
#include "reqlex/report.hpp"

using namespace reqlex;
namespace fs = std::filesystem;

namespace {

const std::string kRoot = REQLEX_SOURCE_DIR;
const std::string kManifests = kRoot + "/corpus/manifests";
const std::string kSources = kRoot + "/corpus/sources";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Collects failed checks for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    expect(std::abs(got - want) <= tol, fmt::format("{} = {} (want {} +/- {})", what, got, want, tol));
  }
};

using Clock = std::chrono::steady_clock;

int failed = 0;

void criterion(int id, const std::string& title, double budget_s,
               const std::function<void(Checker&)>& body) {
  Checker c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0) {
    c.expect(elapsed < budget_s, fmt::format("runtime {:.3f} s over {} s", elapsed, budget_s));
  }
  const bool ok = c.failures.empty();
  failed += ok ? 0 : 1;
  std::cout << fmt::format("{} {}: {} ({:.3f} s)", ok ? "PASS" : "FAIL", id, title, elapsed);
  for (const auto& f : c.failures) std::cout << "\n    " << f;
  std::cout << std::endl;
}

void factorial_rbc(Checker& c) {
  const auto m = srs::parse_manifest(read_file(kManifests + "/factorial.json"));
  const auto b = rbc::compute_rbc(m);
  c.near(b.rbc, 9.36, 1e-9, "rbc");
  c.expect(b.ioc == 4, "ioc");
  c.expect(b.fr == 2, "fr");
  c.expect(b.rc == 2, "rc");
  c.expect(b.pc == 8, "pc");
  c.near(b.pca, 1.17, 1e-12, "pca");
  c.expect(b.dci == 0, "dci");
  c.expect(b.ifc == 0, "ifc");
  c.expect(b.sfc == 0, "sfc");
  c.expect(b.ulc == 1, "ulc");
  c.expect(report::emit_rbc(m.name, b, {}, report::Format::Human).find("RBC: 9.36") !=
               std::string::npos,
           "display");
}

void factorial_graph(Checker& c) {
  const auto& d = code::c_dialect();
  const std::string src = read_file(kSources + "/factorial.c");
  const auto ts = code::tokenize(src, d);
  const auto program = code::parse_program(ts, d);
  const auto g = classic::build_cfg(program);
  c.expect(classic::cyclomatic_graph(g) == 3, fmt::format("v(G) graph = {}", classic::cyclomatic_graph(g)));
  c.expect(classic::cyclomatic_decisions(ts, program) == 3, "v(G) decisions");
  c.expect(classic::region_count(g) == 3, "regions");
  c.expect(g.predicate_nodes() == 2, "predicate nodes");
  c.expect(ts.loc == 19, fmt::format("loc = {}", ts.loc));
}

void halstead(Checker& c) {
  const auto m = classic::halstead_metrics({18, 4, 35, 10});
  c.expect(m.vocabulary == 22, "n");
  c.expect(m.length == 45, "N");
  c.expect(m.difficulty == 22.5, "D");
  c.near(m.time_minutes, m.effort_dv / (18 * 60), 1e-9, "T identity");
  c.near(classic::halstead_time_minutes(5154), 4.78, 0.02, "T(5154)");
}

void cognitive_layer(Checker& c) {
  const auto a = report::analyze_source(read_file(kSources + "/factorial.c"), code::c_dialect(),
                                        "factorial", cognitive::BcsMode::Paper,
                                        report::IoCounts{1, 1});
  c.expect(a.wc == 3, fmt::format("Wc = {}", a.wc));
  c.expect(a.sbcs == 3, fmt::format("SBCS = {}", a.sbcs));
  c.expect(a.cfs == 6, fmt::format("CFS = {}", a.cfs));
  c.expect(a.klcid && std::abs(*a.klcid - 1.4) < 1e-12, "KLCID");
  c.near(cognitive::cicm(5.33, 3), 16.01, 0.05, "CICM(5.33, 3)");
}

void trend(Checker& c) {
  std::ostringstream out, err;
  const int code = cli::run({"compare", kManifests, kSources, "--format", "csv"}, out, err);
  c.expect(code == 0, fmt::format("compare exit {}: {}", code, err.str()));
  if (code != 0) return;
  const auto records = report::parse_csv(out.str());
  c.expect(records.size() >= 10, fmt::format("{} pairs", records.size()));
  double lo = 1e300, hi = 0;
  for (const auto& r : records) {
    lo = std::min(lo, r.rbc.rbc);
    hi = std::max(hi, r.rbc.rbc);
  }
  c.expect(lo > 0 && hi / lo >= 5, fmt::format("RBC range {} .. {}", lo, hi));
  const auto t = report::compute_trend(records);
  for (const char* metric : {"halstead_D", "vG", "cfs", "cicm"}) {
    const auto* m = t.find(metric);
    c.expect(m && m->rho && *m->rho > 0,
             fmt::format("rho(RBC, {}) = {}", metric, m && m->rho ? *m->rho : std::nan("")));
  }
}

// Each property runs kPropertyCases randomized cases.
void properties(Checker& c) {
  const int n = testing::kPropertyCases;
  c.expect(n >= 100, "case count");
  testing::Gen gen(2024);
  int bad = 0;

  for (int i = 0; i < n; ++i) {
    auto m = gen.manifest();
    const double base = rbc::compute_rbc(m).rbc;
    const auto k = static_cast<srs::Count>(gen.range(2, 5));
    m.locations *= k;
    bad += std::abs(rbc::compute_rbc(m).rbc - base * static_cast<double>(k)) >
           1e-9 * std::max(1.0, base * static_cast<double>(k));
  }
  c.expect(bad == 0, fmt::format("ULC linearity: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    auto m = gen.manifest();
    const double base = rbc::compute_rbc(m).rbc;
    srs::Count* fields[] = {&m.inputs, &m.outputs, &m.interfaces, &m.files};
    *fields[gen.range(0, 3)] += static_cast<srs::Count>(gen.range(1, 3));
    bad += rbc::compute_rbc(m).rbc < base;
  }
  c.expect(bad == 0, fmt::format("I/O monotonicity: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    const auto b = rbc::compute_rbc(gen.manifest());
    bad += rbc::compose_rbc(b.pc, b.pca, b.dci, b.ifc, b.sfc, b.ulc) != b.rbc;
    bad += ((b.pc * b.pca) + b.dci + b.ifc + b.sfc) * b.ulc != b.rbc;
  }
  c.expect(bad == 0, fmt::format("breakdown recomposition: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    const std::string src = gen.c_program();
    bad += code::tokenize(src, code::c_dialect()).reconstruct() != src;
  }
  c.expect(bad == 0, fmt::format("tokenizer round-trip: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    const auto lines = cognitive::line_infos(code::tokenize(gen.c_program(), code::c_dialect()),
                                             code::c_dialect());
    const auto once = cognitive::unique_lines(lines);
    bad += cognitive::unique_lines(once) != once;
  }
  c.expect(bad == 0, fmt::format("unique_lines idempotence: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    const auto t = gen.flat_bcs_tree();
    bad += cognitive::cognitive_weight(t) != cognitive::sbcs(t);
  }
  c.expect(bad == 0, fmt::format("flat tree Wc = SBCS: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> xs, ys, lin, cube;
    for (int k = gen.range(3, 25); k > 0; --k) {
      xs.push_back(gen.real(0.5, 40));
      ys.push_back(gen.range(0, 6));
    }
    xs[0] = 0.25;
    ys[0] = -1;
    for (double x : xs) {
      lin.push_back(2 * x + 7);
      cube.push_back(x * x * x);
    }
    const double rho = report::spearman(xs, ys);
    bad += std::abs(report::spearman(lin, ys) - rho) > 1e-12;
    bad += std::abs(report::spearman(cube, ys) - rho) > 1e-12;
  }
  c.expect(bad == 0, fmt::format("spearman monotone invariance: {} failures", bad));

  bad = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> xs;
    for (int k = gen.range(2, 25); k > 0; --k) xs.push_back(gen.real(-10, 10));
    xs[0] = 11;
    bad += std::abs(report::spearman(xs, xs) - 1.0) > 1e-12;
  }
  c.expect(bad == 0, fmt::format("spearman(xs, xs) = 1: {} failures", bad));
}

void golden_round_trip(Checker& c) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kManifests)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    const auto first = srs::parse_manifest(read_file(entry.path().string()));
    const auto second = srs::parse_manifest(srs::serialize_manifest(first));
    c.expect(first == second, entry.path().filename().string());
  }
  c.expect(count >= 10, fmt::format("{} manifests", count));
}

}  // namespace

int main() {
  criterion(1, "factorial manifest gives RBC 9.36 with its breakdown", 1.0, factorial_rbc);
  criterion(2, "factorial source: v(G) 3 by both forms, 3 regions, 2 predicates, LOC 19", 1.0,
            factorial_graph);
  criterion(3, "Halstead layer on injected counts", 0, halstead);
  criterion(4, "cognitive layer on the factorial source, paper mode", 0, cognitive_layer);
  criterion(5, "positive rank correlation on the bundled corpus", 10.0, trend);
  criterion(6, "property suites", 0, properties);
  criterion(7, "bundled manifests survive parse/serialize/parse", 0, golden_round_trip);
  std::cout << (failed == 0 ? "all criteria passed" : fmt::format("{} criteria failed", failed))
            << std::endl;
  return failed;
}
