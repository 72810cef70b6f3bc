#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "reqlex/error.hpp"
#include "reqlex/report.hpp"

using namespace reqlex;
using namespace reqlex::report;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Brute-force oracle: ranks by counting smaller and equal values, Pearson on
// the ranks.
double spearman_oracle(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double less = 0, equal = 0;
      for (double w : v) {
        less += w < v[i];
        equal += w == v[i];
      }
      r[i] = less + (equal + 1) / 2;
    }
    return r;
  };
  const auto rx = ranks(xs), ry = ranks(ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) mx += rx[i] / n, my += ry[i] / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

MetricsRecord record(std::string name, double rbc, double d) {
  MetricsRecord r;
  r.name = std::move(name);
  r.rbc.rbc = rbc;
  r.halstead_d = d;
  r.halstead_e = d * 10;
  r.v_g = static_cast<long>(d);
  r.cfs = d + 1;
  r.cicm = d * 2;
  r.klcid = d / 3;
  return r;
}

ManifestResult manifest_result(std::string name) {
  ManifestResult m;
  m.name = name;
  m.manifest.name = name;
  m.manifest.inputs = 1;
  m.manifest.outputs = 1;
  m.breakdown = rbc::compute_rbc(m.manifest);
  return m;
}

CodeAnalysis code_result(std::string name) {
  CodeAnalysis c;
  c.name = std::move(name);
  c.wc = 3;
  return c;
}

}  // namespace

TEST_CASE("join_records") {
  SUBCASE("all matching") {
    std::vector<ManifestResult> ms;
    std::vector<CodeAnalysis> cs;
    for (int i = 0; i < 16; ++i) {
      ms.push_back(manifest_result("p" + std::to_string(i)));
      cs.push_back(code_result("p" + std::to_string(15 - i)));
    }
    const auto j = join_records(ms, cs);
    CHECK(j.records.size() == 16);
    CHECK(j.warnings.empty());
    CHECK(std::is_sorted(j.records.begin(), j.records.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
    CHECK(j.records[0].cfs == 6);
  }
  SUBCASE("disjoint") {
    const auto j = join_records({manifest_result("a")}, {code_result("b")});
    CHECK(j.records.empty());
    CHECK(j.warnings.size() == 2);
  }
  SUBCASE("partial") {
    const auto j = join_records({manifest_result("a"), manifest_result("b"), manifest_result("c")},
                                {code_result("a"), code_result("c")});
    CHECK(j.records.size() == 2);
    CHECK(j.warnings.size() == 1);
  }
  SUBCASE("duplicates") {
    CHECK_THROWS_AS(join_records({manifest_result("a"), manifest_result("a")}, {}), Error);
    CHECK_THROWS_AS(join_records({}, {code_result("a"), code_result("a")}), Error);
  }
}

TEST_CASE("spearman") {
  const std::vector<double> a{1, 2, 3, 4}, b{1, 3, 2, 4}, r{4, 3, 2, 1};
  CHECK(spearman(a, a) == doctest::Approx(1.0));
  CHECK(spearman(a, r) == doctest::Approx(-1.0));
  CHECK(spearman(a, b) == doctest::Approx(0.8));
  CHECK(spearman(a, b) == doctest::Approx(1 - 6.0 * 2 / (4 * 15)));
  // ties
  const std::vector<double> t{1, 2, 2, 3}, u{1, 2, 3, 4};
  CHECK(spearman(t, u) == doctest::Approx(spearman_oracle(t, u)).epsilon(1e-12));

  const std::vector<double> three{1, 2, 3}, one{1};
  CHECK_THROWS_AS(spearman(a, three), Error);
  CHECK_THROWS_AS(spearman(one, one), Error);
  const std::vector<double> flat{2, 2, 2, 2};
  CHECK_THROWS_AS(spearman(flat, a), Error);
}

TEST_CASE("property: spearman agrees with a brute-force oracle") {
  testing::Gen gen(51);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const int n = gen.range(3, 25);
    std::vector<double> xs, ys;
    for (int k = 0; k < n; ++k) {
      xs.push_back(gen.range(0, 8));  // small range, many ties
      ys.push_back(gen.real(-5, 5));
    }
    xs[0] = -1;  // never constant
    const double rho = spearman(xs, ys);
    CHECK(rho == doctest::Approx(spearman_oracle(xs, ys)).epsilon(1e-9));
    CHECK(rho >= -1.0 - 1e-12);
    CHECK(rho <= 1.0 + 1e-12);
  }
}

TEST_CASE("property: spearman(xs, xs) is 1") {
  testing::Gen gen(52);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    std::vector<double> xs;
    for (int k = gen.range(2, 30); k > 0; --k) xs.push_back(gen.real(-100, 100));
    xs[0] = 1000;  // at least two distinct values
    CHECK(spearman(xs, xs) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: spearman is invariant under strictly monotone transforms") {
  testing::Gen gen(53);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    std::vector<double> xs, ys, lin, cube;
    for (int k = gen.range(2, 30); k > 0; --k) {
      xs.push_back(gen.real(0.1, 50));
      ys.push_back(gen.range(1, 10));
    }
    xs[0] = 0.05;
    ys[0] = 0;
    for (double x : xs) {
      lin.push_back(2 * x + 7);
      cube.push_back(x * x * x);
    }
    const double rho = spearman(xs, ys);
    CHECK(spearman(lin, ys) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(spearman(cube, ys) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(spearman(ys, lin) == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("compute_trend") {
  std::vector<MetricsRecord> rs{record("a", 1, 1), record("b", 2, 3), record("c", 3, 2)};
  rs[1].klcid.reset();
  const auto t = compute_trend(rs);
  CHECK(t.corpus == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.find("halstead_D"));
  CHECK(t.find("halstead_D")->n == 3);
  CHECK(*t.find("halstead_D")->rho == doctest::Approx(0.5));
  CHECK(t.find("klcid")->n == 2);
  CHECK(*t.find("klcid")->rho == doctest::Approx(1.0));
  CHECK(t.find("nope") == nullptr);

  rs.pop_back();
  rs[1].klcid.reset();
  CHECK_FALSE(compute_trend(rs).find("klcid")->rho.has_value());
}

TEST_CASE("emit") {
  SUBCASE("one record, csv") {
    const std::string doc = emit({record("x", 1, 2)}, nullptr, Format::Csv);
    CHECK(std::count(doc.begin(), doc.end(), '\n') == 2);
    CHECK(doc.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  }
  SUBCASE("factorial figures appear in the row") {
    auto r = record("factorial", 9.36, 22.5);
    const std::string doc = emit({r}, nullptr, Format::Csv);
    CHECK(doc.find("9.36") != std::string::npos);
    CHECK(doc.find("22.5") != std::string::npos);
  }
  SUBCASE("rows sorted by name") {
    const std::string doc =
        emit({record("c", 1, 1), record("a", 2, 2), record("b", 3, 3)}, nullptr, Format::Csv);
    CHECK(doc.find("\na,") < doc.find("\nb,"));
    CHECK(doc.find("\nb,") < doc.find("\nc,"));
  }
  SUBCASE("trend block") {
    const std::vector<MetricsRecord> rs{record("a", 1, 1), record("b", 2, 3)};
    const auto trend = compute_trend(rs);
    const std::string doc = emit(rs, &trend, Format::Csv);
    CHECK(doc.find("\n\nmetric,rho,n\n") != std::string::npos);
    const std::string json = emit(rs, &trend, Format::Json);
    CHECK(json.find("rho_by_metric") != std::string::npos);
    CHECK(emit(rs, &trend, Format::Human).find("halstead_D") != std::string::npos);
  }
  SUBCASE("formats") {
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("human") == Format::Human);
    CHECK_THROWS_AS(parse_format("xml"), Error);
  }
}

TEST_CASE("csv and json parse back") {
  CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nx,1,2\n"), SyntaxError);

  testing::Gen gen(54);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    std::vector<MetricsRecord> rs;
    for (int k = gen.range(1, 6); k > 0; --k) {
      auto m = gen.manifest();
      m.name = "p" + std::to_string(k) + (gen.chance(0.2) ? ",\"q\"" : "");
      MetricsRecord r;
      r.name = m.name;
      r.rbc = rbc::compute_rbc(m);
      r.halstead_d = gen.real(0, 50);
      r.halstead_e = gen.real(0, 1e5);
      r.v_g = gen.range(1, 30);
      if (gen.chance(0.7)) r.klcid = gen.real(0, 4);
      r.cfs = gen.range(0, 200);
      r.cicm = gen.real(0, 500);
      rs.push_back(r);
    }
    std::sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    const auto trend_src = rs.size() >= 2 ? compute_trend(rs) : TrendReport{};
    const auto from_csv = parse_csv(emit(rs, rs.size() >= 2 ? &trend_src : nullptr, Format::Csv));
    CHECK(from_csv == rs);
    CHECK(parse_json(emit(from_csv, nullptr, Format::Json)) == rs);
  }
}

TEST_CASE("analyze_source on the factorial program") {
  const std::string src = read_file(REQLEX_SOURCE_DIR "/corpus/sources/factorial.c");
  const auto a = analyze_source(src, code::c_dialect(), "factorial", cognitive::BcsMode::Paper,
                                IoCounts{1, 1});
  CHECK(a.loc == 19);
  CHECK(a.vg_graph == 3);
  CHECK(a.vg_decisions == 3);
  CHECK(a.regions == 3);
  CHECK(a.predicate_nodes == 2);
  CHECK(*a.klcid == doctest::Approx(1.4));
  CHECK(a.wc == 3);
  CHECK(a.sbcs == 3);
  CHECK(a.cfs == 6);
  CHECK(a.cicm == doctest::Approx(a.wics * 3));
  CHECK(a.alt_wc == 9);

  const auto no_io = analyze_source(src, code::c_dialect(), "factorial", cognitive::BcsMode::Paper);
  CHECK(no_io.cfs == 0);
  const auto annotated = analyze_source("/* reqlex: inputs=2 outputs=1 */\nint main() { return 0; }",
                                        code::c_dialect(), "m", cognitive::BcsMode::Paper);
  CHECK(annotated.n_inputs == 2);
  CHECK(annotated.cfs == 3);
  CHECK(emit_code(a, Format::Json).find("\"klcid\"") != std::string::npos);
}

TEST_CASE("emit_rbc") {
  srs::SrsManifest m;
  m.name = "factorial";
  m.inputs = m.outputs = m.interfaces = m.files = 1;
  m.functions = {{"factorial", 2}};
  m.personnel = {{srs::CostAttribute::ProgrammerCapability, srs::Rating::Low}};
  const auto b = rbc::compute_rbc(m);
  CHECK(emit_rbc("factorial", b, {}, Format::Human).find("RBC: 9.36") != std::string::npos);
  CHECK(emit_rbc("factorial", b, {}, Format::Csv).find("9.36") != std::string::npos);
  CHECK(emit_rbc("factorial", b, {}, Format::Json).find("\"rbc\"") != std::string::npos);
}
