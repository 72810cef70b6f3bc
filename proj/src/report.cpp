#include "reqlex/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "reqlex/error.hpp"

namespace reqlex::report {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kTrendMetrics{"halstead_D", "halstead_E", "vG",
                                                        "klcid",      "cfs",        "cicm"};

std::optional<double> metric_value(const MetricsRecord& r, std::string_view metric) {
  if (metric == "halstead_D") return r.halstead_d;
  if (metric == "halstead_E") return r.halstead_e;
  if (metric == "vG") return static_cast<double>(r.v_g);
  if (metric == "klcid") return r.klcid;
  if (metric == "cfs") return r.cfs;
  if (metric == "cicm") return r.cicm;
  return std::nullopt;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j share the mean of ranks i+1..j+1.
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::vector<MetricsRecord> sorted(std::vector<MetricsRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return records;
}

std::string num(double v) { return fmt::format("{}", v); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv_row(std::string_view row, std::size_t offset) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw SyntaxError("unterminated quoted CSV field", offset);
  return fields;
}

double parse_double(const std::string& text, std::size_t offset) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(fmt::format("'{}' is not a number", text), offset);
  }
}

std::vector<std::string> csv_row(const MetricsRecord& r) {
  const auto& b = r.rbc;
  return {csv_field(r.name), num(b.rbc),      num(b.ioc),          num(b.fr),
          num(b.nfr),        num(b.rc),       num(b.pc),           num(b.pca),
          num(b.dci),        num(b.ifc),      num(b.ulc),          num(b.sfc),
          num(r.halstead_d), num(r.halstead_e), fmt::format("{}", r.v_g),
          r.klcid ? num(*r.klcid) : std::string(), num(r.cfs), num(r.cicm)};
}

json record_json(const MetricsRecord& r) {
  const auto& b = r.rbc;
  json j = {{"name", r.name},       {"rbc", b.rbc},   {"ioc", b.ioc},
            {"fr", b.fr},           {"nfr", b.nfr},   {"rc", b.rc},
            {"pc", b.pc},           {"pca", b.pca},   {"dci", b.dci},
            {"ifc", b.ifc},         {"ulc", b.ulc},   {"sfc", b.sfc},
            {"halstead_D", r.halstead_d}, {"halstead_E", r.halstead_e},
            {"vG", r.v_g},          {"cfs", r.cfs},   {"cicm", r.cicm}};
  j["klcid"] = r.klcid ? json(*r.klcid) : json(nullptr);
  return j;
}

json trend_json(const TrendReport& t) {
  json rho = json::object();
  json n = json::object();
  for (const auto& m : t.by_metric) {
    rho[m.metric] = m.rho ? json(*m.rho) : json(nullptr);
    n[m.metric] = m.n;
  }
  return {{"rho_by_metric", rho}, {"n_by_metric", n}, {"corpus", t.corpus}};
}

std::string fixed2(double v) { return fmt::format("{:.2f}", v); }

std::string human_records(const std::vector<MetricsRecord>& records, const TrendReport* trend) {
  std::string out = fmt::format("{:<20} {:>12} {:>10} {:>12} {:>5} {:>7} {:>10} {:>10}\n",
                                "program", "RBC", "D", "E", "v(G)", "KLCID", "CFS", "CICM");
  for (const auto& r : records) {
    out += fmt::format("{:<20} {:>12} {:>10} {:>12} {:>5} {:>7} {:>10} {:>10}\n", r.name,
                       fixed2(r.rbc.rbc), fixed2(r.halstead_d), fixed2(r.halstead_e), r.v_g,
                       r.klcid ? fixed2(*r.klcid) : "-", fixed2(r.cfs), fixed2(r.cicm));
  }
  if (trend != nullptr) {
    out += fmt::format("\nSpearman rank correlation with RBC ({} programs)\n",
                       trend->corpus.size());
    for (const auto& m : trend->by_metric) {
      out += fmt::format("  {:<12} rho = {:>6}  (n = {})\n", m.metric,
                         m.rho ? fmt::format("{:.3f}", *m.rho) : "n/a", m.n);
    }
  }
  return out;
}

}  // namespace

std::optional<IoCounts> io_annotation(const code::TokenStream& ts) {
  static const std::regex pattern(R"(reqlex:\s*inputs\s*=\s*(\d+)\s+outputs\s*=\s*(\d+))");
  for (const auto& t : ts.tokens) {
    if (t.klass != code::TokenClass::Comment) continue;
    std::smatch m;
    if (std::regex_search(t.text, m, pattern)) {
      return IoCounts{std::stoul(m[1].str()), std::stoul(m[2].str())};
    }
  }
  return std::nullopt;
}

CodeAnalysis analyze_source(std::string_view source, const code::Dialect& d, std::string name,
                            cognitive::BcsMode mode, std::optional<IoCounts> io) {
  CodeAnalysis a;
  a.name = std::move(name);
  a.dialect = d.name;
  const auto ts = code::tokenize(source, d, a.name);
  const auto program = code::parse_program(ts, d);

  a.counts = classic::halstead_counts(ts, d);
  a.halstead = classic::halstead_metrics(a.counts);
  const auto g = classic::build_cfg(program);
  a.nodes = g.node_count();
  a.edges = g.edge_count();
  a.components = g.components();
  a.predicate_nodes = g.predicate_nodes();
  a.vg_graph = classic::cyclomatic_graph(g);
  a.vg_decisions = classic::cyclomatic_decisions(ts, program);
  a.regions = classic::region_count(g);

  const auto lines = cognitive::line_infos(ts, d);
  a.loc = ts.loc;
  a.id_count = cognitive::identifier_occurrences(ts);
  a.id_distinct = cognitive::distinct_identifiers(ts);
  a.klcid = cognitive::klcid(lines);
  std::vector<cognitive::LineInfo> statements;
  for (const auto& l : lines) {
    if (!l.declaration) statements.push_back(l);
  }
  a.unique_lines = cognitive::unique_lines(statements).size();

  const IoCounts counts = io ? *io : io_annotation(ts).value_or(IoCounts{});
  a.n_inputs = counts.inputs;
  a.n_outputs = counts.outputs;
  a.mode = mode;
  const auto tree = cognitive::build_bcs_tree(program, mode);
  a.wc = cognitive::cognitive_weight(tree);
  a.sbcs = cognitive::sbcs(tree);
  a.cfs = cognitive::cfs(a.n_inputs, a.n_outputs, a.wc);
  const auto other = mode == cognitive::BcsMode::Paper ? cognitive::BcsMode::Default
                                                       : cognitive::BcsMode::Paper;
  const auto alt_tree = cognitive::build_bcs_tree(program, other);
  a.alt_wc = cognitive::cognitive_weight(alt_tree);
  a.alt_sbcs = cognitive::sbcs(alt_tree);
  a.alt_cfs = cognitive::cfs(a.n_inputs, a.n_outputs, a.alt_wc);

  if (a.loc > 0) {
    a.id_density = cognitive::identifier_density(ts);
    a.wics = cognitive::wics(lines);
    std::size_t ics_total = 0;
    for (const auto& l : lines) ics_total += l.ics();
    a.ei = cognitive::coding_efficiency(ics_total, a.loc);
  }
  a.cicm = cognitive::cicm(a.wics, a.sbcs);
  a.alt_cicm = cognitive::cicm(a.wics, a.alt_sbcs);
  return a;
}

JoinResult join_records(const std::vector<ManifestResult>& manifest_results,
                        const std::vector<CodeAnalysis>& code_results) {
  std::map<std::string, const ManifestResult*> manifests;
  for (const auto& m : manifest_results) {
    if (!manifests.emplace(m.name, &m).second) {
      throw Error(fmt::format("duplicate manifest name '{}'", m.name));
    }
  }
  std::map<std::string, const CodeAnalysis*> sources;
  for (const auto& c : code_results) {
    if (!sources.emplace(c.name, &c).second) {
      throw Error(fmt::format("duplicate source name '{}'", c.name));
    }
  }

  JoinResult out;
  for (const auto& [name, m] : manifests) {
    auto it = sources.find(name);
    if (it == sources.end()) {
      out.warnings.push_back(fmt::format("manifest '{}' has no matching source", name));
      continue;
    }
    const CodeAnalysis& c = *it->second;
    MetricsRecord r;
    r.name = name;
    r.rbc = m->breakdown;
    r.halstead_d = c.halstead.difficulty;
    r.halstead_e = c.halstead.effort_dv;
    r.v_g = c.vg_graph;
    r.klcid = c.klcid;
    r.cfs = cognitive::cfs(m->manifest.inputs, m->manifest.outputs, c.wc);
    r.cicm = c.cicm;
    out.records.push_back(std::move(r));
  }
  for (const auto& [name, c] : sources) {
    if (!manifests.contains(name)) {
      out.warnings.push_back(fmt::format("source '{}' has no matching manifest", name));
    }
  }
  return out;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(fmt::format("spearman: length mismatch ({} vs {})", xs.size(), ys.size()));
  }
  if (xs.size() < 2) throw Error("spearman: at least two pairs are required");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double n = static_cast<double>(xs.size());
  const double mean = (n + 1) / 2;  // ranks always average to this
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0 || syy == 0) throw Error("spearman: undefined for a constant sequence");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

const MetricTrend* TrendReport::find(std::string_view metric) const {
  for (const auto& m : by_metric) {
    if (m.metric == metric) return &m;
  }
  return nullptr;
}

std::span<const std::string_view> trend_metrics() { return kTrendMetrics; }

TrendReport compute_trend(const std::vector<MetricsRecord>& records) {
  TrendReport t;
  for (const auto& r : sorted(records)) t.corpus.push_back(r.name);
  for (auto metric : kTrendMetrics) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : records) {
      if (auto v = metric_value(r, metric)) {
        xs.push_back(r.rbc.rbc);
        ys.push_back(*v);
      }
    }
    MetricTrend m{std::string(metric), std::nullopt, xs.size()};
    try {
      m.rho = spearman(xs, ys);
    } catch (const Error&) {
      // Too few or constant values; reported as n/a.
    }
    t.by_metric.push_back(std::move(m));
  }
  return t;
}

Format parse_format(std::string_view name) {
  if (name == "human") return Format::Human;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(fmt::format("unknown format '{}' (expected human, csv or json)", name));
}

std::string emit(const std::vector<MetricsRecord>& records, const TrendReport* trend,
                 Format format) {
  const auto rows = sorted(records);
  switch (format) {
    case Format::Csv: {
      std::string out = std::string(kCsvHeader) + "\n";
      for (const auto& r : rows) out += fmt::format("{}\n", fmt::join(csv_row(r), ","));
      if (trend != nullptr) {
        out += "\nmetric,rho,n\n";
        for (const auto& m : trend->by_metric) {
          out += fmt::format("{},{},{}\n", m.metric, m.rho ? num(*m.rho) : "", m.n);
        }
      }
      return out;
    }
    case Format::Json: {
      json doc = {{"records", json::array()}};
      for (const auto& r : rows) doc["records"].push_back(record_json(r));
      if (trend != nullptr) doc["trend"] = trend_json(*trend);
      return doc.dump(2) + "\n";
    }
    case Format::Human: return human_records(rows, trend);
  }
  return {};
}

std::vector<MetricsRecord> parse_csv(std::string_view text) {
  std::vector<MetricsRecord> out;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto row = text.substr(pos, end - pos);
    const std::size_t offset = pos;
    pos = end + 1;
    if (row.empty()) break;
    if (header) {
      if (row != kCsvHeader) throw SyntaxError("unexpected CSV header", offset);
      header = false;
      continue;
    }
    const auto f = split_csv_row(row, offset);
    if (f.size() != 18) {
      throw SyntaxError(fmt::format("expected 18 fields, found {}", f.size()), offset);
    }
    MetricsRecord r;
    r.name = f[0];
    auto& b = r.rbc;
    double* slots[] = {&b.rbc, &b.ioc, &b.fr,  &b.nfr, &b.rc,  &b.pc,
                       &b.pca, &b.dci, &b.ifc, &b.ulc, &b.sfc};
    for (std::size_t i = 0; i < std::size(slots); ++i) *slots[i] = parse_double(f[i + 1], offset);
    r.halstead_d = parse_double(f[12], offset);
    r.halstead_e = parse_double(f[13], offset);
    r.v_g = static_cast<long>(parse_double(f[14], offset));
    if (!f[15].empty()) r.klcid = parse_double(f[15], offset);
    r.cfs = parse_double(f[16], offset);
    r.cicm = parse_double(f[17], offset);
    out.push_back(std::move(r));
  }
  if (header) throw SyntaxError("missing CSV header", 0);
  return out;
}

std::vector<MetricsRecord> parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array()) {
    throw SchemaError("records", "expected an array of records");
  }
  std::vector<MetricsRecord> out;
  try {
    for (const auto& j : doc["records"]) {
      MetricsRecord r;
      r.name = j.at("name").get<std::string>();
      auto& b = r.rbc;
      b.rbc = j.at("rbc").get<double>();
      b.ioc = j.at("ioc").get<double>();
      b.fr = j.at("fr").get<double>();
      b.nfr = j.at("nfr").get<double>();
      b.rc = j.at("rc").get<double>();
      b.pc = j.at("pc").get<double>();
      b.pca = j.at("pca").get<double>();
      b.dci = j.at("dci").get<double>();
      b.ifc = j.at("ifc").get<double>();
      b.ulc = j.at("ulc").get<double>();
      b.sfc = j.at("sfc").get<double>();
      r.halstead_d = j.at("halstead_D").get<double>();
      r.halstead_e = j.at("halstead_E").get<double>();
      r.v_g = j.at("vG").get<long>();
      if (!j.at("klcid").is_null()) r.klcid = j.at("klcid").get<double>();
      r.cfs = j.at("cfs").get<double>();
      r.cicm = j.at("cicm").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw SchemaError("records", e.what());
  }
  return out;
}

std::string emit_rbc(const std::string& name, const rbc::RbcBreakdown& b,
                     const rbc::RbcConfig& cfg, Format format) {
  const std::array<std::pair<std::string_view, double>, 11> fields{{{"ioc", b.ioc},
                                                                    {"fr", b.fr},
                                                                    {"nfr", b.nfr},
                                                                    {"rc", b.rc},
                                                                    {"pc", b.pc},
                                                                    {"pca", b.pca},
                                                                    {"dci", b.dci},
                                                                    {"ifc", b.ifc},
                                                                    {"ulc", b.ulc},
                                                                    {"sfc", b.sfc},
                                                                    {"rbc", b.rbc}}};
  switch (format) {
    case Format::Json: {
      json j = {{"name", name}};
      for (const auto& [key, value] : fields) j[std::string(key)] = value;
      j["config"] = {{"rc_mode", rbc::to_string(cfg.rc_mode)}, {"nfr_floor", cfg.nfr_floor}};
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string header = "name";
      std::string row = csv_field(name);
      for (const auto& [key, value] : fields) {
        header += fmt::format(",{}", key);
        row += fmt::format(",{}", num(value));
      }
      return header + "\n" + row + "\n";
    }
    case Format::Human: {
      std::string out = fmt::format("Requirement based complexity: {}\n", name);
      const std::array<std::string_view, 10> labels{
          "Input/output complexity (IOC)", "Functional requirements (FR)",
          "Non-functional requirements (NFR)", "Requirement complexity (RC)",
          "Product complexity (PC)", "Personal complexity attributes (PCA)",
          "Design constraints imposed (DCI)", "Interface complexity (IFC)",
          "Users/location complexity (ULC)", "System feature complexity (SFC)"};
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out += fmt::format("  {:<38} {:>12}\n", labels[i], fixed2(fields[i].second));
      }
      out += fmt::format("RBC: {}\n", fixed2(b.rbc));
      return out;
    }
  }
  return {};
}

std::string emit_code(const CodeAnalysis& a, Format format) {
  const auto& h = a.halstead;
  const auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json j = {{"name", a.name},
            {"dialect", a.dialect},
            {"n1", a.counts.n1},
            {"n2", a.counts.n2},
            {"N1", a.counts.N1},
            {"N2", a.counts.N2},
            {"n", h.vocabulary},
            {"N", h.length},
            {"V", h.volume},
            {"Nhat", h.estimated_length},
            {"Vstar", h.potential_volume},
            {"L", h.level},
            {"D", h.difficulty},
            {"effort_dv", h.effort_dv},
            {"effort_vl", h.effort_vl},
            {"T_min", h.time_minutes},
            {"vG_graph", a.vg_graph},
            {"vG_decisions", a.vg_decisions},
            {"regions", a.regions},
            {"nodes", a.nodes},
            {"edges", a.edges},
            {"p", a.components},
            {"predicate_nodes", a.predicate_nodes},
            {"id_count", a.id_count},
            {"id_distinct", a.id_distinct},
            {"loc", a.loc},
            {"id_density", a.id_density},
            {"unique_lines", a.unique_lines},
            {"klcid", opt(a.klcid)},
            {"wc", a.wc},
            {"cfs", a.cfs},
            {"sbcs", a.sbcs},
            {"wics", a.wics},
            {"cicm", a.cicm},
            {"ei", a.ei},
            {"mode", cognitive::to_string(a.mode)},
            {"ni", a.n_inputs},
            {"no", a.n_outputs}};
  const auto other = a.mode == cognitive::BcsMode::Paper ? cognitive::BcsMode::Default
                                                         : cognitive::BcsMode::Paper;
  j["alternate"] = {{"mode", cognitive::to_string(other)},
                    {"wc", a.alt_wc},
                    {"sbcs", a.alt_sbcs},
                    {"cfs", a.alt_cfs},
                    {"cicm", a.alt_cicm}};

  switch (format) {
    case Format::Json: return j.dump(2) + "\n";
    case Format::Csv: {
      std::string header;
      std::string row;
      for (const auto& [key, value] : j.items()) {
        if (value.is_object()) continue;
        header += (header.empty() ? "" : ",") + key;
        std::string cell = value.is_string()  ? value.get<std::string>()
                           : value.is_null()  ? std::string()
                           : value.is_number_float() ? num(value.get<double>())
                                                     : value.dump();
        row += (row.empty() ? "" : ",") + csv_field(cell);
      }
      return header + "\n" + row + "\n";
    }
    case Format::Human: {
      std::string out = fmt::format("Code metrics: {} ({})\n", a.name, a.dialect);
      auto line = [&](std::string_view label, const std::string& value) {
        out += fmt::format("  {:<34} {:>12}\n", label, value);
      };
      out += "Halstead\n";
      line("distinct operators n1", std::to_string(a.counts.n1));
      line("distinct operands n2", std::to_string(a.counts.n2));
      line("operator occurrences N1", std::to_string(a.counts.N1));
      line("operand occurrences N2", std::to_string(a.counts.N2));
      line("vocabulary n", fixed2(h.vocabulary));
      line("length N", fixed2(h.length));
      line("volume V", fixed2(h.volume));
      line("estimated length N^", fixed2(h.estimated_length));
      line("potential volume V*", fixed2(h.potential_volume));
      line("level L", fmt::format("{:.4f}", h.level));
      line("difficulty D", fixed2(h.difficulty));
      line("effort D*V", fixed2(h.effort_dv));
      line("effort V/L", fixed2(h.effort_vl));
      line("time (minutes)", fixed2(h.time_minutes));
      out += "McCabe\n";
      line("nodes", std::to_string(a.nodes));
      line("edges", std::to_string(a.edges));
      line("components p", std::to_string(a.components));
      line("predicate nodes", std::to_string(a.predicate_nodes));
      line("v(G) = e - n + 2p", std::to_string(a.vg_graph));
      line("v(G) = decisions + 1", std::to_string(a.vg_decisions));
      line("regions", std::to_string(a.regions));
      out += "Cognitive\n";
      line("LOC", std::to_string(a.loc));
      line("identifier occurrences", std::to_string(a.id_count));
      line("distinct identifiers", std::to_string(a.id_distinct));
      line("identifier density", fixed2(a.id_density));
      line("unique lines", std::to_string(a.unique_lines));
      line("KLCID", a.klcid ? fixed2(*a.klcid) : "n/a");
      line(fmt::format("Wc ({} mode)", cognitive::to_string(a.mode)), fixed2(a.wc));
      line(fmt::format("CFS (Ni={}, No={})", a.n_inputs, a.n_outputs), fixed2(a.cfs));
      line("SBCS", fixed2(a.sbcs));
      line("WICS", fixed2(a.wics));
      line("CICM", fixed2(a.cicm));
      line("coding efficiency Ei", fixed2(a.ei));
      line(fmt::format("Wc / SBCS ({} mode)", cognitive::to_string(other)),
           fmt::format("{} / {}", fixed2(a.alt_wc), fixed2(a.alt_sbcs)));
      return out;
    }
  }
  return {};
}

}  // namespace reqlex::report
