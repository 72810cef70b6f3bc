#pragma once

// Per-program metric records, rank correlation between requirement based
// complexity and the code metrics, and the document formats they are
// emitted in.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqlex/classic_metrics.hpp"
#include "reqlex/cognitive_metrics.hpp"
#include "reqlex/rbc_engine.hpp"
#include "reqlex/srs_model.hpp"

namespace reqlex::report {

/// Every code-side metric for one source file.
struct CodeAnalysis {
  std::string name;
  std::string dialect;
  classic::HalsteadCounts counts;
  classic::HalsteadMetrics halstead;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t predicate_nodes = 0;
  long vg_graph = 0;
  std::size_t vg_decisions = 0;
  long regions = 0;

  std::size_t loc = 0;
  std::size_t id_count = 0;     // variable identifier occurrences
  std::size_t id_distinct = 0;  // distinct variable names
  double id_density = 0;
  std::size_t unique_lines = 0;
  std::optional<double> klcid;

  cognitive::BcsMode mode = cognitive::BcsMode::Paper;
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;
  double wc = 0;
  double sbcs = 0;
  double cfs = 0;
  double wics = 0;
  double cicm = 0;
  double ei = 0;

  // The same cognitive figures under the other BCS classification mode.
  double alt_wc = 0;
  double alt_sbcs = 0;
  double alt_cfs = 0;
  double alt_cicm = 0;
};

struct IoCounts {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
};

/// `reqlex: inputs=N outputs=M` inside any comment of the stream.
std::optional<IoCounts> io_annotation(const code::TokenStream& ts);

/// Throws LexError/StructureError on malformed source. `io` overrides the
/// source annotation; with neither, CFS uses zero inputs and outputs.
CodeAnalysis analyze_source(std::string_view source, const code::Dialect& d, std::string name,
                            cognitive::BcsMode mode, std::optional<IoCounts> io = std::nullopt);

struct ManifestResult {
  std::string name;
  srs::SrsManifest manifest;
  rbc::RbcBreakdown breakdown;
};

struct MetricsRecord {
  std::string name;
  rbc::RbcBreakdown rbc;
  double halstead_d = 0;
  double halstead_e = 0;
  long v_g = 0;
  std::optional<double> klcid;
  double cfs = 0;
  double cicm = 0;

  bool operator==(const MetricsRecord&) const = default;
};

struct JoinResult {
  std::vector<MetricsRecord> records;  // sorted by name
  std::vector<std::string> warnings;
};

/// Inner join on name. CFS is recomputed from the manifest's inputs and
/// outputs. Throws reqlex::Error when a name repeats on either side.
JoinResult join_records(const std::vector<ManifestResult>& manifest_results,
                        const std::vector<CodeAnalysis>& code_results);

/// Spearman rank correlation with average ranks for ties. Throws
/// reqlex::Error on a length mismatch, fewer than two values, or a constant
/// sequence (no ranking to correlate).
double spearman(std::span<const double> xs, std::span<const double> ys);

struct MetricTrend {
  std::string metric;
  std::optional<double> rho;
  std::size_t n = 0;

  bool operator==(const MetricTrend&) const = default;
};

struct TrendReport {
  std::vector<MetricTrend> by_metric;
  std::vector<std::string> corpus;

  const MetricTrend* find(std::string_view metric) const;
};

/// Names of the code metrics correlated against RBC, in report order.
std::span<const std::string_view> trend_metrics();

/// Records with an absent value for a metric are left out of that pair only.
TrendReport compute_trend(const std::vector<MetricsRecord>& records);

enum class Format { Human, Csv, Json };

/// Throws reqlex::Error for an unknown name.
Format parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "name,rbc,ioc,fr,nfr,rc,pc,pca,dci,ifc,ulc,sfc,halstead_D,halstead_E,vG,klcid,cfs,cicm";

/// Records sorted by name. The trend block, when given, follows the CSV rows
/// after a blank line.
std::string emit(const std::vector<MetricsRecord>& records, const TrendReport* trend,
                 Format format);

/// Reads the record rows of an emitted CSV document (up to the first blank
/// line). Throws SyntaxError on a malformed row.
std::vector<MetricsRecord> parse_csv(std::string_view text);

/// Reads the `records` array of an emitted JSON document.
std::vector<MetricsRecord> parse_json(std::string_view text);

std::string emit_rbc(const std::string& name, const rbc::RbcBreakdown& b,
                     const rbc::RbcConfig& cfg, Format format);

std::string emit_code(const CodeAnalysis& a, Format format);

}  // namespace reqlex::report
