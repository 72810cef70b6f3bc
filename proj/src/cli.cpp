#include "reqlex/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "reqlex/error.hpp"
#include "reqlex/report.hpp"

namespace reqlex::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string format = "human";
  std::string rc_mode = "product";
  std::string bcs_mode = "paper";
  std::string out_path;
  std::string manifest;
  std::string source;
  std::string manifests_dir;
  std::string sources_dir;
};

// Failure tied to an input file; printed as "path: message".
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  const auto before = text.substr(0, offset);
  const std::size_t line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
  const auto nl = before.rfind('\n');
  const std::size_t col = nl == std::string_view::npos ? offset + 1 : offset - nl;
  return {line, col};
}

srs::SrsManifest load_manifest(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return srs::parse_manifest(text);
  } catch (const SyntaxError& e) {
    const auto [line, col] = line_col(text, e.position() == 0 ? 0 : e.position() - 1);
    throw InputError(fmt::format("{}:{}:{}: {}", path.string(), line, col, e.what()));
  } catch (const Error& e) {
    throw InputError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

const code::Dialect& dialect_for(const fs::path& path) {
  if (const char* forced = std::getenv("REQLEX_DIALECT"); forced != nullptr && *forced != '\0') {
    return code::dialect_by_name(forced);
  }
  return code::dialect_for_path(path.string());
}

report::CodeAnalysis load_source(const fs::path& path, cognitive::BcsMode mode,
                                 std::optional<report::IoCounts> io) {
  const std::string text = read_file(path);
  try {
    return report::analyze_source(text, dialect_for(path), path.stem().string(), mode, io);
  } catch (const SourceError& e) {
    throw InputError(fmt::format("{}:{}", path.string(), e.what()));
  } catch (const Error& e) {
    throw InputError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

rbc::RbcConfig rbc_config(const RunConfig& cfg) {
  rbc::RbcConfig c;
  c.rc_mode = cfg.rc_mode == "sum" ? rbc::RcMode::Sum : rbc::RcMode::Product;
  return c;
}

cognitive::BcsMode bcs_mode(const RunConfig& cfg) {
  return cfg.bcs_mode == "default" ? cognitive::BcsMode::Default : cognitive::BcsMode::Paper;
}

bool is_source_file(const fs::path& p) {
  static const std::vector<std::string> exts{".c", ".h", ".cpp", ".cc", ".cxx", ".hpp", ".java"};
  return std::find(exts.begin(), exts.end(), p.extension().string()) != exts.end();
}

std::vector<fs::path> list_files(const fs::path& dir, bool (*keep)(const fs::path&)) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && keep(entry.path())) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string run_compare(const RunConfig& cfg, report::Format format, std::ostream& err) {
  std::vector<report::ManifestResult> manifests;
  for (const auto& path : list_files(cfg.manifests_dir, [](const fs::path& p) {
         return p.extension() == ".json";
       })) {
    auto m = load_manifest(path);
    const auto breakdown = rbc::compute_rbc(m, rbc_config(cfg));
    manifests.push_back({path.stem().string(), std::move(m), breakdown});
  }
  std::map<std::string, const srs::SrsManifest*> by_name;
  for (const auto& m : manifests) by_name[m.name] = &m.manifest;

  std::vector<report::CodeAnalysis> sources;
  for (const auto& path : list_files(cfg.sources_dir, is_source_file)) {
    std::optional<report::IoCounts> io;
    if (auto it = by_name.find(path.stem().string()); it != by_name.end()) {
      io = report::IoCounts{it->second->inputs, it->second->outputs};
    }
    sources.push_back(load_source(path, bcs_mode(cfg), io));
  }

  auto joined = report::join_records(manifests, sources);
  for (const auto& w : joined.warnings) err << "warning: " << w << '\n';
  if (joined.records.empty()) throw InputError("no manifest/source pairs to compare");
  const auto trend = report::compute_trend(joined.records);
  return report::emit(joined.records, &trend, format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Requirement based complexity and code complexity metrics", "reqlex"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool rc, bool bcs) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Write the document to this path");
    if (rc) {
      sub->add_option("--rc-mode", cfg.rc_mode, "Combine FR and NFR by product or sum")
          ->check(CLI::IsMember({"product", "sum"}));
    }
    if (bcs) {
      sub->add_option("--bcs-mode", cfg.bcs_mode, "Control-structure classification")
          ->check(CLI::IsMember({"paper", "default"}));
    }
  };

  auto* rbc_cmd = app.add_subcommand("rbc", "Requirement based complexity of a manifest");
  rbc_cmd->add_option("manifest", cfg.manifest, "SRS manifest (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(rbc_cmd, true, false);

  auto* code_cmd = app.add_subcommand("code", "Code complexity metrics of a source file");
  code_cmd->add_option("source", cfg.source, "Source file")->required()->check(CLI::ExistingFile);
  add_common(code_cmd, false, true);

  auto* cmp_cmd = app.add_subcommand("compare", "Join manifests with sources and correlate");
  cmp_cmd->add_option("manifests", cfg.manifests_dir, "Directory of manifests")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmp_cmd->add_option("sources", cfg.sources_dir, "Directory of sources")
      ->required()
      ->check(CLI::ExistingDirectory);
  add_common(cmp_cmd, true, true);

  if (args.empty()) {
    err << app.help();
    return kUsageError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    const auto format = report::parse_format(cfg.format);
    std::string document;
    if (*rbc_cmd) {
      const auto m = load_manifest(cfg.manifest);
      const auto config = rbc_config(cfg);
      document = report::emit_rbc(m.name, rbc::compute_rbc(m, config), config, format);
    } else if (*code_cmd) {
      document = report::emit_code(load_source(cfg.source, bcs_mode(cfg), std::nullopt), format);
    } else {
      document = run_compare(cfg, format, err);
    }

    if (cfg.out_path.empty()) {
      out << document;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file || !(file << document)) {
        throw InputError(fmt::format("{}: cannot write file", cfg.out_path));
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace reqlex::cli
