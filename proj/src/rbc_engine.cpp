#include "reqlex/rbc_engine.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "reqlex/error.hpp"

namespace reqlex::rbc {

srs::Count compute_ioc(const srs::SrsManifest& m) {
  return m.inputs + m.outputs + m.interfaces + m.files;
}

double compute_fr(const srs::SrsManifest& m) {
  double subprocesses = 0;
  for (const auto& f : m.functions) subprocesses += static_cast<double>(f.subprocess_count);
  return static_cast<double>(m.functions.size()) * subprocesses;
}

double compute_nfr(const srs::SrsManifest& m) {
  // One weight per category times the number of requirements in it.
  double total = 0;
  for (const auto& n : m.nfrs) total += srs::nfr_weight(n.category);
  return total;
}

double compute_rc(double fr, double nfr, const RbcConfig& cfg) {
  switch (cfg.rc_mode) {
    case RcMode::Sum: return fr + nfr;
    case RcMode::Product: return fr * (cfg.nfr_floor ? std::max(nfr, 1.0) : nfr);
  }
  return 0;
}

double compute_pc(double ioc, double rc) { return ioc * rc; }

double compute_pca(std::span<const srs::CostDriverRating> ratings) {
  if (ratings.empty()) return 1.0;
  double total = 0;
  for (const auto& r : ratings) total += srs::multiplier_for(r.attribute, r.rating);
  return total;
}

srs::Count compute_dci(const srs::SrsManifest& m) { return m.constraints.size(); }

srs::Count compute_ifc(const srs::SrsManifest& m) { return m.external_interfaces.size(); }

double compute_ulc(const srs::SrsManifest& m) {
  return static_cast<double>(m.users) * static_cast<double>(m.locations);
}

double compute_sfc(std::span<const srs::Feature> features) {
  if (features.empty()) return 0;
  double product = 1;
  for (const auto& f : features) product *= static_cast<double>(f.weight);
  return product;
}

double compose_rbc(double pc, double pca, double dci, double ifc, double sfc, double ulc) {
  return ((pc * pca) + dci + ifc + sfc) * ulc;
}

RbcBreakdown compute_rbc(const srs::SrsManifest& m, const RbcConfig& cfg) {
  if (auto violations = srs::validate_manifest(m); !violations.empty()) {
    throw ValidationError(fmt::format("manifest '{}': {}: {}", m.name, violations.front().field,
                                      violations.front().rule));
  }
  RbcBreakdown b;
  b.ioc = static_cast<double>(compute_ioc(m));
  b.fr = compute_fr(m);
  b.nfr = compute_nfr(m);
  b.rc = compute_rc(b.fr, b.nfr, cfg);
  b.pc = compute_pc(b.ioc, b.rc);
  b.pca = compute_pca(m.personnel);
  b.dci = static_cast<double>(compute_dci(m));
  b.ifc = static_cast<double>(compute_ifc(m));
  b.ulc = compute_ulc(m);
  b.sfc = compute_sfc(m.features);
  b.rbc = compose_rbc(b.pc, b.pca, b.dci, b.ifc, b.sfc, b.ulc);
  return b;
}

std::string_view to_string(RcMode mode) noexcept {
  return mode == RcMode::Sum ? "sum" : "product";
}

}  // namespace reqlex::rbc
