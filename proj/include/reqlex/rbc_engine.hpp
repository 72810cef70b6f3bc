#pragma once

// Requirement based complexity: ten attribute values derived from an SRS
// manifest and their composition
//
//   RBC = ((PC * PCA) + DCI + IFC + SFC) * ULC
//
// where PC = IOC * RC and RC combines the functional and non-functional
// requirement values according to RbcConfig.

#include <span>
#include <string>
#include <string_view>

#include "reqlex/srs_model.hpp"

namespace reqlex::rbc {

enum class RcMode {
  Product,  // RC = FR * NFR
  Sum,      // RC = FR + NFR
};

struct RbcConfig {
  RcMode rc_mode = RcMode::Product;
  // Product mode only: an empty NFR set contributes a factor of 1, not 0.
  bool nfr_floor = true;

  bool operator==(const RbcConfig&) const = default;
};

struct RbcBreakdown {
  double ioc = 0;
  double fr = 0;
  double nfr = 0;
  double rc = 0;
  double pc = 0;
  double pca = 0;
  double dci = 0;
  double ifc = 0;
  double ulc = 0;
  double sfc = 0;
  double rbc = 0;

  bool operator==(const RbcBreakdown&) const = default;
};

srs::Count compute_ioc(const srs::SrsManifest& m);
double compute_fr(const srs::SrsManifest& m);
double compute_nfr(const srs::SrsManifest& m);
double compute_rc(double fr, double nfr, const RbcConfig& cfg);
double compute_pc(double ioc, double rc);
/// Sum of the provided multipliers; 1.0 when no attribute is rated.
double compute_pca(std::span<const srs::CostDriverRating> ratings);
srs::Count compute_dci(const srs::SrsManifest& m);
srs::Count compute_ifc(const srs::SrsManifest& m);
double compute_ulc(const srs::SrsManifest& m);
/// Product of feature weights; 0 for an empty feature list.
double compute_sfc(std::span<const srs::Feature> features);

/// The final composition over already computed attribute values.
double compose_rbc(double pc, double pca, double dci, double ifc, double sfc, double ulc);

/// Throws ValidationError when the manifest breaks an invariant.
RbcBreakdown compute_rbc(const srs::SrsManifest& m, const RbcConfig& cfg = {});

std::string_view to_string(RcMode mode) noexcept;

}  // namespace reqlex::rbc
