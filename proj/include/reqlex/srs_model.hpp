#pragma once

// Structured capture of a software requirements specification: the counts
// and classified items that requirement-based complexity is computed from.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reqlex::srs {

using Count = std::uint64_t;

struct FunctionalReq {
  std::string label;
  Count subprocess_count = 0;  // cardinality of the decomposition

  bool operator==(const FunctionalReq&) const = default;
};

enum class NfrCategory { Optional, MustBe, VeryImportant };

struct NonFunctionalReq {
  std::string label;
  NfrCategory category = NfrCategory::Optional;

  bool operator==(const NonFunctionalReq&) const = default;
};

/// Precedence weight of a non-functional requirement category: 1, 2 or 3.
int nfr_weight(NfrCategory category) noexcept;

enum class ConstraintKind { Regulatory, Hardware, Communication, Database, Other };

struct Constraint {
  std::string label;
  ConstraintKind kind = ConstraintKind::Other;

  bool operator==(const Constraint&) const = default;
};

enum class InterfaceKind { Hardware, Software, Communication, Other };

struct ExternalInterface {
  std::string label;
  InterfaceKind kind = InterfaceKind::Other;

  bool operator==(const ExternalInterface&) const = default;
};

struct Feature {
  std::string label;
  Count weight = 1;

  bool operator==(const Feature&) const = default;
};

enum class CostAttribute {
  AnalystCapability,
  ApplicationExperience,
  ProgrammerCapability,
  VirtualMachineExperience,
  LanguageExperience,
};

enum class Rating { VeryLow, Low, Nominal, High, VeryHigh };

struct CostDriverRating {
  CostAttribute attribute = CostAttribute::ProgrammerCapability;
  Rating rating = Rating::Nominal;

  bool operator==(const CostDriverRating&) const = default;
};

/// Personnel cost-driver multiplier table (COCOMO intermediate model).
/// Nullopt for the cells the table leaves undefined.
std::optional<double> lookup_multiplier(CostAttribute attribute, Rating rating) noexcept;

/// Exact table value; throws UndefinedCellError for an undefined cell.
double multiplier_for(CostAttribute attribute, Rating rating);

struct SrsManifest {
  std::string name;
  Count inputs = 0;
  Count outputs = 0;
  Count interfaces = 0;
  Count files = 0;
  std::vector<FunctionalReq> functions;
  std::vector<NonFunctionalReq> nfrs;
  std::vector<Constraint> constraints;
  std::vector<ExternalInterface> external_interfaces;
  Count users = 1;
  Count locations = 1;
  std::vector<Feature> features;
  std::vector<CostDriverRating> personnel;

  bool operator==(const SrsManifest&) const = default;
};

struct Violation {
  std::string field;
  std::string rule;

  bool operator==(const Violation&) const = default;
};

/// Empty iff every manifest invariant holds.
std::vector<Violation> validate_manifest(const SrsManifest& m);

/// Parses the JSON manifest format. Throws SyntaxError, SchemaError or
/// ValidationError.
SrsManifest parse_manifest(std::string_view text);

/// Canonical JSON form; parse_manifest(serialize_manifest(m)) == m.
std::string serialize_manifest(const SrsManifest& m);

// Wire names used by the manifest format.
std::string_view to_string(NfrCategory c) noexcept;
std::string_view to_string(ConstraintKind k) noexcept;
std::string_view to_string(InterfaceKind k) noexcept;
std::string_view to_string(CostAttribute a) noexcept;
std::string_view to_string(Rating r) noexcept;

}  // namespace reqlex::srs
