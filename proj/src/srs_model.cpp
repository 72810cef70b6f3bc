#include "reqlex/srs_model.hpp"

#include <array>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "json.hpp"
#include "reqlex/error.hpp"

namespace reqlex::srs {

namespace {

using nlohmann::json;

// Rows follow CostAttribute, columns follow Rating.
constexpr double kUndefined = -1.0;
constexpr std::array<std::array<double, 5>, 5> kMultipliers{{
    {1.46, 1.19, 1.00, 0.86, 0.71},
    {1.29, 1.13, 1.00, 0.91, 0.82},
    {1.42, 1.17, 1.00, 0.90, kUndefined},
    {1.21, 1.10, 1.00, 0.90, kUndefined},
    {1.14, 1.07, 1.00, 0.95, kUndefined},
}};

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<NfrCategory, 3> kNfrNames{{
    {NfrCategory::Optional, "optional"},
    {NfrCategory::MustBe, "must_be"},
    {NfrCategory::VeryImportant, "very_important"},
}};

constexpr NameTable<ConstraintKind, 5> kConstraintNames{{
    {ConstraintKind::Regulatory, "regulatory"},
    {ConstraintKind::Hardware, "hardware"},
    {ConstraintKind::Communication, "communication"},
    {ConstraintKind::Database, "database"},
    {ConstraintKind::Other, "other"},
}};

constexpr NameTable<InterfaceKind, 4> kInterfaceNames{{
    {InterfaceKind::Hardware, "hardware"},
    {InterfaceKind::Software, "software"},
    {InterfaceKind::Communication, "communication"},
    {InterfaceKind::Other, "other"},
}};

constexpr NameTable<CostAttribute, 5> kAttributeNames{{
    {CostAttribute::AnalystCapability, "analyst_capability"},
    {CostAttribute::ApplicationExperience, "application_experience"},
    {CostAttribute::ProgrammerCapability, "programmer_capability"},
    {CostAttribute::VirtualMachineExperience, "virtual_machine_experience"},
    {CostAttribute::LanguageExperience, "language_experience"},
}};

constexpr NameTable<Rating, 5> kRatingNames{{
    {Rating::VeryLow, "very_low"},
    {Rating::Low, "low"},
    {Rating::Nominal, "nominal"},
    {Rating::High, "high"},
    {Rating::VeryHigh, "very_high"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const NameTable<Enum, N>& table, Enum value) noexcept {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum enum_of(const NameTable<Enum, N>& table, const json& value, const std::string& field) {
  if (!value.is_string()) throw SchemaError(field, "expected a string");
  const auto& text = value.get_ref<const std::string&>();
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  std::string allowed;
  for (const auto& entry : table) {
    if (!allowed.empty()) allowed += ", ";
    allowed += entry.second;
  }
  throw SchemaError(field, fmt::format("unknown value \"{}\" (expected one of: {})", text, allowed));
}

void reject_unknown_keys(const json& object, const std::string& field,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || key == item.key();
    if (!known) {
      throw SchemaError(field.empty() ? item.key() : field + "." + item.key(), "unknown key");
    }
  }
}

const json& require_object(const json& value, const std::string& field) {
  if (!value.is_object()) throw SchemaError(field, "expected an object");
  return value;
}

const json& require_member(const json& object, const std::string& key, const std::string& field) {
  auto it = object.find(key);
  if (it == object.end()) throw SchemaError(field + "." + key, "missing required key");
  return *it;
}

Count to_count(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return value.get<Count>();
  if (value.is_number_integer()) throw SchemaError(field, "must be a non-negative integer");
  throw SchemaError(field, "expected an integer");
}

std::string to_label(const json& value, const std::string& field) {
  if (!value.is_string()) throw SchemaError(field, "expected a string");
  return value.get<std::string>();
}

template <typename Fn>
void for_each_item(const json& root, const char* key, Fn&& fn) {
  auto it = root.find(key);
  if (it == root.end()) return;
  if (!it->is_array()) throw SchemaError(key, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string field = fmt::format("{}[{}]", key, i);
    fn(require_object((*it)[i], field), field);
  }
}

}  // namespace

int nfr_weight(NfrCategory category) noexcept {
  switch (category) {
    case NfrCategory::Optional: return 1;
    case NfrCategory::MustBe: return 2;
    case NfrCategory::VeryImportant: return 3;
  }
  return 0;
}

std::optional<double> lookup_multiplier(CostAttribute attribute, Rating rating) noexcept {
  const double value =
      kMultipliers[static_cast<std::size_t>(attribute)][static_cast<std::size_t>(rating)];
  if (value == kUndefined) return std::nullopt;
  return value;
}

double multiplier_for(CostAttribute attribute, Rating rating) {
  if (auto value = lookup_multiplier(attribute, rating)) return *value;
  throw UndefinedCellError(fmt::format("no multiplier is defined for {} rated {}",
                                       to_string(attribute), to_string(rating)));
}

std::string_view to_string(NfrCategory c) noexcept { return name_of(kNfrNames, c); }
std::string_view to_string(ConstraintKind k) noexcept { return name_of(kConstraintNames, k); }
std::string_view to_string(InterfaceKind k) noexcept { return name_of(kInterfaceNames, k); }
std::string_view to_string(CostAttribute a) noexcept { return name_of(kAttributeNames, a); }
std::string_view to_string(Rating r) noexcept { return name_of(kRatingNames, r); }

std::vector<Violation> validate_manifest(const SrsManifest& m) {
  std::vector<Violation> out;
  if (m.name.empty()) out.push_back({"name", "must be non-empty"});
  if (m.users < 1) out.push_back({"deployment.users", "must be at least 1"});
  if (m.locations < 1) out.push_back({"deployment.locations", "must be at least 1"});
  for (std::size_t i = 0; i < m.features.size(); ++i) {
    if (m.features[i].weight < 1) {
      out.push_back({fmt::format("features[{}].weight", i), "must be at least 1"});
    }
  }
  std::set<CostAttribute> rated;
  for (std::size_t i = 0; i < m.personnel.size(); ++i) {
    const auto& r = m.personnel[i];
    if (!lookup_multiplier(r.attribute, r.rating)) {
      out.push_back({fmt::format("personnel[{}].rating", i),
                     fmt::format("{} has no multiplier for rating {}", to_string(r.attribute),
                                 to_string(r.rating))});
    }
    if (!rated.insert(r.attribute).second) {
      out.push_back({fmt::format("personnel[{}].attribute", i),
                     fmt::format("{} is rated more than once", to_string(r.attribute))});
    }
  }
  return out;
}

SrsManifest parse_manifest(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  require_object(root, "(document)");
  reject_unknown_keys(root, "",
                      {"name", "io", "functions", "nfrs", "constraints", "external_interfaces",
                       "deployment", "features", "personnel"});

  SrsManifest m;
  m.name = to_label(require_member(root, "name", "(document)"), "name");

  if (auto io = root.find("io"); io != root.end()) {
    require_object(*io, "io");
    reject_unknown_keys(*io, "io", {"inputs", "outputs", "interfaces", "files"});
    auto count = [&](const char* key, Count& dst) {
      if (auto it = io->find(key); it != io->end()) dst = to_count(*it, std::string("io.") + key);
    };
    count("inputs", m.inputs);
    count("outputs", m.outputs);
    count("interfaces", m.interfaces);
    count("files", m.files);
  }

  for_each_item(root, "functions", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"label", "subprocesses"});
    m.functions.push_back({to_label(require_member(item, "label", field), field + ".label"),
                           to_count(require_member(item, "subprocesses", field),
                                    field + ".subprocesses")});
  });
  for_each_item(root, "nfrs", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"label", "category"});
    m.nfrs.push_back({to_label(require_member(item, "label", field), field + ".label"),
                      enum_of(kNfrNames, require_member(item, "category", field),
                              field + ".category")});
  });
  for_each_item(root, "constraints", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"label", "kind"});
    m.constraints.push_back({to_label(require_member(item, "label", field), field + ".label"),
                             enum_of(kConstraintNames, require_member(item, "kind", field),
                                     field + ".kind")});
  });
  for_each_item(root, "external_interfaces", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"label", "kind"});
    m.external_interfaces.push_back(
        {to_label(require_member(item, "label", field), field + ".label"),
         enum_of(kInterfaceNames, require_member(item, "kind", field), field + ".kind")});
  });

  if (auto dep = root.find("deployment"); dep != root.end()) {
    require_object(*dep, "deployment");
    reject_unknown_keys(*dep, "deployment", {"users", "locations"});
    if (auto it = dep->find("users"); it != dep->end()) m.users = to_count(*it, "deployment.users");
    if (auto it = dep->find("locations"); it != dep->end()) {
      m.locations = to_count(*it, "deployment.locations");
    }
  }

  for_each_item(root, "features", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"label", "weight"});
    m.features.push_back({to_label(require_member(item, "label", field), field + ".label"),
                          to_count(require_member(item, "weight", field), field + ".weight")});
  });
  for_each_item(root, "personnel", [&](const json& item, const std::string& field) {
    reject_unknown_keys(item, field, {"attribute", "rating"});
    CostDriverRating r{
        enum_of(kAttributeNames, require_member(item, "attribute", field), field + ".attribute"),
        enum_of(kRatingNames, require_member(item, "rating", field), field + ".rating")};
    if (!lookup_multiplier(r.attribute, r.rating)) {
      throw SchemaError(field + ".rating",
                        fmt::format("{} has no multiplier for rating {}", to_string(r.attribute),
                                    to_string(r.rating)));
    }
    m.personnel.push_back(r);
  });

  if (auto violations = validate_manifest(m); !violations.empty()) {
    std::string message = "manifest violates invariants:";
    for (const auto& v : violations) message += fmt::format(" [{}: {}]", v.field, v.rule);
    throw ValidationError(message);
  }
  return m;
}

std::string serialize_manifest(const SrsManifest& m) {
  json root = json::object();
  root["name"] = m.name;
  root["io"] = {{"inputs", m.inputs},
                {"outputs", m.outputs},
                {"interfaces", m.interfaces},
                {"files", m.files}};
  root["functions"] = json::array();
  for (const auto& f : m.functions) {
    root["functions"].push_back({{"label", f.label}, {"subprocesses", f.subprocess_count}});
  }
  root["nfrs"] = json::array();
  for (const auto& n : m.nfrs) {
    root["nfrs"].push_back({{"label", n.label}, {"category", to_string(n.category)}});
  }
  root["constraints"] = json::array();
  for (const auto& c : m.constraints) {
    root["constraints"].push_back({{"label", c.label}, {"kind", to_string(c.kind)}});
  }
  root["external_interfaces"] = json::array();
  for (const auto& e : m.external_interfaces) {
    root["external_interfaces"].push_back({{"label", e.label}, {"kind", to_string(e.kind)}});
  }
  root["deployment"] = {{"users", m.users}, {"locations", m.locations}};
  root["features"] = json::array();
  for (const auto& f : m.features) {
    root["features"].push_back({{"label", f.label}, {"weight", f.weight}});
  }
  root["personnel"] = json::array();
  for (const auto& p : m.personnel) {
    root["personnel"].push_back(
        {{"attribute", to_string(p.attribute)}, {"rating", to_string(p.rating)}});
  }
  return root.dump(2) + "\n";
}

}  // namespace reqlex::srs
