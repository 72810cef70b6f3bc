#pragma once

// Cognitive complexity measures: identifier density and KLCID, cognitive
// functional size (CFS) over basic control structures, and the cognitive
// information complexity measure (CICM).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlex/code_model.hpp"
#include "reqlex/syntax.hpp"

namespace reqlex::cognitive {

enum class BcsKind { Sequence, Branch, Case, Iteration, Call, Recursion, Parallel, Interrupt };

/// Cognitive weight of a basic control structure.
int bcs_weight(BcsKind kind) noexcept;
std::string_view to_string(BcsKind kind) noexcept;

struct BcsNode {
  BcsKind kind = BcsKind::Sequence;
  std::vector<BcsNode> children;  // structures nested one layer deeper

  bool operator==(const BcsNode&) const = default;
};

enum class BcsMode {
  // Only functions nobody else calls are expanded; every call to a function
  // of the same source is an opaque call structure, recursive or not.
  Paper,
  // Every function body is expanded; a call to the enclosing function is
  // classified as recursion.
  Default,
};

std::string_view to_string(BcsMode mode) noexcept;

/// Root is the program's single sequence structure.
BcsNode build_bcs_tree(const code::Program& program, BcsMode mode);
BcsNode build_bcs_tree(std::string_view source, const code::Dialect& d, BcsMode mode);

/// Total cognitive weight Wc. For a sequence root: 1 plus, for each child
/// block, the product over its nesting layers of the summed weights in that
/// layer. Any other node is treated as a single block.
double cognitive_weight(const BcsNode& t);

/// Plain sum of weights over every node.
double sbcs(const BcsNode& t);

double cfs(std::size_t n_inputs, std::size_t n_outputs, double wc);

struct LineInfo {
  std::size_t line = 0;
  std::vector<std::string> identifiers;  // variable identifier occurrences
  std::size_t operators = 0;             // operator occurrences
  std::string shape;                     // normalized token sequence
  bool declaration = false;              // declares without assigning

  std::size_t ics() const { return identifiers.size() + operators; }
  bool operator==(const LineInfo&) const = default;
};

/// Identifier tokens not directly followed by `(`: names of variables,
/// parameters and fields rather than of functions.
bool is_variable_identifier(const std::vector<code::Token>& line, std::size_t index);

std::vector<LineInfo> line_infos(const code::TokenStream& ts, const code::Dialect& d);

/// Total variable identifier occurrences divided by LOC. Throws
/// EmptyProgramError when LOC is 0.
double identifier_density(const code::TokenStream& ts);

/// Variable identifier occurrences over the whole stream, and distinct names.
std::size_t identifier_occurrences(const code::TokenStream& ts);
std::size_t distinct_identifiers(const code::TokenStream& ts);

/// First line of each shape class, in order.
std::vector<LineInfo> unique_lines(const std::vector<LineInfo>& lines);

/// Over the unique non-declaration lines: distinct identifiers per line,
/// summed, divided by the number of such lines holding an identifier.
/// Nullopt when no line holds one.
std::optional<double> klcid(const std::vector<LineInfo>& lines);

/// sum_k ICS_k / (LOCS - k + 1). Throws EmptyProgramError on no lines.
double wics(const std::vector<LineInfo>& lines);

double cicm(double wics_value, double sbcs_value);

/// ICS / LOCS. Throws EmptyProgramError when locs is 0.
double coding_efficiency(std::size_t ics_total, std::size_t locs);

}  // namespace reqlex::cognitive
