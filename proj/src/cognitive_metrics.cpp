#include "reqlex/cognitive_metrics.hpp"

#include <set>

#include "reqlex/error.hpp"

namespace reqlex::cognitive {

namespace {

class BcsBuilder {
 public:
  explicit BcsBuilder(BcsMode mode) : mode_(mode) {}

  std::vector<BcsNode> function_blocks(const code::FunctionDef& f) {
    current_ = f.name;
    return blocks(f.body);
  }

 private:
  void expr_blocks(const code::Expr& e, std::vector<BcsNode>& out) const {
    for (const auto& call : e.calls) {
      const bool recursive = mode_ == BcsMode::Default && call.callee == current_;
      out.push_back({recursive ? BcsKind::Recursion : BcsKind::Call, {}});
    }
    for (std::size_t i = 0; i < e.ternaries; ++i) out.push_back({BcsKind::Branch, {}});
  }

  std::vector<BcsNode> blocks(const std::vector<code::Statement>& stmts) const {
    std::vector<BcsNode> out;
    for (const auto& s : stmts) append(s, out);
    return out;
  }

  static void append_all(std::vector<BcsNode>& dst, std::vector<BcsNode> src) {
    for (auto& n : src) dst.push_back(std::move(n));
  }

  void append(const code::Statement& s, std::vector<BcsNode>& out) const {
    using SK = code::Statement::Kind;
    switch (s.kind) {
      case SK::Simple:
      case SK::Return: expr_blocks(s.head, out); break;
      case SK::Block: append_all(out, blocks(s.body)); break;
      case SK::If: {
        expr_blocks(s.head, out);
        BcsNode branch{BcsKind::Branch, blocks(s.body)};
        append_all(branch.children, blocks(s.alt));
        out.push_back(std::move(branch));
        break;
      }
      case SK::While:
      case SK::ForEach:
      case SK::DoWhile:
      case SK::For: {
        expr_blocks(s.init, out);
        BcsNode loop{BcsKind::Iteration, {}};
        expr_blocks(s.head, loop.children);
        append_all(loop.children, blocks(s.body));
        expr_blocks(s.step, loop.children);
        out.push_back(std::move(loop));
        break;
      }
      case SK::Switch: {
        expr_blocks(s.head, out);
        out.push_back({BcsKind::Case, blocks(s.body)});
        break;
      }
      case SK::Case:
      case SK::Default:
      case SK::Break:
      case SK::Continue: break;
    }
  }

  BcsMode mode_;
  std::string current_;
};

double layered_product(const BcsNode& block) {
  std::vector<double> layer_sums;
  std::vector<const BcsNode*> layer{&block};
  while (!layer.empty()) {
    double sum = 0;
    std::vector<const BcsNode*> next;
    for (const BcsNode* n : layer) {
      sum += bcs_weight(n->kind);
      for (const auto& c : n->children) next.push_back(&c);
    }
    layer_sums.push_back(sum);
    layer = std::move(next);
  }
  double product = 1;
  for (double s : layer_sums) product *= s;
  return product;
}

bool is_declaration(const std::vector<code::Token>& line, const code::Dialect& d) {
  if (line.empty() || line.front().klass != code::TokenClass::Keyword) return false;
  const auto& first = line.front().text;
  if (!d.is_keyword(first, code::KeywordRole::Type) &&
      !d.is_keyword(first, code::KeywordRole::Modifier)) {
    return false;
  }
  for (const auto& t : line) {
    if (t.klass == code::TokenClass::Operator && t.text == "=") return false;
  }
  return true;
}

std::string shape_of(const std::vector<code::Token>& line) {
  std::string shape;
  for (const auto& t : line) {
    if (!shape.empty()) shape.push_back(' ');
    switch (t.klass) {
      case code::TokenClass::Identifier: shape += "ID"; break;
      case code::TokenClass::Literal: shape += "NUM"; break;
      case code::TokenClass::String: shape += "STR"; break;
      default: shape += t.text; break;
    }
  }
  return shape;
}

}  // namespace

int bcs_weight(BcsKind kind) noexcept {
  switch (kind) {
    case BcsKind::Sequence: return 1;
    case BcsKind::Branch: return 2;
    case BcsKind::Case: return 3;
    case BcsKind::Iteration: return 3;
    case BcsKind::Call: return 2;
    case BcsKind::Recursion: return 3;
    case BcsKind::Parallel: return 4;
    case BcsKind::Interrupt: return 4;
  }
  return 0;
}

std::string_view to_string(BcsKind kind) noexcept {
  switch (kind) {
    case BcsKind::Sequence: return "sequence";
    case BcsKind::Branch: return "branch";
    case BcsKind::Case: return "case";
    case BcsKind::Iteration: return "iteration";
    case BcsKind::Call: return "call";
    case BcsKind::Recursion: return "recursion";
    case BcsKind::Parallel: return "parallel";
    case BcsKind::Interrupt: return "interrupt";
  }
  return "?";
}

std::string_view to_string(BcsMode mode) noexcept {
  return mode == BcsMode::Paper ? "paper" : "default";
}

BcsNode build_bcs_tree(const code::Program& program, BcsMode mode) {
  BcsNode root{BcsKind::Sequence, {}};
  BcsBuilder builder(mode);
  std::vector<const code::FunctionDef*> expanded;
  if (mode == BcsMode::Paper) {
    expanded = program.roots();
  } else {
    for (const auto& f : program.functions) expanded.push_back(&f);
  }
  for (const auto* f : expanded) {
    for (auto& block : builder.function_blocks(*f)) root.children.push_back(std::move(block));
  }
  return root;
}

BcsNode build_bcs_tree(std::string_view source, const code::Dialect& d, BcsMode mode) {
  return build_bcs_tree(code::parse_program(code::tokenize(source, d), d), mode);
}

double cognitive_weight(const BcsNode& t) {
  if (t.kind != BcsKind::Sequence) return layered_product(t);
  // The single sequence structure of a component counts once.
  double total = bcs_weight(BcsKind::Sequence);
  for (const auto& block : t.children) total += layered_product(block);
  return total;
}

double sbcs(const BcsNode& t) {
  double total = bcs_weight(t.kind);
  for (const auto& c : t.children) total += sbcs(c);
  return total;
}

double cfs(std::size_t n_inputs, std::size_t n_outputs, double wc) {
  return static_cast<double>(n_inputs + n_outputs) * wc;
}

bool is_variable_identifier(const std::vector<code::Token>& line, std::size_t index) {
  if (line[index].klass != code::TokenClass::Identifier) return false;
  const bool called = index + 1 < line.size() &&
                      line[index + 1].klass == code::TokenClass::Punctuation &&
                      line[index + 1].text == "(";
  return !called;
}

std::vector<LineInfo> line_infos(const code::TokenStream& ts, const code::Dialect& d) {
  std::vector<LineInfo> out;
  for (const auto& tokens : code::logical_lines(ts)) {
    LineInfo info;
    info.line = tokens.front().line;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (is_variable_identifier(tokens, i)) info.identifiers.push_back(tokens[i].text);
      if (code::counts_as_operator(tokens[i], d)) ++info.operators;
    }
    info.shape = shape_of(tokens);
    info.declaration = is_declaration(tokens, d);
    out.push_back(std::move(info));
  }
  return out;
}

std::size_t identifier_occurrences(const code::TokenStream& ts) {
  std::size_t count = 0;
  for (const auto& tokens : code::logical_lines(ts)) {
    for (std::size_t i = 0; i < tokens.size(); ++i) count += is_variable_identifier(tokens, i);
  }
  return count;
}

std::size_t distinct_identifiers(const code::TokenStream& ts) {
  std::set<std::string> names;
  for (const auto& tokens : code::logical_lines(ts)) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (is_variable_identifier(tokens, i)) names.insert(tokens[i].text);
    }
  }
  return names.size();
}

double identifier_density(const code::TokenStream& ts) {
  if (ts.loc == 0) throw EmptyProgramError("identifier density of a program with no lines");
  return static_cast<double>(identifier_occurrences(ts)) / static_cast<double>(ts.loc);
}

std::vector<LineInfo> unique_lines(const std::vector<LineInfo>& lines) {
  std::vector<LineInfo> out;
  std::set<std::string> seen;
  for (const auto& l : lines) {
    if (seen.insert(l.shape).second) out.push_back(l);
  }
  return out;
}

std::optional<double> klcid(const std::vector<LineInfo>& lines) {
  std::vector<LineInfo> statements;
  for (const auto& l : lines) {
    if (!l.declaration) statements.push_back(l);
  }
  std::size_t identifiers = 0;
  std::size_t bearing = 0;
  for (const auto& l : unique_lines(statements)) {
    const std::set<std::string> distinct(l.identifiers.begin(), l.identifiers.end());
    identifiers += distinct.size();
    bearing += distinct.empty() ? 0 : 1;
  }
  if (bearing == 0) return std::nullopt;
  return static_cast<double>(identifiers) / static_cast<double>(bearing);
}

double wics(const std::vector<LineInfo>& lines) {
  if (lines.empty()) throw EmptyProgramError("WICS of a program with no lines");
  const std::size_t locs = lines.size();
  double total = 0;
  for (std::size_t k = 0; k < locs; ++k) {
    total += static_cast<double>(lines[k].ics()) / static_cast<double>(locs - k);
  }
  return total;
}

double cicm(double wics_value, double sbcs_value) { return wics_value * sbcs_value; }

double coding_efficiency(std::size_t ics_total, std::size_t locs) {
  if (locs == 0) throw EmptyProgramError("coding efficiency of a program with no lines");
  return static_cast<double>(ics_total) / static_cast<double>(locs);
}

}  // namespace reqlex::cognitive
