#pragma once

// Statement-level structure of a C-like program: function definitions and
// the control structures inside them. Expressions stay opaque apart from
// the calls to functions defined in the same source and ternary operators.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "reqlex/code_model.hpp"

namespace reqlex::code {

struct CallSite {
  std::string callee;
  std::size_t line = 0;
};

// An expression segment: only the parts that carry control flow.
struct Expr {
  bool present = false;
  std::vector<CallSite> calls;
  std::size_t ternaries = 0;
};

struct Statement {
  enum class Kind {
    Simple,    // expression or declaration terminated by `;`
    Return,
    Block,
    If,
    While,
    DoWhile,
    For,       // init; cond; step
    ForEach,   // range-based header
    Switch,
    Case,      // `case` label
    Default,   // `default` label
    Break,
    Continue,
  };

  Kind kind = Kind::Simple;
  std::size_t line = 0;
  Expr head;   // condition, controlling expression or the statement itself
  Expr init;   // For only
  Expr step;   // For only
  std::vector<Statement> body;  // then-branch, loop body, block contents
  std::vector<Statement> alt;   // else-branch
};

struct FunctionDef {
  std::string name;
  std::size_t line = 0;
  std::vector<Statement> body;
};

struct Program {
  std::vector<FunctionDef> functions;

  const FunctionDef* find(const std::string& name) const;
  /// Functions not called by any other function (self-calls ignored), in
  /// definition order.
  std::vector<const FunctionDef*> roots() const;
};

/// Throws StructureError for unbalanced delimiters, a dangling `else` or
/// constructs the model does not cover (goto, try/catch).
Program parse_program(const TokenStream& ts, const Dialect& d);

/// Decision points written in the source: if, while, for, case and `?`.
std::size_t decision_keyword_count(const TokenStream& ts);

}  // namespace reqlex::code
