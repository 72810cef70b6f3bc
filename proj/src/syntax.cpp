#include "reqlex/syntax.hpp"

#include <fmt/format.h>

#include "reqlex/error.hpp"

namespace reqlex::code {

namespace {

bool is_opener(const Token& t) {
  return t.klass == TokenClass::Punctuation && (t.text == "(" || t.text == "[" || t.text == "{");
}

bool is_closer(const Token& t) {
  return t.klass == TokenClass::Punctuation && (t.text == ")" || t.text == "]" || t.text == "}");
}

char closer_for(const std::string& opener) {
  return opener == "(" ? ')' : opener == "[" ? ']' : '}';
}

// For every opener, the index of its closer (and vice versa).
std::vector<std::size_t> match_brackets(const std::vector<Token>& toks) {
  std::vector<std::size_t> match(toks.size(), toks.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_opener(toks[i])) {
      stack.push_back(i);
    } else if (is_closer(toks[i])) {
      if (stack.empty()) {
        throw StructureError(fmt::format("unmatched '{}'", toks[i].text), toks[i].line);
      }
      const std::size_t open = stack.back();
      if (closer_for(toks[open].text) != toks[i].text[0]) {
        throw StructureError(fmt::format("'{}' closes '{}' opened on line {}", toks[i].text,
                                         toks[open].text, toks[open].line),
                             toks[i].line);
      }
      stack.pop_back();
      match[open] = i;
      match[i] = open;
    }
  }
  if (!stack.empty()) {
    const auto& t = toks[stack.back()];
    throw StructureError(fmt::format("'{}' is never closed", t.text), t.line);
  }
  return match;
}

bool is(const Token& t, std::string_view text) {
  return (t.klass == TokenClass::Punctuation || t.klass == TokenClass::Operator ||
          t.klass == TokenClass::Keyword) &&
         t.text == text;
}

struct BodyRange {
  std::string name;
  std::size_t line;
  std::size_t begin;  // first token after `{`
  std::size_t end;    // index of the closing `}`
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Dialect& d)
      : toks_(std::move(toks)), match_(match_brackets(toks_)), d_(d) {}

  Program run() {
    const auto ranges = find_definitions();
    for (const auto& r : ranges) defined_.insert(r.name);
    Program program;
    for (const auto& r : ranges) {
      FunctionDef f;
      f.name = r.name;
      f.line = r.line;
      f.body = parse_range(r.begin, r.end);
      program.functions.push_back(std::move(f));
    }
    return program;
  }

 private:
  // `name ( ... ) [qualifiers] {` at any nesting level outside a function body.
  std::vector<BodyRange> find_definitions() const {
    std::vector<BodyRange> out;
    std::size_t i = 0;
    while (i + 1 < toks_.size()) {
      if (toks_[i].klass == TokenClass::Identifier && is(toks_[i + 1], "(")) {
        const std::size_t close = match_[i + 1];
        std::size_t j = close + 1;
        while (j < toks_.size() && skippable_after_signature(toks_[j])) ++j;
        if (j < toks_.size() && is(toks_[j], "{")) {
          out.push_back({toks_[i].text, toks_[i].line, j + 1, match_[j]});
          i = match_[j] + 1;
        } else {
          i = close + 1;
        }
        continue;
      }
      ++i;
    }
    return out;
  }

  bool skippable_after_signature(const Token& t) const {
    if (t.klass == TokenClass::Identifier) return true;
    if (t.klass == TokenClass::Keyword) {
      auto it = d_.keywords.find(t.text);
      return it != d_.keywords.end() && it->second != KeywordRole::Control;
    }
    return is(t, ",") || is(t, ".") || is(t, "::");
  }

  std::vector<Statement> parse_range(std::size_t begin, std::size_t end) {
    std::vector<Statement> out;
    std::size_t pos = begin;
    while (pos < end) out.push_back(parse_statement(pos, end));
    return out;
  }

  std::size_t expect(std::size_t pos, std::size_t end, std::string_view text) const {
    if (pos >= end || !is(toks_[pos], text)) {
      const std::size_t line = pos < toks_.size() ? toks_[pos].line : toks_.back().line;
      throw StructureError(fmt::format("expected '{}'", text), line);
    }
    return pos;
  }

  // Index of the first depth-0 token equal to `text` in [pos, end).
  std::size_t find_at_depth0(std::size_t pos, std::size_t end, std::string_view text,
                             std::size_t line) const {
    while (pos < end) {
      if (is(toks_[pos], text)) return pos;
      if (is_opener(toks_[pos])) {
        pos = match_[pos] + 1;
        continue;
      }
      if (is_closer(toks_[pos])) break;
      ++pos;
    }
    throw StructureError(fmt::format("expected '{}'", text), line);
  }

  Expr expr(std::size_t begin, std::size_t end) const {
    Expr e;
    e.present = begin < end;
    for (std::size_t k = begin; k < end; ++k) {
      const Token& t = toks_[k];
      if (is(t, "?")) ++e.ternaries;
      if (t.klass != TokenClass::Identifier || k + 1 >= end || !is(toks_[k + 1], "(")) continue;
      if (!defined_.contains(t.text)) continue;
      // `int f(int);` inside a body declares, it does not call.
      if (k > begin && d_.is_keyword(toks_[k - 1].text, KeywordRole::Type)) continue;
      e.calls.push_back({t.text, t.line});
    }
    return e;
  }

  // `( ... )` starting at pos; returns the expression inside and advances pos.
  Expr paren_expr(std::size_t& pos, std::size_t end) const {
    expect(pos, end, "(");
    const std::size_t close = match_[pos];
    Expr e = expr(pos + 1, close);
    pos = close + 1;
    return e;
  }

  Statement parse_statement(std::size_t& pos, std::size_t end) {
    const Token& t = toks_[pos];
    Statement s;
    s.line = t.line;
    using Kind = Statement::Kind;

    if (is(t, "{")) {
      s.kind = Kind::Block;
      s.body = parse_range(pos + 1, match_[pos]);
      pos = match_[pos] + 1;
      return s;
    }
    if (is(t, ";")) {
      ++pos;
      return s;
    }
    if (t.klass == TokenClass::Keyword) {
      const std::string& kw = t.text;
      if (kw == "if") {
        s.kind = Kind::If;
        ++pos;
        s.head = paren_expr(pos, end);
        s.body.push_back(parse_body(pos, end, t.line));
        if (pos < end && is(toks_[pos], "else")) {
          ++pos;
          s.alt.push_back(parse_body(pos, end, t.line));
        }
        return s;
      }
      if (kw == "while") {
        s.kind = Kind::While;
        ++pos;
        s.head = paren_expr(pos, end);
        s.body.push_back(parse_body(pos, end, t.line));
        return s;
      }
      if (kw == "do") {
        s.kind = Kind::DoWhile;
        ++pos;
        s.body.push_back(parse_body(pos, end, t.line));
        pos = expect(pos, end, "while") + 1;
        s.head = paren_expr(pos, end);
        pos = expect(pos, end, ";") + 1;
        return s;
      }
      if (kw == "for") {
        ++pos;
        const std::size_t open = expect(pos, end, "(");
        const std::size_t close = match_[open];
        std::vector<std::size_t> semis;
        for (std::size_t k = open + 1; k < close; ++k) {
          if (is_opener(toks_[k])) {
            k = match_[k];
          } else if (is(toks_[k], ";")) {
            semis.push_back(k);
          }
        }
        if (semis.size() == 2) {
          s.kind = Kind::For;
          s.init = expr(open + 1, semis[0]);
          s.head = expr(semis[0] + 1, semis[1]);
          s.step = expr(semis[1] + 1, close);
        } else if (semis.empty()) {
          s.kind = Kind::ForEach;
          s.head = expr(open + 1, close);
        } else {
          throw StructureError("malformed for header", t.line);
        }
        pos = close + 1;
        s.body.push_back(parse_body(pos, end, t.line));
        return s;
      }
      if (kw == "switch") {
        s.kind = Kind::Switch;
        ++pos;
        s.head = paren_expr(pos, end);
        s.body.push_back(parse_body(pos, end, t.line));
        return s;
      }
      if (kw == "case") {
        s.kind = Kind::Case;
        const std::size_t colon = find_at_depth0(pos + 1, end, ":", t.line);
        s.head = expr(pos + 1, colon);
        pos = colon + 1;
        return s;
      }
      if (kw == "default") {
        s.kind = Kind::Default;
        pos = expect(pos + 1, end, ":") + 1;
        return s;
      }
      if (kw == "break" || kw == "continue") {
        s.kind = kw == "break" ? Kind::Break : Kind::Continue;
        pos = expect(pos + 1, end, ";") + 1;
        return s;
      }
      if (kw == "return") {
        s.kind = Kind::Return;
        const std::size_t semi = find_at_depth0(pos + 1, end, ";", t.line);
        s.head = expr(pos + 1, semi);
        pos = semi + 1;
        return s;
      }
      if (kw == "else") throw StructureError("'else' without a matching 'if'", t.line);
      if (kw == "goto" || kw == "try" || kw == "catch" || kw == "finally" || kw == "throw") {
        throw StructureError(fmt::format("'{}' is not supported by the control-flow model", kw),
                             t.line);
      }
    }
    if (is_closer(t)) throw StructureError(fmt::format("unexpected '{}'", t.text), t.line);

    const std::size_t semi = find_at_depth0(pos, end, ";", t.line);
    s.kind = Kind::Simple;
    s.head = expr(pos, semi);
    pos = semi + 1;
    return s;
  }

  Statement parse_body(std::size_t& pos, std::size_t end, std::size_t line) {
    if (pos >= end) throw StructureError("missing statement body", line);
    return parse_statement(pos, end);
  }

  std::vector<Token> toks_;
  std::vector<std::size_t> match_;
  const Dialect& d_;
  std::set<std::string> defined_;
};

void collect_calls(const std::vector<Statement>& stmts, std::vector<CallSite>& out) {
  for (const auto& s : stmts) {
    for (const Expr* e : {&s.init, &s.head, &s.step}) {
      out.insert(out.end(), e->calls.begin(), e->calls.end());
    }
    collect_calls(s.body, out);
    collect_calls(s.alt, out);
  }
}

}  // namespace

const FunctionDef* Program::find(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::vector<const FunctionDef*> Program::roots() const {
  std::set<std::string> called;
  for (const auto& f : functions) {
    std::vector<CallSite> calls;
    collect_calls(f.body, calls);
    for (const auto& c : calls) {
      if (c.callee != f.name) called.insert(c.callee);
    }
  }
  std::vector<const FunctionDef*> out;
  for (const auto& f : functions) {
    if (!called.contains(f.name)) out.push_back(&f);
  }
  return out;
}

Program parse_program(const TokenStream& ts, const Dialect& d) {
  return Parser(code_tokens(ts), d).run();
}

std::size_t decision_keyword_count(const TokenStream& ts) {
  std::size_t count = 0;
  for (const auto& t : ts.tokens) {
    if (t.klass == TokenClass::Keyword &&
        (t.text == "if" || t.text == "while" || t.text == "for" || t.text == "case")) {
      ++count;
    } else if (t.klass == TokenClass::Operator && t.text == "?") {
      ++count;
    }
  }
  return count;
}

}  // namespace reqlex::code
