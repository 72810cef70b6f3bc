#include "reqlex/code_model.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <set>

#include <fmt/format.h>

#include "reqlex/error.hpp"

namespace reqlex::code {

namespace {

using Keywords = std::map<std::string, KeywordRole, std::less<>>;
using Symbols = std::map<std::string, TokenClass, std::less<>>;

void add(Keywords& kw, KeywordRole role, std::initializer_list<const char*> words) {
  for (const char* w : words) kw[w] = role;
}

Symbols c_symbols() {
  Symbols s;
  for (const char* op : {"+",  "-",  "*",  "/",  "%",  "=",  "<",  ">",   "!",   "&",  "|",
                         "^",  "~",  "?",  ".",  "++", "--", "->", "<<",  ">>",  "<=", ">=",
                         "==", "!=", "&&", "||", "+=", "-=", "*=", "/=",  "%=",  "&=", "|=",
                         "^=", "<<=", ">>="}) {
    s[op] = TokenClass::Operator;
  }
  for (const char* p : {"(", ")", "{", "}", "[", "]", ";", ",", ":"}) {
    s[p] = TokenClass::Punctuation;
  }
  return s;
}

Keywords c_keywords() {
  Keywords kw;
  add(kw, KeywordRole::Control,
      {"if", "else", "for", "while", "do", "switch", "case", "default", "break", "continue",
       "return", "goto"});
  add(kw, KeywordRole::Type,
      {"int", "void", "char", "float", "double", "long", "short", "unsigned", "signed", "struct",
       "union", "enum", "typedef"});
  add(kw, KeywordRole::Operator, {"sizeof"});
  add(kw, KeywordRole::Modifier,
      {"const", "static", "extern", "volatile", "register", "inline", "auto"});
  add(kw, KeywordRole::Literal, {"NULL"});
  return kw;
}

Dialect make_c() {
  Dialect d;
  d.name = "c";
  d.keywords = c_keywords();
  d.symbols = c_symbols();
  return d;
}

Dialect make_cpp() {
  Dialect d = make_c();
  d.name = "cpp";
  d.symbols["::"] = TokenClass::Operator;
  add(d.keywords, KeywordRole::Control, {"try", "catch", "throw"});
  add(d.keywords, KeywordRole::Type, {"bool", "class", "namespace", "template", "typename"});
  add(d.keywords, KeywordRole::Operator, {"new", "delete", "this"});
  add(d.keywords, KeywordRole::Modifier,
      {"public", "private", "protected", "virtual", "override", "constexpr", "using",
       "friend", "explicit", "mutable", "noexcept"});
  add(d.keywords, KeywordRole::Literal, {"true", "false", "nullptr"});
  d.keywords["auto"] = KeywordRole::Type;
  return d;
}

Dialect make_java() {
  Dialect d;
  d.name = "java";
  d.preprocessor = false;
  d.dollar_in_identifiers = true;
  d.symbols = c_symbols();
  for (const char* op : {">>>", ">>>=", "@"}) d.symbols[op] = TokenClass::Operator;
  add(d.keywords, KeywordRole::Control,
      {"if", "else", "for", "while", "do", "switch", "case", "default", "break", "continue",
       "return", "try", "catch", "finally", "throw"});
  add(d.keywords, KeywordRole::Type,
      {"int", "void", "char", "float", "double", "long", "short", "boolean", "byte", "class",
       "interface", "enum"});
  add(d.keywords, KeywordRole::Operator, {"new", "this", "super", "instanceof"});
  add(d.keywords, KeywordRole::Modifier,
      {"public", "private", "protected", "static", "final", "abstract", "synchronized",
       "import", "package", "extends", "implements", "throws"});
  add(d.keywords, KeywordRole::Literal, {"true", "false", "null"});
  return d;
}

bool is_ident_start(char c, const Dialect& d) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         (d.dollar_in_identifiers && c == '$');
}

bool is_ident_char(char c, const Dialect& d) {
  return is_ident_start(c, d) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string normalize_newlines(std::string_view source) {
  std::string out;
  out.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < source.size() && source[i + 1] == '\n') ++i;
    } else {
      out.push_back(source[i]);
    }
  }
  return out;
}

class Lexer {
 public:
  Lexer(std::string text, const Dialect& d) : text_(std::move(text)), d_(d) {
    for (const auto& entry : d_.symbols) max_symbol_ = std::max(max_symbol_, entry.first.size());
  }

  TokenStream run() {
    TokenStream ts;
    std::string pending;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\v') {
        if (c == '\n') {
          ++line_;
          at_line_start_ = true;
        }
        pending.push_back(c);
        ++pos_;
        continue;
      }
      const std::size_t start = pos_;
      const std::size_t start_line = line_;
      const TokenClass klass = scan();
      Token t;
      t.text = text_.substr(start, pos_ - start);
      t.klass = klass;
      t.line = start_line;
      t.leading = std::move(pending);
      pending.clear();
      line_ += static_cast<std::size_t>(std::count(t.text.begin(), t.text.end(), '\n'));
      at_line_start_ = false;
      ts.tokens.push_back(std::move(t));
    }
    ts.trailing = std::move(pending);
    return ts;
  }

 private:
  bool starts_with(std::string_view s) const {
    return !s.empty() && text_.compare(pos_, s.size(), s) == 0;
  }

  TokenClass scan() {
    const char c = text_[pos_];
    if (d_.preprocessor && c == '#' && at_line_start_) return scan_directive();
    if (starts_with(d_.line_comment)) {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      return TokenClass::Comment;
    }
    if (starts_with(d_.block_comment_open)) {
      const auto close = text_.find(d_.block_comment_close, pos_ + d_.block_comment_open.size());
      if (close == std::string::npos) throw LexError("unterminated block comment", line_);
      pos_ = close + d_.block_comment_close.size();
      return TokenClass::Comment;
    }
    if (c == d_.string_delimiter) {
      scan_quoted(c, "string literal");
      return TokenClass::String;
    }
    if (c == d_.char_delimiter) {
      scan_quoted(c, "character literal");
      return TokenClass::Literal;
    }
    if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      scan_number();
      return TokenClass::Literal;
    }
    if (is_ident_start(c, d_)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_], d_)) ++pos_;
      const std::string_view word(text_.data() + start, pos_ - start);
      auto it = d_.keywords.find(word);
      if (it == d_.keywords.end()) return TokenClass::Identifier;
      return it->second == KeywordRole::Literal ? TokenClass::Literal : TokenClass::Keyword;
    }
    for (std::size_t len = std::min(max_symbol_, text_.size() - pos_); len > 0; --len) {
      auto it = d_.symbols.find(std::string_view(text_.data() + pos_, len));
      if (it != d_.symbols.end()) {
        pos_ += len;
        return it->second;
      }
    }
    const auto byte = static_cast<unsigned char>(c);
    throw LexError(std::isprint(byte) ? fmt::format("unexpected character '{}'", c)
                                      : fmt::format("unexpected byte 0x{:02x}", byte),
                   line_);
  }

  TokenClass scan_directive() {
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
        pos_ += 2;
        continue;
      }
      ++pos_;
    }
    return TokenClass::Directive;
  }

  void scan_quoted(char delimiter, const char* what) {
    ++pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\\' && pos_ + 1 < text_.size()) {
        pos_ += 2;
        continue;
      }
      if (c == '\n') break;
      ++pos_;
      if (c == delimiter) return;
    }
    throw LexError(fmt::format("unterminated {}", what), line_);
  }

  void scan_number() {
    const std::size_t start = pos_;
    const bool hex = text_.compare(start, 2, "0x") == 0 || text_.compare(start, 2, "0X") == 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const char prev = text_[pos_ - (pos_ > start ? 1 : 0)];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        ++pos_;
      } else if ((c == '+' || c == '-') && !hex && (prev == 'e' || prev == 'E')) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string text_;
  const Dialect& d_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t max_symbol_ = 0;
  bool at_line_start_ = true;
};

}  // namespace

std::string_view to_string(TokenClass klass) noexcept {
  switch (klass) {
    case TokenClass::Operator: return "operator";
    case TokenClass::Identifier: return "identifier";
    case TokenClass::Literal: return "literal";
    case TokenClass::Keyword: return "keyword";
    case TokenClass::Punctuation: return "punctuation";
    case TokenClass::Comment: return "comment";
    case TokenClass::String: return "string";
    case TokenClass::Directive: return "directive";
  }
  return "?";
}

std::string TokenStream::reconstruct() const {
  std::string out;
  for (const auto& t : tokens) {
    out += t.leading;
    out += t.text;
  }
  out += trailing;
  return out;
}

bool Dialect::is_keyword(std::string_view word, KeywordRole role) const {
  auto it = keywords.find(word);
  return it != keywords.end() && it->second == role;
}

const Dialect& c_dialect() {
  static const Dialect d = make_c();
  return d;
}

const Dialect& cpp_dialect() {
  static const Dialect d = make_cpp();
  return d;
}

const Dialect& java_dialect() {
  static const Dialect d = make_java();
  return d;
}

const Dialect& dialect_by_name(std::string_view name) {
  if (name == "c") return c_dialect();
  if (name == "cpp" || name == "c++") return cpp_dialect();
  if (name == "java") return java_dialect();
  throw Error(fmt::format("unknown dialect '{}' (expected c, cpp or java)", name));
}

const Dialect& dialect_for_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return c_dialect();
  const auto ext = path.substr(dot + 1);
  for (auto e : {"cpp", "cc", "cxx", "hpp", "hh", "hxx", "C"}) {
    if (ext == e) return cpp_dialect();
  }
  if (ext == "java") return java_dialect();
  return c_dialect();
}

void check_dialect(const Dialect& d) {
  for (const auto& [spelling, klass] : d.symbols) {
    for (std::size_t len = 1; len < spelling.size(); ++len) {
      // A missing prefix would make maximal munch skip over a valid split.
      const auto prefix = spelling.substr(0, len);
      if (!d.symbols.contains(prefix)) {
        throw Error(fmt::format("dialect {}: symbol '{}' lacks its prefix '{}'", d.name, spelling,
                                prefix));
      }
    }
  }
}

TokenStream tokenize(std::string_view source, const Dialect& d, std::string source_name) {
  Lexer lexer(normalize_newlines(source), d);
  TokenStream ts = lexer.run();
  ts.source_name = std::move(source_name);
  std::set<std::size_t> code_lines;
  for (const auto& t : ts.tokens) {
    if (t.klass != TokenClass::Comment && t.klass != TokenClass::Directive) {
      code_lines.insert(t.line);
    }
  }
  ts.loc = code_lines.size();
  return ts;
}

bool counts_as_operator(const Token& t, const Dialect& d) {
  switch (t.klass) {
    case TokenClass::Operator: return true;
    case TokenClass::Punctuation:
      return t.text == "(" || t.text == "{" || t.text == "[" || t.text == ";" || t.text == ",";
    case TokenClass::Keyword: return !d.is_keyword(t.text, KeywordRole::Modifier);
    default: return false;
  }
}

bool counts_as_operand(const Token& t) {
  return t.klass == TokenClass::Identifier || t.klass == TokenClass::Literal ||
         t.klass == TokenClass::String;
}

std::vector<Token> operand_occurrences(const TokenStream& ts) {
  std::vector<Token> out;
  std::copy_if(ts.tokens.begin(), ts.tokens.end(), std::back_inserter(out), counts_as_operand);
  return out;
}

std::vector<Token> operator_occurrences(const TokenStream& ts, const Dialect& d) {
  std::vector<Token> out;
  std::copy_if(ts.tokens.begin(), ts.tokens.end(), std::back_inserter(out),
               [&](const Token& t) { return counts_as_operator(t, d); });
  return out;
}

std::vector<Token> code_tokens(const TokenStream& ts) {
  std::vector<Token> out;
  std::copy_if(ts.tokens.begin(), ts.tokens.end(), std::back_inserter(out), [](const Token& t) {
    return t.klass != TokenClass::Comment && t.klass != TokenClass::Directive;
  });
  return out;
}

std::vector<std::vector<Token>> logical_lines(const TokenStream& ts) {
  std::vector<std::vector<Token>> groups;
  std::size_t current_line = 0;
  for (auto& t : code_tokens(ts)) {
    if (groups.empty() || t.line != current_line) {
      groups.emplace_back();
      current_line = t.line;
    }
    groups.back().push_back(std::move(t));
  }
  return groups;
}

}  // namespace reqlex::code
