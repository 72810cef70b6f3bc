#pragma once

// Lexical model of C-like source code: classified tokens grouped into
// physical lines. Every code-side metric is computed from this.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace reqlex::code {

enum class TokenClass {
  Operator,
  Identifier,
  Literal,      // numbers, character literals, true/false/null
  Keyword,
  Punctuation,  // ( ) { } [ ] ; , :
  Comment,
  String,
  Directive,    // preprocessor line; excluded from every count
};

std::string_view to_string(TokenClass klass) noexcept;

struct Token {
  std::string text;
  TokenClass klass = TokenClass::Operator;
  std::size_t line = 0;   // 1-based line on which the token starts
  std::string leading;    // whitespace between the previous token and this one

  bool operator==(const Token&) const = default;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::string source_name;
  std::size_t loc = 0;   // non-blank lines holding something other than comments/directives
  std::string trailing;  // whitespace after the last token

  /// Tokens re-joined with their whitespace; equals the (line-ending
  /// normalized) source text.
  std::string reconstruct() const;
};

enum class KeywordRole {
  Control,   // if, while, return, ...; counted as operators
  Type,      // int, void, ...; counted as operators, start declarations
  Operator,  // sizeof, new, ...; counted as operators
  Modifier,  // const, static, public, ...; not counted, start declarations
  Literal,   // true, false, null; lexed as literals
};

struct Dialect {
  std::string name;
  std::map<std::string, KeywordRole, std::less<>> keywords;
  // Symbol spellings (operators and punctuation) and their class. Matched by
  // maximal munch.
  std::map<std::string, TokenClass, std::less<>> symbols;
  std::string line_comment = "//";
  std::string block_comment_open = "/*";
  std::string block_comment_close = "*/";
  char string_delimiter = '"';
  char char_delimiter = '\'';
  bool preprocessor = true;
  bool dollar_in_identifiers = false;

  bool is_keyword(std::string_view word, KeywordRole role) const;
};

const Dialect& c_dialect();
const Dialect& cpp_dialect();
const Dialect& java_dialect();

/// Dialect by name ("c", "cpp", "java"); throws reqlex::Error on an unknown name.
const Dialect& dialect_by_name(std::string_view name);

/// Dialect chosen from a file extension; C for anything unrecognized.
const Dialect& dialect_for_path(std::string_view path);

/// Throws reqlex::Error when the symbol table is not prefix-closed.
void check_dialect(const Dialect& d);

/// Throws LexError on an unterminated string or comment or a character the
/// dialect does not know. CR/LF and lone CR are normalized to LF first.
TokenStream tokenize(std::string_view source, const Dialect& d, std::string source_name = {});

/// Opening delimiters, `;` and `,` count as operators; closers and `:` do not.
bool counts_as_operator(const Token& t, const Dialect& d);
bool counts_as_operand(const Token& t);

std::vector<Token> operand_occurrences(const TokenStream& ts);
std::vector<Token> operator_occurrences(const TokenStream& ts, const Dialect& d);

/// Tokens grouped by physical line; lines holding only comments or
/// directives are dropped. Comments and directives are removed from the groups.
std::vector<std::vector<Token>> logical_lines(const TokenStream& ts);

/// Tokens with comments and directives removed.
std::vector<Token> code_tokens(const TokenStream& ts);

}  // namespace reqlex::code
