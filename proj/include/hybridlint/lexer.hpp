#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/source.hpp"

namespace hybridlint {

enum class TokenKind {
  Identifier,
  Keyword,
  StringLiteral,
  NumberLiteral,
  Operator,
  Punctuation,
  Comment,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
};

struct TokenStream {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

/// Lexes the python-subset grammar. Throws LexError on an illegal character
/// or an unterminated string.
TokenStream tokenize_python(std::string_view text);

/// Dispatches on the unit's language through the front-end registry.
TokenStream tokenize(const SourceUnit& unit);

bool is_python_keyword(std::string_view word);

}  // namespace hybridlint
