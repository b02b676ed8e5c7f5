#include "hybridlint/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hybridlint/frontend.hpp"

namespace hybridlint {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::NumberLiteral: return "number-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Comment: return "comment";
  }
  return "?";
}

namespace {

constexpr std::array kKeywords = {
    "and",  "as",    "break", "class",  "continue", "def",  "elif",   "else",
    "except", "finally", "for", "from", "if",       "import", "in",   "is",
    "not",  "or",    "pass",  "raise",  "return",   "try",  "while",  "None",
    "True", "False",
};

// Longest match first.
constexpr std::array kOperators = {
    "**=", "//=", ">>=", "<<=", "**", "//", "==", "!=", "<=", ">=", "+=", "-=", "*=",
    "/=",  "%=",  "&=",  "|=",  "^=", "->", ">>", "<<", "+",  "-",  "*",  "/",  "%",
    "=",   "<",   ">",   "&",   "|",  "^",  "~",
};

constexpr std::string_view kPunctuation = "()[]{},:.;";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_string_prefix(std::string_view word) {
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "r" || lower == "b" || lower == "f" || lower == "u" || lower == "rb" ||
         lower == "br" || lower == "fr" || lower == "rf";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  TokenStream run() {
    TokenStream out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\n') {
        advance();
        continue;
      }
      Mark start = mark();
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        out.tokens.push_back(make(TokenKind::Comment, start));
      } else if (is_ident_start(c)) {
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
        std::string_view word = text_.substr(start.pos, pos_ - start.pos);
        if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\'') &&
            is_string_prefix(word)) {
          lex_string(start);
          out.tokens.push_back(make(TokenKind::StringLiteral, start));
        } else {
          bool kw = is_python_keyword(word);
          out.tokens.push_back(make(kw ? TokenKind::Keyword : TokenKind::Identifier, start));
        }
      } else if (c == '"' || c == '\'') {
        lex_string(start);
        out.tokens.push_back(make(TokenKind::StringLiteral, start));
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        lex_number();
        out.tokens.push_back(make(TokenKind::NumberLiteral, start));
      } else if (kPunctuation.find(c) != std::string_view::npos) {
        advance();
        out.tokens.push_back(make(TokenKind::Punctuation, start));
      } else if (auto len = operator_length(); len > 0) {
        for (std::size_t i = 0; i < len; ++i) advance();
        out.tokens.push_back(make(TokenKind::Operator, start));
      } else {
        advance();
        throw LexError("illegal character '" + std::string(1, c) + "'", span_from(start));
      }
    }
    return out;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int col;
  };

  Mark mark() const { return {pos_, line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Span span_from(const Mark& m) const { return Span{m.line, m.col, line_, col_}; }

  Token make(TokenKind kind, const Mark& m) const {
    return Token{kind, std::string(text_.substr(m.pos, pos_ - m.pos)), span_from(m)};
  }

  std::size_t operator_length() const {
    for (std::string_view op : kOperators)
      if (text_.substr(pos_, op.size()) == op) return op.size();
    return 0;
  }

  void lex_string(const Mark& start) {
    char quote = text_[pos_];
    bool triple = text_.substr(pos_, 3) == std::string(3, quote);
    std::size_t qlen = triple ? 3 : 1;
    for (std::size_t i = 0; i < qlen; ++i) advance();
    while (true) {
      if (pos_ >= text_.size()) throw LexError("unterminated string", span_from(start));
      char c = text_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) throw LexError("unterminated string", span_from(start));
        advance();
        continue;
      }
      if (c == '\n' && !triple) throw LexError("unterminated string", span_from(start));
      if (c == quote && (!triple || text_.substr(pos_, 3) == std::string(3, quote))) {
        for (std::size_t i = 0; i < qlen; ++i) advance();
        return;
      }
      advance();
    }
  }

  void lex_number() {
    auto digit_run = [&](auto pred) {
      while (pos_ < text_.size() && (pred(text_[pos_]) || text_[pos_] == '_')) advance();
    };
    auto dec = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto hex = [](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; };
    if (text_[pos_] == '0' && pos_ + 1 < text_.size() &&
        (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
      advance();
      advance();
      digit_run(hex);
      return;
    }
    digit_run(dec);
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      digit_run(dec);
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && dec(text_[look])) {
        while (pos_ < look) advance();
        digit_run(dec);
      }
    }
    if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      Mark here = mark();
      advance();
      throw LexError("malformed number", span_from(here));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_python_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

TokenStream tokenize_python(std::string_view text) { return Lexer(text).run(); }

TokenStream tokenize(const SourceUnit& unit) {
  return FrontEndRegistry::instance().get(unit.language()).tokenize(unit);
}

}  // namespace hybridlint
