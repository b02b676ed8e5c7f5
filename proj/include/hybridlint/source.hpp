#pragma once

#include <compare>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hybridlint {

/// Source region with 1-based lines and columns. `endCol` points one past the
/// last character, so an insertion point has start == end.
struct Span {
  int startLine = 1;
  int startCol = 1;
  int endLine = 1;
  int endCol = 1;

  auto operator<=>(const Span&) const = default;

  bool contains(const Span& other) const;
  bool overlapsLines(int firstLine, int lastLine) const {
    return startLine <= lastLine && firstLine <= endLine;
  }
  std::string str() const;
};

Span cover(const Span& a, const Span& b);

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedLanguage : public Error {
 public:
  explicit UnsupportedLanguage(const std::string& lang)
      : Error("unsupported language: " + lang) {}
};

/// Error tied to a location in a source unit.
class SourceError : public Error {
 public:
  SourceError(const std::string& what, Span span) : Error(what), span_(span) {}
  const Span& span() const { return span_; }

 private:
  Span span_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class ParseError : public SourceError {
 public:
  ParseError(const std::string& expected, Span span)
      : SourceError("parse error at " + span.str() + ": expected " + expected, span),
        expected_(expected) {}
  const std::string& expected() const { return expected_; }

 private:
  std::string expected_;
};

inline constexpr std::string_view kPythonSubset = "python-subset";

class SourceUnit {
 public:
  SourceUnit(std::string path, std::string text, std::string language = std::string(kPythonSubset));

  const std::string& id() const { return id_; }
  const std::string& path() const { return path_; }
  const std::string& language() const { return language_; }
  const std::string& text() const { return text_; }
  /// Non-blank, non-comment lines.
  int loc() const { return loc_; }
  int physicalLines() const { return physicalLines_; }

 private:
  std::string id_;
  std::string path_;
  std::string language_;
  std::string text_;
  int loc_ = 0;
  int physicalLines_ = 0;
};

/// Reads `file` and names the unit by its path relative to `root`.
SourceUnit load_unit(const std::filesystem::path& file, const std::filesystem::path& root);

std::string read_file(const std::filesystem::path& file);

/// Offset of (line, col) in `text`, or npos when out of bounds.
std::size_t offset_of(std::string_view text, int line, int col);

}  // namespace hybridlint
