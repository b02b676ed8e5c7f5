#include "hybridlint/source.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hybridlint/lexer.hpp"

namespace hybridlint {

bool Span::contains(const Span& other) const {
  auto before = [](int l1, int c1, int l2, int c2) { return l1 < l2 || (l1 == l2 && c1 <= c2); };
  return before(startLine, startCol, other.startLine, other.startCol) &&
         before(other.endLine, other.endCol, endLine, endCol);
}

std::string Span::str() const {
  std::ostringstream out;
  out << startLine << ':' << startCol << '-' << endLine << ':' << endCol;
  return out.str();
}

Span cover(const Span& a, const Span& b) {
  Span s = a;
  if (b.startLine < s.startLine || (b.startLine == s.startLine && b.startCol < s.startCol)) {
    s.startLine = b.startLine;
    s.startCol = b.startCol;
  }
  if (b.endLine > s.endLine || (b.endLine == s.endLine && b.endCol > s.endCol)) {
    s.endLine = b.endLine;
    s.endCol = b.endCol;
  }
  return s;
}

namespace {

int count_physical_lines(std::string_view text) {
  if (text.empty()) return 0;
  int lines = 1;
  for (char c : text)
    if (c == '\n') ++lines;
  if (text.back() == '\n') --lines;
  return lines;
}

// Lines covered by at least one non-comment token. Falls back to a textual
// scan when the unit does not lex; the scan counts every non-blank line that
// does not start with '#'.
int count_loc(std::string_view text) {
  std::set<int> lines;
  try {
    for (const auto& tok : tokenize_python(text).tokens) {
      if (tok.kind == TokenKind::Comment) continue;
      for (int l = tok.span.startLine; l <= tok.span.endLine; ++l) lines.insert(l);
    }
    return static_cast<int>(lines.size());
  } catch (const LexError&) {
  }
  int count = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r\f");
    if (first == std::string::npos || line[first] == '#') continue;
    ++count;
  }
  return count;
}

}  // namespace

SourceUnit::SourceUnit(std::string path, std::string text, std::string language)
    : id_(path), path_(std::move(path)), language_(std::move(language)), text_(std::move(text)) {
  physicalLines_ = count_physical_lines(text_);
  loc_ = language_ == kPythonSubset ? count_loc(text_) : 0;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SourceUnit load_unit(const std::filesystem::path& file, const std::filesystem::path& root) {
  auto rel = std::filesystem::relative(file, root).generic_string();
  if (rel.empty() || rel.starts_with("..")) rel = file.generic_string();
  return SourceUnit(rel, read_file(file));
}

std::size_t offset_of(std::string_view text, int line, int col) {
  if (line < 1 || col < 1) return std::string_view::npos;
  std::size_t pos = 0;
  for (int l = 1; l < line; ++l) {
    pos = text.find('\n', pos);
    if (pos == std::string_view::npos) return std::string_view::npos;
    ++pos;
  }
  std::size_t lineEnd = text.find('\n', pos);
  if (lineEnd == std::string_view::npos) lineEnd = text.size();
  std::size_t off = pos + static_cast<std::size_t>(col - 1);
  // Column one past the newline is not addressable; the newline itself is.
  if (off > lineEnd) return std::string_view::npos;
  return off;
}

}  // namespace hybridlint
