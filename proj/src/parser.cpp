#include <algorithm>
#include <sstream>

#include "hybridlint/ast.hpp"
#include "hybridlint/frontend.hpp"
#include "hybridlint/lexer.hpp"

namespace hybridlint {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Module: return "Module";
    case NodeKind::ClassDef: return "ClassDef";
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::Param: return "Param";
    case NodeKind::Assign: return "Assign";
    case NodeKind::AugAssign: return "AugAssign";
    case NodeKind::If: return "If";
    case NodeKind::While: return "While";
    case NodeKind::For: return "For";
    case NodeKind::Return: return "Return";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::Call: return "Call";
    case NodeKind::Attribute: return "Attribute";
    case NodeKind::Name: return "Name";
    case NodeKind::Literal: return "Literal";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::Compare: return "Compare";
    case NodeKind::Subscript: return "Subscript";
    case NodeKind::Try: return "Try";
    case NodeKind::Raise: return "Raise";
    case NodeKind::Import: return "Import";
    case NodeKind::Pass: return "Pass";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
  }
  return "?";
}

const std::string& Node::attr(const std::string& key) const {
  static const std::string empty;
  auto it = attrs.find(key);
  return it == attrs.end() ? empty : it->second;
}

bool is_statement(NodeKind kind) {
  switch (kind) {
    case NodeKind::ClassDef:
    case NodeKind::FunctionDef:
    case NodeKind::Assign:
    case NodeKind::AugAssign:
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::For:
    case NodeKind::Return:
    case NodeKind::ExprStmt:
    case NodeKind::Try:
    case NodeKind::Raise:
    case NodeKind::Import:
    case NodeKind::Pass:
    case NodeKind::Break:
    case NodeKind::Continue:
      return true;
    default:
      return false;
  }
}

bool is_compound(NodeKind kind) {
  return kind == NodeKind::ClassDef || kind == NodeKind::FunctionDef || kind == NodeKind::If ||
         kind == NodeKind::While || kind == NodeKind::For || kind == NodeKind::Try;
}

NodeId Ast::add(Node node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::vector<NodeId> Ast::functions() const {
  std::vector<NodeId> out;
  walk(root(), [&](NodeId id) {
    if ((*this)[id].kind == NodeKind::FunctionDef) out.push_back(id);
  });
  return out;
}

std::vector<NodeId> Ast::classes() const {
  std::vector<NodeId> out;
  walk(root(), [&](NodeId id) {
    if ((*this)[id].kind == NodeKind::ClassDef) out.push_back(id);
  });
  return out;
}

std::string Ast::qualified_name(NodeId id) const {
  std::vector<std::string> parts;
  for (NodeId cur = id; cur != kNoNode; cur = (*this)[cur].parent) {
    const Node& n = (*this)[cur];
    if (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef)
      parts.push_back(n.attr("name"));
  }
  if (parts.empty()) return "<module>";
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += *it;
  }
  return out;
}

std::optional<NodeId> Ast::enclosing_class(NodeId fn) const {
  NodeId p = (*this)[fn].parent;
  if (p != kNoNode && (*this)[p].kind == NodeKind::ClassDef) return p;
  return std::nullopt;
}

NodeId Ast::enclosing_entity(NodeId id) const {
  for (NodeId cur = (*this)[id].parent; cur != kNoNode; cur = (*this)[cur].parent) {
    auto k = (*this)[cur].kind;
    if (k == NodeKind::FunctionDef || k == NodeKind::ClassDef) return cur;
  }
  return root();
}

std::string dotted_name(const Ast& ast, NodeId expr) {
  const Node& n = ast[expr];
  if (n.kind == NodeKind::Name) return n.attr("id");
  if (n.kind == NodeKind::Attribute) {
    std::string base = dotted_name(ast, n.children.at(0));
    if (base.empty()) return {};
    return base + "." + n.attr("attr");
  }
  return {};
}

namespace {

struct LogicalLine {
  std::size_t begin;  // index into the comment-free token vector
  std::size_t end;
  int indent;
};

bool is_open(const Token& t) {
  return t.kind == TokenKind::Punctuation && (t.lexeme == "(" || t.lexeme == "[" || t.lexeme == "{");
}
bool is_close(const Token& t) {
  return t.kind == TokenKind::Punctuation && (t.lexeme == ")" || t.lexeme == "]" || t.lexeme == "}");
}

std::string decode_string(const std::string& lexeme, bool* isF) {
  std::size_t q = lexeme.find_first_of("'\"");
  std::string prefix = lexeme.substr(0, q);
  bool raw = prefix.find_first_of("rR") != std::string::npos;
  if (isF) *isF = prefix.find_first_of("fF") != std::string::npos;
  char quote = lexeme[q];
  std::size_t qlen = lexeme.compare(q, 3, std::string(3, quote)) == 0 && lexeme.size() - q >= 6 ? 3 : 1;
  std::string body = lexeme.substr(q + qlen, lexeme.size() - q - 2 * qlen);
  if (raw) return body;
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\' || i + 1 == body.size()) {
      out += body[i];
      continue;
    }
    char e = body[++i];
    switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case '0': out += '\0'; break;
      case '\\': out += '\\'; break;
      case '\'': out += '\''; break;
      case '"': out += '"'; break;
      case '\n': break;
      default:
        out += '\\';
        out += e;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (auto& t : tokenize_python(text).tokens)
      if (t.kind != TokenKind::Comment) toks_.push_back(std::move(t));
    build_lines();
  }

  Ast run() {
    Node module;
    module.kind = NodeKind::Module;
    ast_.add(module);
    Block body{"body", {}, kNoNode, {}};
    if (!lines_.empty()) {
      if (lines_[0].indent != 1) fail("statement at column 1", toks_[lines_[0].begin].span);
      body.stmts = parse_statements(1);
    }
    add_block(0, body);
    Node& root = ast_.at(0);
    if (!toks_.empty()) root.span = Span{1, 1, toks_.back().span.endLine, toks_.back().span.endCol};
    root.head = root.span;
    return std::move(ast_);
  }

 private:
  [[noreturn]] void fail(const std::string& expected, Span span) const {
    throw ParseError(expected, span);
  }
  [[noreturn]] void fail_at(const std::string& expected, std::size_t pos) const {
    if (pos < toks_.size()) fail(expected, toks_[pos].span);
    Span s = toks_.empty() ? Span{} : toks_.back().span;
    s.startLine = s.endLine;
    s.startCol = s.endCol;
    fail(expected, s);
  }

  void build_lines() {
    std::size_t i = 0;
    while (i < toks_.size()) {
      LogicalLine line{i, i, toks_[i].span.startCol};
      int depth = 0;
      std::size_t j = i;
      while (true) {
        if (is_open(toks_[j])) ++depth;
        if (is_close(toks_[j]) && --depth < 0) fail("matching opening bracket", toks_[j].span);
        if (j + 1 >= toks_.size()) break;
        if (depth == 0 && toks_[j + 1].span.startLine != toks_[j].span.endLine) break;
        ++j;
      }
      if (depth > 0) fail("closing bracket", toks_[j].span);
      line.end = j + 1;
      lines_.push_back(line);
      i = j + 1;
    }
  }

  const Token& tok(std::size_t pos) const { return toks_.at(pos); }
  bool is_kw(std::size_t pos, std::size_t end, std::string_view kw) const {
    return pos < end && toks_[pos].is(TokenKind::Keyword, kw);
  }
  bool is_punct(std::size_t pos, std::size_t end, std::string_view p) const {
    return pos < end && toks_[pos].is(TokenKind::Punctuation, p);
  }
  bool is_op(std::size_t pos, std::size_t end, std::string_view p) const {
    return pos < end && toks_[pos].is(TokenKind::Operator, p);
  }

  // Index of the first token in [begin, end) at bracket depth 0 matching pred.
  template <typename Pred>
  std::size_t find_top(std::size_t begin, std::size_t end, Pred pred) const {
    int depth = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if (depth == 0 && pred(toks_[i])) return i;
      if (is_open(toks_[i])) ++depth;
      if (is_close(toks_[i])) --depth;
    }
    return end;
  }

  Span span_of(std::size_t begin, std::size_t end) const {
    return Span{tok(begin).span.startLine, tok(begin).span.startCol, tok(end - 1).span.endLine,
                tok(end - 1).span.endCol};
  }

  NodeId add(NodeKind kind, Span span) {
    Node n;
    n.kind = kind;
    n.span = span;
    n.head = span;
    return ast_.add(std::move(n));
  }

  void adopt(NodeId parent, NodeId child) { ast_.at(child).parent = parent; }

  void add_child(NodeId parent, NodeId child) {
    ast_.at(parent).children.push_back(child);
    adopt(parent, child);
  }

  void add_block(NodeId parent, Block block) {
    if (block.header != kNoNode) adopt(parent, block.header);
    for (NodeId s : block.stmts) adopt(parent, s);
    Node& p = ast_.at(parent);
    if (!block.stmts.empty()) p.span = cover(p.span, ast_[block.stmts.back()].span);
    p.blocks.push_back(std::move(block));
  }

  // ---- statements --------------------------------------------------------

  std::vector<NodeId> parse_statements(int indent) {
    std::vector<NodeId> out;
    while (cur_ < lines_.size() && lines_[cur_].indent >= indent) {
      if (lines_[cur_].indent > indent) fail("no unexpected indent", tok(lines_[cur_].begin).span);
      parse_line_into(out, indent);
    }
    return out;
  }

  void parse_line_into(std::vector<NodeId>& out, int indent) {
    const LogicalLine line = lines_[cur_];
    const Token& first = tok(line.begin);
    if (first.kind == TokenKind::Keyword) {
      const std::string& kw = first.lexeme;
      if (kw == "def") return out.push_back(parse_def(indent));
      if (kw == "class") return out.push_back(parse_class(indent));
      if (kw == "if") return out.push_back(parse_if(indent, line.begin));
      if (kw == "while") return out.push_back(parse_while(indent));
      if (kw == "for") return out.push_back(parse_for(indent));
      if (kw == "try") return out.push_back(parse_try(indent));
      if (kw == "elif" || kw == "else" || kw == "except" || kw == "finally")
        fail("statement (dangling '" + kw + "')", first.span);
    }
    ++cur_;
    parse_simple_run(line.begin, line.end, out);
  }

  // Semicolon-separated simple statements.
  void parse_simple_run(std::size_t begin, std::size_t end, std::vector<NodeId>& out) {
    std::size_t start = begin;
    while (start < end) {
      std::size_t semi =
          find_top(start, end, [](const Token& t) { return t.is(TokenKind::Punctuation, ";"); });
      if (semi == start) fail_at("statement", start);
      out.push_back(parse_simple(start, semi));
      start = semi == end ? end : semi + 1;
    }
  }

  // Header colon at depth 0 within the current line.
  std::size_t header_colon(const LogicalLine& line, std::size_t from) const {
    std::size_t c = find_top(from, line.end, [](const Token& t) { return t.is(TokenKind::Punctuation, ":"); });
    if (c == line.end) fail_at("':'", line.end - 1);
    return c;
  }

  // Suite after a header whose colon is at `colon`. Advances past the header line.
  std::vector<NodeId> parse_suite(int indent, const LogicalLine& line, std::size_t colon) {
    ++cur_;
    std::vector<NodeId> body;
    if (colon + 1 < line.end) {
      parse_simple_run(colon + 1, line.end, body);
      return body;
    }
    if (cur_ >= lines_.size() || lines_[cur_].indent <= indent)
      fail_at("indented block", cur_ < lines_.size() ? lines_[cur_].begin : toks_.size());
    body = parse_statements(lines_[cur_].indent);
    return body;
  }

  NodeId parse_def(int indent) {
    const LogicalLine line = lines_[cur_];
    std::size_t p = line.begin + 1;
    if (p >= line.end || tok(p).kind != TokenKind::Identifier) fail_at("function name", p);
    NodeId fn = add(NodeKind::FunctionDef, tok(line.begin).span);
    ast_.at(fn).attrs["name"] = tok(p).lexeme;
    ++p;
    if (!is_punct(p, line.end, "(")) fail_at("'('", p);
    std::size_t close = matching(p, line.end);
    parse_params(fn, p + 1, close);
    std::size_t colon = header_colon(line, close + 1);
    if (colon != close + 1 && !is_op(close + 1, line.end, "->")) fail_at("':'", close + 1);
    ast_.at(fn).head = span_of(line.begin, colon + 1);
    ast_.at(fn).span = ast_[fn].head;
    add_block(fn, Block{"body", parse_suite(indent, line, colon), kNoNode, {}});
    return fn;
  }

  std::size_t matching(std::size_t open, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      if (is_open(toks_[i])) ++depth;
      if (is_close(toks_[i]) && --depth == 0) return i;
    }
    fail_at("closing bracket", end);
  }

  void parse_params(NodeId fn, std::size_t begin, std::size_t end) {
    std::size_t p = begin;
    while (p < end) {
      std::size_t comma =
          find_top(p, end, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
      std::size_t q = p;
      std::string star;
      if (is_op(q, comma, "*") || is_op(q, comma, "**")) star = tok(q++).lexeme;
      if (q >= comma || tok(q).kind != TokenKind::Identifier) fail_at("parameter name", q);
      NodeId param = add(NodeKind::Param, span_of(p, q + 1));
      ast_.at(param).attrs["name"] = tok(q).lexeme;
      if (!star.empty()) ast_.at(param).attrs["star"] = star;
      ++q;
      if (is_punct(q, comma, ":")) {
        q = find_top(q, comma, [](const Token& t) { return t.is(TokenKind::Operator, "="); });
      }
      if (is_op(q, comma, "=")) {
        NodeId def = parse_expr(q + 1, comma);
        add_child(param, def);
        ast_.at(param).span = span_of(p, comma);
      } else if (q != comma) {
        fail_at("',' or ')'", q);
      }
      ast_.at(param).head = ast_[param].span;
      add_child(fn, param);
      p = comma + 1;
    }
  }

  NodeId parse_class(int indent) {
    const LogicalLine line = lines_[cur_];
    std::size_t p = line.begin + 1;
    if (p >= line.end || tok(p).kind != TokenKind::Identifier) fail_at("class name", p);
    NodeId cls = add(NodeKind::ClassDef, tok(line.begin).span);
    ast_.at(cls).attrs["name"] = tok(p).lexeme;
    ++p;
    if (is_punct(p, line.end, "(")) {
      std::size_t close = matching(p, line.end);
      for (NodeId b : parse_expr_items(p + 1, close)) add_child(cls, b);
      p = close + 1;
    }
    if (!is_punct(p, line.end, ":")) fail_at("':'", p);
    ast_.at(cls).head = span_of(line.begin, p + 1);
    ast_.at(cls).span = ast_[cls].head;
    add_block(cls, Block{"body", parse_suite(indent, line, p), kNoNode, {}});
    return cls;
  }

  NodeId parse_if(int indent, std::size_t kwPos) {
    const LogicalLine line = lines_[cur_];
    std::size_t colon = header_colon(line, kwPos + 1);
    if (colon == kwPos + 1) fail_at("condition", colon);
    NodeId node = add(NodeKind::If, tok(kwPos).span);
    add_child(node, parse_expr(kwPos + 1, colon));
    ast_.at(node).head = span_of(kwPos, colon + 1);
    ast_.at(node).span = ast_[node].head;
    add_block(node, Block{"body", parse_suite(indent, line, colon), kNoNode, {}});
    if (cur_ < lines_.size() && lines_[cur_].indent == indent) {
      const LogicalLine next = lines_[cur_];
      if (is_kw(next.begin, next.end, "elif")) {
        NodeId inner = parse_if(indent, next.begin);
        ast_.at(inner).attrs["elif"] = "1";
        add_block(node, Block{"orelse", {inner}, kNoNode, {}});
      } else if (is_kw(next.begin, next.end, "else")) {
        if (!is_punct(next.begin + 1, next.end, ":")) fail_at("':'", next.begin + 1);
        add_block(node, Block{"orelse", parse_suite(indent, next, next.begin + 1), kNoNode, {}});
      }
    }
    return node;
  }

  NodeId parse_while(int indent) {
    const LogicalLine line = lines_[cur_];
    std::size_t colon = header_colon(line, line.begin + 1);
    if (colon == line.begin + 1) fail_at("condition", colon);
    NodeId node = add(NodeKind::While, tok(line.begin).span);
    add_child(node, parse_expr(line.begin + 1, colon));
    ast_.at(node).head = span_of(line.begin, colon + 1);
    ast_.at(node).span = ast_[node].head;
    add_block(node, Block{"body", parse_suite(indent, line, colon), kNoNode, {}});
    if (cur_ < lines_.size() && lines_[cur_].indent == indent &&
        is_kw(lines_[cur_].begin, lines_[cur_].end, "else"))
      fail("statement (loop 'else' is not supported)", tok(lines_[cur_].begin).span);
    return node;
  }

  NodeId parse_for(int indent) {
    const LogicalLine line = lines_[cur_];
    std::size_t in = find_top(line.begin + 1, line.end,
                              [](const Token& t) { return t.is(TokenKind::Keyword, "in"); });
    if (in == line.end || in == line.begin + 1) fail_at("'in'", in);
    std::size_t colon = header_colon(line, in + 1);
    if (colon == in + 1) fail_at("iterable", colon);
    NodeId node = add(NodeKind::For, tok(line.begin).span);
    NodeId target = parse_expr_list(line.begin + 1, in);
    mark_store(target);
    add_child(node, target);
    add_child(node, parse_expr_list(in + 1, colon));
    ast_.at(node).head = span_of(line.begin, colon + 1);
    ast_.at(node).span = ast_[node].head;
    add_block(node, Block{"body", parse_suite(indent, line, colon), kNoNode, {}});
    if (cur_ < lines_.size() && lines_[cur_].indent == indent &&
        is_kw(lines_[cur_].begin, lines_[cur_].end, "else"))
      fail("statement (loop 'else' is not supported)", tok(lines_[cur_].begin).span);
    return node;
  }

  NodeId parse_try(int indent) {
    const LogicalLine line = lines_[cur_];
    if (!is_punct(line.begin + 1, line.end, ":")) fail_at("':'", line.begin + 1);
    NodeId node = add(NodeKind::Try, span_of(line.begin, line.begin + 2));
    add_block(node, Block{"body", parse_suite(indent, line, line.begin + 1), kNoNode, {}});
    bool handled = false;
    while (cur_ < lines_.size() && lines_[cur_].indent == indent &&
           is_kw(lines_[cur_].begin, lines_[cur_].end, "except")) {
      const LogicalLine h = lines_[cur_];
      std::size_t colon = header_colon(h, h.begin + 1);
      Block block{"except", {}, kNoNode, {}};
      std::size_t exprEnd = colon;
      std::size_t as = find_top(h.begin + 1, colon, [](const Token& t) { return t.is(TokenKind::Keyword, "as"); });
      if (as != colon) {
        if (as + 2 != colon || tok(as + 1).kind != TokenKind::Identifier) fail_at("name after 'as'", as + 1);
        block.binding = tok(as + 1).lexeme;
        exprEnd = as;
      }
      if (exprEnd > h.begin + 1) block.header = parse_expr(h.begin + 1, exprEnd);
      block.stmts = parse_suite(indent, h, colon);
      add_block(node, std::move(block));
      handled = true;
    }
    if (cur_ < lines_.size() && lines_[cur_].indent == indent &&
        is_kw(lines_[cur_].begin, lines_[cur_].end, "finally")) {
      const LogicalLine f = lines_[cur_];
      if (!is_punct(f.begin + 1, f.end, ":")) fail_at("':'", f.begin + 1);
      add_block(node, Block{"finally", parse_suite(indent, f, f.begin + 1), kNoNode, {}});
      handled = true;
    }
    if (!handled) fail_at("'except' or 'finally'", cur_ < lines_.size() ? lines_[cur_].begin : toks_.size());
    return node;
  }

  NodeId parse_simple(std::size_t begin, std::size_t end) {
    const Token& first = tok(begin);
    Span span = span_of(begin, end);
    if (first.kind == TokenKind::Keyword) {
      const std::string& kw = first.lexeme;
      auto bare = [&](NodeKind k) {
        if (end != begin + 1) fail_at("end of statement", begin + 1);
        return add(k, span);
      };
      if (kw == "pass") return bare(NodeKind::Pass);
      if (kw == "break") return bare(NodeKind::Break);
      if (kw == "continue") return bare(NodeKind::Continue);
      if (kw == "return" || kw == "raise") {
        NodeId n = add(kw == "return" ? NodeKind::Return : NodeKind::Raise, span);
        if (end > begin + 1) {
          std::size_t valueEnd = end;
          if (kw == "raise")
            valueEnd = find_top(begin + 1, end, [](const Token& t) { return t.is(TokenKind::Keyword, "from"); });
          add_child(n, kw == "return" ? parse_expr_list(begin + 1, valueEnd) : parse_expr(begin + 1, valueEnd));
          if (valueEnd != end) add_child(n, parse_expr(valueEnd + 1, end));
        }
        return n;
      }
      if (kw == "import" || kw == "from") return parse_import(begin, end);
    }
    std::size_t aug = find_top(begin, end, [](const Token& t) {
      return t.kind == TokenKind::Operator && t.lexeme.size() >= 2 && t.lexeme.back() == '=' &&
             t.lexeme != "==" && t.lexeme != "!=" && t.lexeme != "<=" && t.lexeme != ">=";
    });
    if (aug != end) {
      if (aug == begin || aug + 1 == end) fail_at("operand", aug == begin ? begin : end);
      NodeId n = add(NodeKind::AugAssign, span);
      std::string op = tok(aug).lexeme;
      op.pop_back();
      ast_.at(n).attrs["op"] = op;
      NodeId target = parse_expr(begin, aug);
      if (ast_[target].kind != NodeKind::Name && ast_[target].kind != NodeKind::Attribute &&
          ast_[target].kind != NodeKind::Subscript)
        fail("assignable target", ast_[target].span);
      mark_store(target);
      add_child(n, target);
      add_child(n, parse_expr_list(aug + 1, end));
      return n;
    }
    std::vector<std::size_t> eqs;
    for (std::size_t p = begin;;) {
      std::size_t e = find_top(p, end, [](const Token& t) { return t.is(TokenKind::Operator, "="); });
      if (e == end) break;
      eqs.push_back(e);
      p = e + 1;
    }
    if (!eqs.empty()) {
      NodeId n = add(NodeKind::Assign, span);
      std::size_t p = begin;
      for (std::size_t e : eqs) {
        if (e == p) fail_at("assignment target", e);
        NodeId target = parse_expr_list(p, e);
        check_target(target);
        mark_store(target);
        add_child(n, target);
        p = e + 1;
      }
      if (p == end) fail_at("value", end);
      add_child(n, parse_expr_list(p, end));
      ast_.at(n).attrs["ntargets"] = std::to_string(eqs.size());
      return n;
    }
    NodeId n = add(NodeKind::ExprStmt, span);
    add_child(n, parse_expr_list(begin, end));
    return n;
  }

  void check_target(NodeId t) {
    const Node& n = ast_[t];
    switch (n.kind) {
      case NodeKind::Name:
      case NodeKind::Attribute:
      case NodeKind::Subscript:
        return;
      case NodeKind::Literal:
        if (n.attr("type") == "tuple" || n.attr("type") == "list") {
          for (NodeId c : n.children) check_target(c);
          return;
        }
        break;
      default:
        break;
    }
    fail("assignable target", n.span);
  }

  void mark_store(NodeId t) {
    Node& n = ast_.at(t);
    if (n.kind == NodeKind::Name) n.attrs["ctx"] = "store";
    if (n.kind == NodeKind::Literal)
      for (NodeId c : std::vector<NodeId>(n.children)) mark_store(c);
  }

  NodeId parse_import(std::size_t begin, std::size_t end) {
    NodeId n = add(NodeKind::Import, span_of(begin, end));
    std::size_t p = begin + 1;
    auto dotted = [&](std::size_t& q) {
      if (q >= end || tok(q).kind != TokenKind::Identifier) fail_at("module name", q);
      std::string name = tok(q++).lexeme;
      while (is_punct(q, end, ".")) {
        if (q + 1 >= end || tok(q + 1).kind != TokenKind::Identifier) fail_at("name", q + 1);
        name += "." + tok(q + 1).lexeme;
        q += 2;
      }
      return name;
    };
    std::vector<std::string> names, bindings;
    if (tok(begin).lexeme == "from") {
      ast_.at(n).attrs["from"] = dotted(p);
      if (!is_kw(p, end, "import")) fail_at("'import'", p);
      ++p;
      if (is_op(p, end, "*")) {
        if (p + 1 != end) fail_at("end of statement", p + 1);
        names.push_back("*");
        p = end;
      }
      bool paren = is_punct(p, end, "(");
      if (paren) {
        if (!is_punct(end - 1, end, ")")) fail_at("')'", end - 1);
        ++p;
        --end;
      }
      while (p < end) {
        if (tok(p).kind != TokenKind::Identifier) fail_at("name", p);
        std::string name = tok(p++).lexeme;
        std::string bind = name;
        if (is_kw(p, end, "as")) {
          if (p + 1 >= end || tok(p + 1).kind != TokenKind::Identifier) fail_at("alias", p + 1);
          bind = tok(p + 1).lexeme;
          p += 2;
        }
        names.push_back(name);
        bindings.push_back(bind);
        if (p < end && !is_punct(p, end, ",")) fail_at("','", p);
        ++p;
      }
    } else {
      while (p < end) {
        std::string name = dotted(p);
        std::string bind = name.substr(0, name.find('.'));
        if (is_kw(p, end, "as")) {
          if (p + 1 >= end || tok(p + 1).kind != TokenKind::Identifier) fail_at("alias", p + 1);
          bind = tok(p + 1).lexeme;
          p += 2;
        }
        names.push_back(name);
        bindings.push_back(bind);
        if (p < end && !is_punct(p, end, ",")) fail_at("','", p);
        ++p;
      }
    }
    if (names.empty()) fail_at("module name", begin + 1);
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
      return s;
    };
    ast_.at(n).attrs["names"] = join(names);
    ast_.at(n).attrs["bindings"] = join(bindings);
    return n;
  }

  // ---- expressions -------------------------------------------------------

  std::vector<NodeId> parse_expr_items(std::size_t begin, std::size_t end) {
    std::vector<NodeId> items;
    std::size_t p = begin;
    while (p < end) {
      std::size_t comma =
          find_top(p, end, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
      if (comma == p) fail_at("expression", p);
      items.push_back(parse_expr(p, comma));
      p = comma + 1;
    }
    return items;
  }

  // A comma-separated list at depth 0 becomes a tuple literal.
  NodeId parse_expr_list(std::size_t begin, std::size_t end) {
    if (begin >= end) fail_at("expression", begin);
    std::size_t comma = find_top(begin, end, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
    if (comma == end) return parse_expr(begin, end);
    NodeId tuple = add(NodeKind::Literal, span_of(begin, end));
    ast_.at(tuple).attrs["type"] = "tuple";
    for (NodeId item : parse_expr_items(begin, end)) add_child(tuple, item);
    return tuple;
  }

  NodeId parse_expr(std::size_t begin, std::size_t end) {
    if (begin >= end) fail_at("expression", begin);
    pos_ = begin;
    end_ = end;
    NodeId e = parse_or();
    if (pos_ != end_) fail_at("end of expression", pos_);
    return e;
  }

  NodeId binop(const std::string& op, NodeId lhs, NodeId rhs) {
    NodeId n = add(NodeKind::BinOp, cover(ast_[lhs].span, ast_[rhs].span));
    ast_.at(n).attrs["op"] = op;
    add_child(n, lhs);
    add_child(n, rhs);
    return n;
  }

  NodeId unary(const std::string& op, std::size_t opPos, NodeId operand) {
    NodeId n = add(NodeKind::BinOp, cover(tok(opPos).span, ast_[operand].span));
    ast_.at(n).attrs["op"] = op;
    ast_.at(n).attrs["unary"] = "1";
    add_child(n, operand);
    return n;
  }

  NodeId parse_or() {
    NodeId lhs = parse_and();
    while (is_kw(pos_, end_, "or")) {
      ++pos_;
      lhs = binop("or", lhs, parse_and());
    }
    return lhs;
  }

  NodeId parse_and() {
    NodeId lhs = parse_not();
    while (is_kw(pos_, end_, "and")) {
      ++pos_;
      lhs = binop("and", lhs, parse_not());
    }
    return lhs;
  }

  NodeId parse_not() {
    if (is_kw(pos_, end_, "not")) {
      std::size_t at = pos_++;
      return unary("not", at, parse_not());
    }
    return parse_comparison();
  }

  std::string compare_op() {
    if (pos_ >= end_) return {};
    const Token& t = tok(pos_);
    if (t.kind == TokenKind::Operator &&
        (t.lexeme == "==" || t.lexeme == "!=" || t.lexeme == "<" || t.lexeme == ">" ||
         t.lexeme == "<=" || t.lexeme == ">=")) {
      ++pos_;
      return t.lexeme;
    }
    if (t.is(TokenKind::Keyword, "in")) {
      ++pos_;
      return "in";
    }
    if (t.is(TokenKind::Keyword, "not") && is_kw(pos_ + 1, end_, "in")) {
      pos_ += 2;
      return "not in";
    }
    if (t.is(TokenKind::Keyword, "is")) {
      ++pos_;
      if (is_kw(pos_, end_, "not")) {
        ++pos_;
        return "is not";
      }
      return "is";
    }
    return {};
  }

  NodeId parse_comparison() {
    NodeId first = parse_binary(0);
    std::string op = compare_op();
    if (op.empty()) return first;
    NodeId n = add(NodeKind::Compare, ast_[first].span);
    add_child(n, first);
    std::string ops;
    while (!op.empty()) {
      ops += (ops.empty() ? "" : ",") + op;
      NodeId rhs = parse_binary(0);
      add_child(n, rhs);
      ast_.at(n).span = cover(ast_[n].span, ast_[rhs].span);
      op = compare_op();
    }
    ast_.at(n).attrs["ops"] = ops;
    ast_.at(n).head = ast_[n].span;
    return n;
  }

  // Precedence climbing over the binary operator tiers.
  NodeId parse_binary(int tier) {
    static const std::vector<std::vector<std::string>> tiers = {
        {"|"}, {"^"}, {"&"}, {"<<", ">>"}, {"+", "-"}, {"*", "/", "//", "%"}};
    if (tier == static_cast<int>(tiers.size())) return parse_unary();
    NodeId lhs = parse_binary(tier + 1);
    while (pos_ < end_ && tok(pos_).kind == TokenKind::Operator) {
      const auto& ops = tiers[static_cast<std::size_t>(tier)];
      if (std::find(ops.begin(), ops.end(), tok(pos_).lexeme) == ops.end()) break;
      std::string op = tok(pos_++).lexeme;
      lhs = binop(op, lhs, parse_binary(tier + 1));
    }
    return lhs;
  }

  NodeId parse_unary() {
    if (is_op(pos_, end_, "-") || is_op(pos_, end_, "+") || is_op(pos_, end_, "~")) {
      std::size_t at = pos_++;
      return unary(tok(at).lexeme, at, parse_unary());
    }
    NodeId base = parse_primary();
    if (is_op(pos_, end_, "**")) {
      ++pos_;
      return binop("**", base, parse_unary());
    }
    return base;
  }

  NodeId parse_primary() {
    NodeId e = parse_atom();
    while (pos_ < end_) {
      if (is_punct(pos_, end_, ".")) {
        if (pos_ + 1 >= end_ || tok(pos_ + 1).kind != TokenKind::Identifier) fail_at("attribute name", pos_ + 1);
        NodeId a = add(NodeKind::Attribute, cover(ast_[e].span, tok(pos_ + 1).span));
        ast_.at(a).attrs["attr"] = tok(pos_ + 1).lexeme;
        add_child(a, e);
        e = a;
        pos_ += 2;
      } else if (is_punct(pos_, end_, "(")) {
        std::size_t close = matching(pos_, end_);
        NodeId call = add(NodeKind::Call, cover(ast_[e].span, tok(close).span));
        add_child(call, e);
        std::size_t saveEnd = end_;
        parse_call_args(call, pos_ + 1, close);
        end_ = saveEnd;
        pos_ = close + 1;
        e = call;
      } else if (is_punct(pos_, end_, "[")) {
        std::size_t close = matching(pos_, end_);
        if (close == pos_ + 1) fail_at("index", close);
        if (find_top(pos_ + 1, close, [](const Token& t) { return t.is(TokenKind::Punctuation, ":"); }) != close)
          fail("index (slices are not supported)", tok(pos_).span);
        NodeId s = add(NodeKind::Subscript, cover(ast_[e].span, tok(close).span));
        add_child(s, e);
        std::size_t saveEnd = end_;
        add_child(s, parse_expr_list(pos_ + 1, close));
        end_ = saveEnd;
        pos_ = close + 1;
        e = s;
      } else {
        break;
      }
    }
    return e;
  }

  void parse_call_args(NodeId call, std::size_t begin, std::size_t end) {
    std::size_t p = begin;
    while (p < end) {
      std::size_t comma =
          find_top(p, end, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
      if (comma == p) fail_at("argument", p);
      std::size_t q = p;
      std::string keyword, star;
      if (tok(q).kind == TokenKind::Identifier && is_op(q + 1, comma, "=")) {
        keyword = tok(q).lexeme;
        q += 2;
      } else if (is_op(q, comma, "*") || is_op(q, comma, "**")) {
        star = tok(q++).lexeme;
      }
      NodeId arg = parse_expr(q, comma);
      if (!keyword.empty()) {
        ast_.at(arg).attrs["keyword"] = keyword;
        ast_.at(arg).attrs["keywordCol"] = std::to_string(tok(p).span.startCol);
      }
      if (!star.empty()) ast_.at(arg).attrs["star"] = star;
      add_child(call, arg);
      p = comma + 1;
    }
  }

  NodeId parse_atom() {
    if (pos_ >= end_) fail_at("expression", pos_);
    const Token& t = tok(pos_);
    switch (t.kind) {
      case TokenKind::Identifier: {
        NodeId n = add(NodeKind::Name, t.span);
        ast_.at(n).attrs["id"] = t.lexeme;
        ast_.at(n).attrs["ctx"] = "load";
        ++pos_;
        return n;
      }
      case TokenKind::NumberLiteral: {
        NodeId n = add(NodeKind::Literal, t.span);
        ast_.at(n).attrs["type"] = "num";
        ast_.at(n).attrs["value"] = t.lexeme;
        ++pos_;
        return n;
      }
      case TokenKind::StringLiteral:
        return parse_strings();
      case TokenKind::Keyword: {
        std::string type;
        if (t.lexeme == "True" || t.lexeme == "False") type = "bool";
        if (t.lexeme == "None") type = "none";
        if (type.empty()) fail("expression", t.span);
        NodeId n = add(NodeKind::Literal, t.span);
        ast_.at(n).attrs["type"] = type;
        ast_.at(n).attrs["value"] = t.lexeme;
        ++pos_;
        return n;
      }
      case TokenKind::Punctuation:
        if (t.lexeme == "(" || t.lexeme == "[" || t.lexeme == "{") return parse_display();
        [[fallthrough]];
      default:
        fail("expression", t.span);
    }
  }

  // Adjacent string tokens concatenate into one literal.
  NodeId parse_strings() {
    std::size_t first = pos_;
    std::string value, raw;
    bool anyF = false;
    std::vector<std::size_t> parts;
    while (pos_ < end_ && tok(pos_).kind == TokenKind::StringLiteral) {
      bool isF = false;
      value += decode_string(tok(pos_).lexeme, &isF);
      anyF = anyF || isF;
      if (!raw.empty()) raw += ' ';
      raw += tok(pos_).lexeme;
      parts.push_back(pos_);
      ++pos_;
    }
    NodeId n = add(NodeKind::Literal, span_of(first, pos_));
    ast_.at(n).attrs["type"] = "str";
    ast_.at(n).attrs["value"] = value;
    ast_.at(n).attrs["raw"] = raw;
    if (anyF) {
      ast_.at(n).attrs["fstring"] = "1";
      std::size_t saveEnd = end_, savePos = pos_;
      for (std::size_t idx : parts) parse_fstring_fields(n, tok(idx));
      end_ = saveEnd;
      pos_ = savePos;
    }
    return n;
  }

  // Replacement fields `{expr}` become children of the literal, with spans
  // mapped back into the enclosing file.
  void parse_fstring_fields(NodeId lit, const Token t) {
    const std::string& lex = t.lexeme;
    std::size_t q = lex.find_first_of("'\"");
    if (lex.substr(0, q).find_first_of("fF") == std::string::npos) return;
    for (std::size_t i = q; i < lex.size(); ++i) {
      if (lex[i] != '{') continue;
      if (i + 1 < lex.size() && lex[i + 1] == '{') {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      int depth = 0;
      std::size_t stop = std::string::npos;
      for (; j < lex.size(); ++j) {
        char c = lex[j];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if ((c == ')' || c == ']') && depth > 0) --depth;
        if (c == '}' && depth > 0) {
          --depth;
          continue;
        }
        if (depth == 0 && stop == std::string::npos &&
            (c == ':' || (c == '!' && j + 1 < lex.size() && lex[j + 1] != '='))) stop = j;
        if (c == '}' && depth == 0) break;
      }
      if (j >= lex.size()) fail("'}' in f-string", t.span);
      std::size_t exprEnd = stop == std::string::npos ? j : stop;
      std::string inner = lex.substr(i + 1, exprEnd - i - 1);
      // Position of the field start inside the file.
      int line = t.span.startLine, col = t.span.startCol;
      for (std::size_t k = 0; k <= i; ++k) {
        if (lex[k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      TokenStream sub;
      try {
        sub = tokenize_python(inner);
      } catch (const LexError& e) {
        fail("valid f-string expression", t.span);
      }
      std::vector<Token> shifted;
      for (auto tk : sub.tokens) {
        if (tk.kind == TokenKind::Comment) fail("f-string expression", t.span);
        auto shift = [&](int& l, int& c) {
          if (l == 1) c += col - 1;
          l += line - 1;
        };
        shift(tk.span.startLine, tk.span.startCol);
        shift(tk.span.endLine, tk.span.endCol);
        shifted.push_back(std::move(tk));
      }
      if (shifted.empty()) fail("f-string expression", t.span);
      std::size_t base = toks_.size();
      for (auto& tk : shifted) toks_.push_back(std::move(tk));
      NodeId e = parse_expr(base, toks_.size());
      toks_.resize(base);
      add_child(lit, e);
      i = j;
    }
  }

  NodeId parse_display() {
    const Token& open = tok(pos_);
    std::size_t close = matching(pos_, end_);
    std::size_t saveEnd = end_;
    std::size_t inner = pos_ + 1;
    Span span = cover(open.span, tok(close).span);
    NodeId n = kNoNode;
    if (open.lexeme == "(") {
      std::size_t comma = find_top(inner, close, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
      if (inner != close && comma == close) {
        n = parse_expr(inner, close);
        ast_.at(n).span = span;
        ast_.at(n).head = span;
        ast_.at(n).attrs["parens"] = "1";
      } else {
        n = add(NodeKind::Literal, span);
        ast_.at(n).attrs["type"] = "tuple";
        for (NodeId item : parse_expr_items(inner, close)) add_child(n, item);
      }
    } else if (open.lexeme == "[") {
      n = add(NodeKind::Literal, span);
      ast_.at(n).attrs["type"] = "list";
      for (NodeId item : parse_expr_items(inner, close)) add_child(n, item);
    } else {
      n = add(NodeKind::Literal, span);
      ast_.at(n).attrs["type"] = "dict";
      std::size_t p = inner;
      while (p < close) {
        std::size_t comma = find_top(p, close, [](const Token& t) { return t.is(TokenKind::Punctuation, ","); });
        std::size_t colon = find_top(p, comma, [](const Token& t) { return t.is(TokenKind::Punctuation, ":"); });
        if (colon == comma || colon == p || colon + 1 == comma) fail_at("key: value", p);
        add_child(n, parse_expr(p, colon));
        add_child(n, parse_expr(colon + 1, comma));
        p = comma + 1;
      }
    }
    end_ = saveEnd;
    pos_ = close + 1;
    return n;
  }

  std::vector<Token> toks_;
  std::vector<LogicalLine> lines_;
  std::size_t cur_ = 0;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  Ast ast_;
};

}  // namespace

Ast parse_python(std::string_view text) { return Parser(text).run(); }

Ast parse(const SourceUnit& unit) {
  return FrontEndRegistry::instance().get(unit.language()).parse(unit);
}

}  // namespace hybridlint
