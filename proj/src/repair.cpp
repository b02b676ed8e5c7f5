#include "hybridlint/repair.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "hybridlint/metrics.hpp"

namespace hybridlint {

std::string_view to_string(PatchKind kind) {
  switch (kind) {
    case PatchKind::ExtractMethod: return "extract-method";
    case PatchKind::RelocateSecret: return "relocate-secret";
    case PatchKind::ParameterizeQuery: return "parameterize-query";
    case PatchKind::Advisory: return "advisory";
  }
  return "?";
}

std::uint64_t patch_hash(const Patch& p) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(to_string(p.kind));
  mix(p.description);
  for (const auto& e : p.edits) {
    mix(e.span.str());
    mix(e.replacement);
  }
  return h;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p < text.size()) {
    std::size_t nl = text.find('\n', p);
    if (nl == std::string_view::npos) {
      out.emplace_back(text.substr(p));
      break;
    }
    out.emplace_back(text.substr(p, nl - p));
    p = nl + 1;
  }
  return out;
}

// Offset of a span boundary; a line one past the last is valid at column 1.
std::size_t boundary(std::string_view text, int line, int col, const Span& s) {
  std::size_t off = offset_of(text, line, col);
  if (off == std::string_view::npos) throw OutOfBounds(s);
  return off;
}

std::pair<std::size_t, std::size_t> offsets(std::string_view text, const Span& s) {
  std::size_t a = boundary(text, s.startLine, s.startCol, s);
  std::size_t b = boundary(text, s.endLine, s.endCol, s);
  if (b < a) throw OutOfBounds(s);
  return {a, b};
}

std::string python_string(std::string_view s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

NodeId top_level_ancestor(const Ast& ast, NodeId id) {
  while (ast[id].parent != kNoNode && ast[id].parent != ast.root()) id = ast[id].parent;
  return id;
}

bool has_enclosing_function(const Ast& ast, NodeId fn) {
  for (NodeId p = ast[fn].parent; p != kNoNode; p = ast[p].parent)
    if (ast[p].kind == NodeKind::FunctionDef) return true;
  return false;
}

// Insertion point for a new import: before the first top-level statement that
// is not a module docstring, or at the end of the text.
Span import_point(const Ast& ast, std::string_view text) {
  const Node& mod = ast[ast.root()];
  if (!mod.blocks.empty()) {
    for (NodeId s : mod.blocks[0].stmts) {
      const Node& n = ast[s];
      bool docstring = n.kind == NodeKind::ExprStmt && ast[n.children[0]].kind == NodeKind::Literal &&
                       ast[n.children[0]].attr("type") == "str";
      if (docstring) continue;
      return {n.span.startLine, 1, n.span.startLine, 1};
    }
  }
  auto lines = split_lines(text);
  if (!text.empty() && text.back() == '\n') {
    int l = static_cast<int>(lines.size()) + 1;
    return {l, 1, l, 1};
  }
  int l = std::max<int>(1, static_cast<int>(lines.size()));
  int c = lines.empty() ? 1 : static_cast<int>(lines.back().size()) + 1;
  return {l, c, l, c};
}

std::optional<Edit> import_edit(const UnitViews& v, const std::string& module) {
  if (import_bindings(v.ast).count(module)) return std::nullopt;
  Span at = import_point(v.ast, v.unit->text());
  std::string text = "import " + module + "\n";
  if (at.startCol != 1) text = "\n" + text;
  return Edit{at, text};
}

}  // namespace

std::size_t edit_size(std::string_view text, const Patch& patch) {
  std::size_t n = 0;
  for (const auto& e : patch.edits) {
    auto [a, b] = offsets(text, e.span);
    n += (b - a) + e.replacement.size();
  }
  return n;
}

std::string apply_patch(std::string_view text, const Patch& patch) {
  struct Located {
    std::size_t a, b;
    const Edit* edit;
  };
  std::vector<Located> es;
  for (const auto& e : patch.edits) {
    auto [a, b] = offsets(text, e.span);
    es.push_back({a, b, &e});
  }
  std::stable_sort(es.begin(), es.end(), [](const Located& x, const Located& y) {
    if (x.a != y.a) return x.a < y.a;
    return (x.b - x.a) < (y.b - y.a);  // an insertion precedes a replacement starting at the same point
  });
  for (std::size_t i = 1; i < es.size(); ++i) {
    const Located& p = es[i - 1];
    const Located& c = es[i];
    bool pointTouch = p.a == p.b && p.a == c.a && c.a != c.b;
    if (c.a < p.b || (c.a == p.a && !pointTouch)) throw OverlappingEdits(p.edit->span, c.edit->span);
  }
  std::string out(text);
  for (auto it = es.rbegin(); it != es.rend(); ++it) out.replace(it->a, it->b - it->a, it->edit->replacement);
  return out;
}

// ---- extract method ------------------------------------------------------------

std::vector<NodeId> region_statements(const Ast& ast, const Region& r) {
  const auto& stmts = ast[r.owner].blocks.at(static_cast<std::size_t>(r.block)).stmts;
  std::vector<NodeId> out;
  for (std::size_t i = r.first; i <= r.last; ++i)
    ast.walk(stmts[i], [&](NodeId id) {
      if (is_statement(ast[id].kind)) out.push_back(id);
    }, false);
  return out;
}

Span region_span(const Ast& ast, const Region& r) {
  const auto& stmts = ast[r.owner].blocks.at(static_cast<std::size_t>(r.block)).stmts;
  return cover(ast[stmts[r.first]].span, ast[stmts[r.last]].span);
}

namespace {

bool escapes(NodeKind k) { return k == NodeKind::Return || k == NodeKind::Break || k == NodeKind::Continue; }

bool simple(NodeKind k) { return !is_compound(k) && k != NodeKind::FunctionDef && k != NodeKind::ClassDef; }

}  // namespace

std::vector<Region> extraction_candidates(const Ast& ast, NodeId fn) {
  std::vector<Region> out;
  std::set<std::pair<Span, Span>> seen;
  auto push = [&](const Region& r) {
    const auto& stmts = ast[r.owner].blocks[static_cast<std::size_t>(r.block)].stmts;
    if (r.owner == fn && r.first == 0 && r.last + 1 == stmts.size()) return;
    if (seen.insert({ast[stmts[r.first]].span, ast[stmts[r.last]].span}).second) out.push_back(r);
  };
  ast.walk(fn, [&](NodeId id) {
    const Node& n = ast[id];
    if (id != fn && (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef)) return;
    for (std::size_t b = 0; b < n.blocks.size(); ++b) {
      const auto& stmts = n.blocks[b].stmts;
      if (stmts.empty()) continue;
      if (n.kind == NodeKind::If || n.kind == NodeKind::For || n.kind == NodeKind::While)
        push({id, static_cast<int>(b), 0, stmts.size() - 1});
      std::size_t i = 0;
      while (i < stmts.size()) {
        if (!simple(ast[stmts[i]].kind) || escapes(ast[stmts[i]].kind)) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j + 1 < stmts.size() && simple(ast[stmts[j + 1]].kind) && !escapes(ast[stmts[j + 1]].kind)) ++j;
        if (j - i + 1 >= 5) push({id, static_cast<int>(b), i, j});
        i = j + 1;
      }
    }
  }, false);
  std::sort(out.begin(), out.end(), [&](const Region& a, const Region& b) {
    return region_span(ast, a) < region_span(ast, b);
  });
  return out;
}

Signature region_signature(const Ast& ast, const FunctionViews& fv, const Region& r) {
  if (has_enclosing_function(ast, fv.fn)) throw NoExtractableRegion("nested function");
  std::vector<NodeId> inside = region_statements(ast, r);
  std::set<NodeId> in(inside.begin(), inside.end());

  // Control that leaves the region: any return, and break/continue whose loop
  // is outside it.
  for (NodeId s : inside) {
    NodeKind k = ast[s].kind;
    if (k == NodeKind::Return) throw NoExtractableRegion("return inside region at line " + std::to_string(ast[s].span.startLine));
    if (k == NodeKind::Break || k == NodeKind::Continue) {
      bool enclosed = false;
      for (NodeId p = ast[s].parent; p != kNoNode && in.count(p); p = ast[p].parent)
        if (ast[p].kind == NodeKind::For || ast[p].kind == NodeKind::While) enclosed = true;
      if (!enclosed) throw NoExtractableRegion("loop control escapes region");
    }
  }

  bool inLoop = false;
  for (NodeId p = r.owner; p != kNoNode && p != fv.fn; p = ast[p].parent)
    if (ast[p].kind == NodeKind::For || ast[p].kind == NodeKind::While) inLoop = true;

  std::vector<std::string> params, returns, carried;
  auto add = [](std::vector<std::string>& v, const std::string& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  };
  // Walk uses in source order so parameter order is first use. Inside an
  // enclosing loop, a region definition reaching an earlier region read may
  // arrive through the next iteration, so the value must round-trip.
  for (NodeId u : inside) {
    for (const auto& var : statement_effects(ast, u).uses) {
      for (NodeId d : fv.defuse.reaching_defs(u, var)) {
        if (!in.count(d)) add(params, var);
        else if (inLoop && !(ast[d].span < ast[u].span)) add(carried, var);
      }
    }
  }
  std::map<std::string, bool> outsideReachesAfterUse;
  for (const auto& [key, defs] : fv.defuse.reaching) {
    const auto& [u, var] = key;
    if (in.count(u)) continue;
    bool fromInside = false, fromOutside = false;
    for (NodeId d : defs) (in.count(d) ? fromInside : fromOutside) = true;
    if (!fromInside) continue;
    outsideReachesAfterUse[var] = outsideReachesAfterUse[var] || fromOutside;
  }
  for (NodeId d : inside)
    for (const auto& var : statement_effects(ast, d).defs)
      if (outsideReachesAfterUse.count(var)) add(returns, var);
  auto isParam = [&](const std::string& var) { return std::find(params.begin(), params.end(), var) != params.end(); };
  for (const auto& var : returns)
    if (outsideReachesAfterUse[var] && !isParam(var)) throw NoExtractableRegion(var + " may be unassigned after the region");
  for (const auto& var : carried) {
    if (!isParam(var)) throw NoExtractableRegion("value of " + var + " carried across loop iterations");
    add(returns, var);
  }
  return {params, returns};
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string helper_name(const Ast& ast, NodeId fn, int line) {
  std::set<std::string> taken;
  ast.walk(ast.root(), [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef) taken.insert(n.attr("name"));
    if (n.kind == NodeKind::Name) taken.insert(n.attr("id"));
  });
  std::string base = "_" + ast[fn].attr("name") + "_block_" + std::to_string(line);
  std::string name = base;
  for (int k = 2; taken.count(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

}  // namespace

Patch extract_method(const UnitViews& v, const FunctionViews& fv, const Region& r) {
  const Ast& ast = v.ast;
  Signature sig = region_signature(ast, fv, r);
  Span span = region_span(ast, r);
  auto lines = split_lines(v.unit->text());
  if (span.endLine > static_cast<int>(lines.size())) throw OutOfBounds(span);
  int indent = span.startCol - 1;

  std::string name = helper_name(ast, fv.fn, span.startLine);
  std::string helper = "def " + name + "(" + join(sig.params, ", ") + "):\n";
  for (int l = span.startLine; l <= span.endLine; ++l) {
    const std::string& line = lines[static_cast<std::size_t>(l - 1)];
    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string::npos) {
      helper += "\n";
      continue;
    }
    std::size_t strip = std::min<std::size_t>(lead, static_cast<std::size_t>(indent));
    helper += "    " + line.substr(strip) + "\n";
  }
  if (!sig.returns.empty()) helper += "    return " + join(sig.returns, ", ") + "\n";
  helper += "\n\n";

  std::string call = std::string(static_cast<std::size_t>(indent), ' ');
  if (!sig.returns.empty()) call += join(sig.returns, ", ") + " = ";
  call += name + "(" + join(sig.params, ", ") + ")";

  NodeId top = top_level_ancestor(ast, fv.fn);
  int topLine = ast[top].span.startLine;
  Patch p;
  p.kind = PatchKind::ExtractMethod;
  p.description = "Extract lines " + std::to_string(span.startLine) + "-" + std::to_string(span.endLine) + " of " +
                  ast.qualified_name(fv.fn) + " into " + name + "(" + join(sig.params, ", ") + ")";
  p.edits.push_back({Span{topLine, 1, topLine, 1}, helper});
  const std::string& last = lines[static_cast<std::size_t>(span.endLine - 1)];
  p.edits.push_back({Span{span.startLine, 1, span.endLine, static_cast<int>(last.size()) + 1}, call});
  return p;
}

Patch extract_method(const UnitViews& v, const FunctionViews& fv) {
  std::string why = "no candidate regions";
  for (const Region& r : extraction_candidates(v.ast, fv.fn)) {
    try {
      return extract_method(v, fv, r);
    } catch (const NoExtractableRegion& e) {
      why = e.what();
    }
  }
  throw NoExtractableRegion(why);
}

// ---- relocate secret -----------------------------------------------------------

std::string env_key(std::string_view target) {
  std::string out;
  for (std::size_t i = 0; i < target.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(target[i]);
    if (std::isupper(c) && i > 0 && std::islower(static_cast<unsigned char>(target[i - 1]))) out += '_';
    out += std::isalnum(c) ? static_cast<char>(std::toupper(c)) : '_';
  }
  std::size_t a = out.find_first_not_of('_');
  if (a == std::string::npos) return "SECRET";
  out = out.substr(a);
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "SECRET_" + out;
  return out;
}

Patch relocate_secret(const Finding& f, const UnitViews& v) {
  if (f.rule != Rule::HardcodedSecret || !f.evidence.literal) throw Error("relocate_secret: not a secret finding");
  const LiteralEvidence& lit = *f.evidence.literal;
  std::string key;
  if (!lit.target.empty()) {
    key = env_key(lit.target);
  } else {
    std::string owner = f.entity.kind == "module" ? "APP" : env_key(f.entity.name);
    key = owner + "_SECRET_L" + std::to_string(lit.literal.startLine);
  }
  Patch p;
  p.kind = PatchKind::RelocateSecret;
  p.description = "Read the secret at line " + std::to_string(lit.literal.startLine) + " from environment variable " + key;
  p.notes.push_back("provision environment variable " + key);
  if (auto imp = import_edit(v, "os")) p.edits.push_back(*imp);
  p.edits.push_back({lit.literal, "os.environ.get(" + python_string(key) + ")"});
  return p;
}

// ---- parameterize query ----------------------------------------------------------

namespace {

struct Piece {
  bool isName = false;
  std::string text;  // literal value, or variable name
  bool slot = false;  // a "?" placeholder
};

void split_template(const std::string& tmpl, const std::vector<std::string>& names, bool percent,
                    std::vector<Piece>& out) {
  std::string cur;
  std::size_t next = 0;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    char c = tmpl[i];
    if (percent && c == '%') {
      if (i + 1 < tmpl.size() && tmpl[i + 1] == '%') {
        cur += '%';
        ++i;
        continue;
      }
      if (i + 1 < tmpl.size() && std::string_view("sdrif").find(tmpl[i + 1]) != std::string_view::npos) {
        if (next >= names.size()) throw UnsupportedShape("more format fields than arguments");
        out.push_back({false, cur});
        out.push_back({true, names[next++]});
        cur.clear();
        ++i;
        continue;
      }
      throw UnsupportedShape("format directive");
    }
    if (!percent && (c == '{' || c == '}')) {
      if (i + 1 < tmpl.size() && tmpl[i + 1] == c) {
        cur += c;
        ++i;
        continue;
      }
      if (c == '}') throw UnsupportedShape("unbalanced brace");
      std::size_t close = tmpl.find('}', i);
      if (close == std::string::npos) throw UnsupportedShape("unbalanced brace");
      if (next >= names.size()) throw UnsupportedShape("more format fields than arguments");
      out.push_back({false, cur});
      out.push_back({true, names[next++]});
      cur.clear();
      i = close;
      continue;
    }
    cur += c;
  }
  if (next != names.size()) throw UnsupportedShape("unused format arguments");
  out.push_back({false, cur});
}

std::string name_of(const Ast& ast, NodeId id) {
  if (ast[id].kind != NodeKind::Name) throw UnsupportedShape("fragment is not a plain name");
  return ast[id].attr("id");
}

bool plain_str(const Node& n) { return n.kind == NodeKind::Literal && n.attr("type") == "str" && !n.has("fstring"); }

void flatten(const Ast& ast, NodeId id, std::vector<Piece>& out) {
  const Node& n = ast[id];
  if (n.kind == NodeKind::BinOp && n.attr("op") == "+" && n.children.size() == 2) {
    flatten(ast, n.children[0], out);
    flatten(ast, n.children[1], out);
    return;
  }
  if (n.kind == NodeKind::BinOp && n.attr("op") == "%" && n.children.size() == 2 && plain_str(ast[n.children[0]])) {
    const Node& rhs = ast[n.children[1]];
    std::vector<std::string> names;
    if (rhs.kind == NodeKind::Literal && rhs.attr("type") == "tuple")
      for (NodeId c : rhs.children) names.push_back(name_of(ast, c));
    else
      names.push_back(name_of(ast, n.children[1]));
    split_template(ast[n.children[0]].attr("value"), names, true, out);
    return;
  }
  if (n.kind == NodeKind::Call && ast[n.children[0]].kind == NodeKind::Attribute &&
      ast[n.children[0]].attr("attr") == "format") {
    NodeId recv = ast[n.children[0]].children[0];
    if (!plain_str(ast[recv])) throw UnsupportedShape("format receiver is not a string literal");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      if (ast[n.children[i]].has("keyword")) throw UnsupportedShape("keyword format argument");
      names.push_back(name_of(ast, n.children[i]));
    }
    split_template(ast[recv].attr("value"), names, false, out);
    return;
  }
  if (n.kind == NodeKind::Literal && n.attr("type") == "str") {
    if (!n.has("fstring")) {
      out.push_back({false, n.attr("value")});
      return;
    }
    std::vector<std::string> names;
    for (NodeId c : n.children) names.push_back(name_of(ast, c));
    split_template(n.attr("value"), names, false, out);
    return;
  }
  if (n.kind == NodeKind::Name) {
    out.push_back({true, n.attr("id")});
    return;
  }
  throw UnsupportedShape(std::string("fragment of kind ") + std::string(to_string(n.kind)));
}

// Concatenation of string literals and bare names, merging adjacent text.
std::string concat_expr(const std::vector<Piece>& pieces) {
  std::vector<std::string> parts;
  std::string run;
  bool haveRun = false;
  for (const auto& p : pieces) {
    if (p.isName) {
      if (haveRun && !run.empty()) parts.push_back(python_string(run));
      run.clear();
      haveRun = false;
      parts.push_back(p.text);
    } else {
      run += p.text;
      haveRun = true;
    }
  }
  if (haveRun && (!run.empty() || parts.empty())) parts.push_back(python_string(run));
  return join(parts, " + ");
}

std::string callee_name(const Ast& ast, NodeId call) { return dotted_name(ast, ast[call].children[0]); }

}  // namespace

Patch parameterize_query(const Finding& f, const UnitViews& v, const TaintPolicy& policy) {
  if (!f.evidence.taint || f.evidence.taint->steps.empty() || !f.cwe)
    throw UnsupportedShape("finding has no taint path");
  if (*f.cwe != 89 && *f.cwe != 78) throw UnsupportedShape("CWE-" + std::to_string(*f.cwe) + " has no rewrite");
  const Ast& ast = v.ast;
  const auto& steps = f.evidence.taint->steps;
  NodeId sinkStmt = steps.back().stmt;

  // Every path into this sink statement contributes its carried names, so a
  // query mixing several inputs binds all of them.
  std::vector<std::vector<NodeId>> paths;
  std::set<std::string> tainted;
  auto absorb = [&](const std::vector<NodeId>& stmts, const std::vector<std::string>& vars) {
    for (const auto& v : vars)
      if (!v.empty()) tainted.insert(v);
    if (ast[stmts.front()].kind == NodeKind::Param) tainted.insert(ast[stmts.front()].attr("name"));
    for (const auto& var : statement_effects(ast, stmts.front()).defs) tainted.insert(var);
    paths.push_back(stmts);
  };
  {
    std::vector<NodeId> stmts;
    std::vector<std::string> vars;
    for (const auto& s : steps) {
      stmts.push_back(s.stmt);
      vars.push_back(s.variable);
    }
    absorb(stmts, vars);
  }
  NodeId fn = ast.enclosing_entity(sinkStmt);
  if (const FunctionViews* fv = fn == kNoNode ? nullptr : v.function(fn))
    for (const auto& tp : taint_analyze(ast, fv->pdg, policy))
      if (tp.stmts.back() == sinkStmt && tp.cwe == *f.cwe && !tp.sanitized) absorb(tp.stmts, tp.variables);

  // The sink call and its guarded argument.
  NodeId call = kNoNode, arg = kNoNode;
  std::size_t positional = 0;
  ast.walk(sinkStmt, [&](NodeId id) {
    const Node& n = ast[id];
    if (call != kNoNode || n.kind != NodeKind::Call) return;
    std::string name = callee_name(ast, id);
    for (const auto& sink : policy.sinks) {
      if (!call_matches(sink.pattern, name)) continue;
      if (sink.cwe != *f.cwe || sink.arg < 0) break;
      std::vector<NodeId> pos;
      for (std::size_t i = 1; i < n.children.size(); ++i)
        if (!ast[n.children[i]].has("keyword")) pos.push_back(n.children[i]);
      if (static_cast<std::size_t>(sink.arg) < pos.size()) {
        call = id;
        arg = pos[static_cast<std::size_t>(sink.arg)];
        positional = pos.size();
        if (*f.cwe == 89 && static_cast<std::size_t>(sink.arg) + 1 != pos.size())
          throw UnsupportedShape("sink call already passes parameters");
      }
      break;
    }
  }, false);
  if (call == kNoNode) throw UnsupportedShape("no sink call in statement at line " + std::to_string(ast[sinkStmt].span.startLine));
  (void)positional;

  // Follow a bare name back to the statement on the path that built it.
  NodeId site = arg;
  if (ast[arg].kind == NodeKind::Name && steps.size() >= 2) {
    const std::string& var = ast[arg].attr("id");
    for (std::size_t i = steps.size() - 1; i-- > 0;) {
      const Node& s = ast[steps[i].stmt];
      if (steps[i].variable != var) continue;
      if (s.kind == NodeKind::Assign && s.children.size() == 2 && ast[s.children[0]].kind == NodeKind::Name &&
          ast[s.children[0]].attr("id") == var)
        site = s.children[1];
      break;
    }
  }
  if (site == arg && ast[arg].kind == NodeKind::Name) throw UnsupportedShape("sink argument is not built from fragments");

  // Tainted names assigned on the path from a flattenable expression are
  // expanded in place, so staged concatenations bind the original input.
  std::map<std::string, NodeId> pathDefs;
  for (const auto& stmts : paths) {
    for (std::size_t i = 0; i + 1 < stmts.size(); ++i) {
      const Node& s = ast[stmts[i]];
      if (s.kind != NodeKind::Assign || s.children.size() != 2 || ast[s.children[0]].kind != NodeKind::Name) continue;
      const std::string& var = ast[s.children[0]].attr("id");
      if (tainted.count(var) && ast[s.children[1]].kind == NodeKind::BinOp) pathDefs.emplace(var, s.children[1]);
    }
  }
  std::vector<Piece> raw;
  flatten(ast, site, raw);
  std::vector<Piece> pieces;
  std::function<void(const Piece&, int)> expand = [&](const Piece& p, int depth) {
    auto it = p.isName ? pathDefs.find(p.text) : pathDefs.end();
    if (it == pathDefs.end() || depth > 8 || it->second == site) {
      pieces.push_back(p);
      return;
    }
    std::vector<Piece> sub;
    try {
      flatten(ast, it->second, sub);
    } catch (const UnsupportedShape&) {
      pieces.push_back(p);
      return;
    }
    for (const auto& q : sub) expand(q, depth + 1);
  };
  for (const auto& p : raw) expand(p, 0);
  std::vector<std::string> params;
  for (const auto& p : pieces)
    if (p.isName && tainted.count(p.text)) params.push_back(p.text);
  if (params.empty()) throw UnsupportedShape("no tainted fragment");

  Patch patch;
  patch.kind = PatchKind::ParameterizeQuery;
  std::string where = " at line " + std::to_string(ast[site].span.startLine);
  if (*f.cwe == 89) {
    std::vector<Piece> tmpl;
    for (const auto& p : pieces) {
      if (p.isName && tainted.count(p.text)) tmpl.push_back({false, "?", true});
      else tmpl.push_back(p);
    }
    // A quoted slot like '{name}' loses its quotes once it is a placeholder.
    for (std::size_t i = 1; i + 1 < tmpl.size(); ++i) {
      if (!tmpl[i].slot || tmpl[i - 1].isName || tmpl[i + 1].isName) continue;
      std::string& before = tmpl[i - 1].text;
      std::string& after = tmpl[i + 1].text;
      if (!before.empty() && !after.empty() && (before.back() == '\'' || before.back() == '"') &&
          after.front() == before.back()) {
        before.pop_back();
        after.erase(0, 1);
      }
    }
    std::string tuple = "(" + join(params, ", ") + (params.size() == 1 ? ",)" : ")");
    patch.description = "Bind " + join(params, ", ") + " as query parameters" + where;
    if (site == arg) {
      patch.edits.push_back({ast[site].span, concat_expr(tmpl) + ", " + tuple});
    } else {
      patch.edits.push_back({ast[site].span, concat_expr(tmpl)});
      Span end{ast[arg].span.endLine, ast[arg].span.endCol, ast[arg].span.endLine, ast[arg].span.endCol};
      patch.edits.push_back({end, ", " + tuple});
    }
  } else {
    std::vector<Piece> quoted;
    for (const auto& p : pieces) {
      if (p.isName && tainted.count(p.text)) quoted.push_back({true, "shlex.quote(" + p.text + ")"});
      else quoted.push_back(p);
    }
    patch.description = "Shell-quote " + join(params, ", ") + " before building the command" + where;
    if (auto imp = import_edit(v, "shlex")) patch.edits.push_back(*imp);
    patch.edits.push_back({ast[site].span, concat_expr(quoted)});
  }
  return patch;
}

Patch advisory(const Finding& f) {
  Patch p;
  p.kind = PatchKind::Advisory;
  const std::string& e = f.entity.name;
  switch (f.rule) {
    case Rule::GodClass:
      p.description = "Split " + e + " by responsibility; move cohesive method groups and their fields into new classes";
      break;
    case Rule::DataClass:
      p.description = "Move behavior that reads " + e + "'s fields into " + e + " itself";
      break;
    case Rule::FeatureEnvy:
      p.description = "Move " + e + " (or the part using the foreign object) onto the class it reads most";
      break;
    case Rule::DuplicatedCode:
      p.description = "Factor the repeated code into one shared function and call it from each site";
      break;
    case Rule::Xss:
      p.description = "HTML-escape untrusted values before rendering them in " + e;
      break;
    case Rule::LongMethod:
      p.description = "Split " + e + " into smaller functions; no region could be extracted automatically";
      break;
    case Rule::SqlInjection:
      p.description = "Pass untrusted values in " + e + " as bound query parameters";
      break;
    case Rule::CommandInjection:
      p.description = "Avoid the shell in " + e + ", or quote untrusted arguments with shlex.quote";
      break;
    case Rule::HardcodedSecret:
      p.description = "Move the secret in " + e + " to the environment or a secret store";
      break;
  }
  return p;
}

std::vector<RepairSuggestion> suggest(const Finding& f, const UnitViews& v, const TaintPolicy& policy) {
  std::vector<Patch> patches;
  switch (f.rule) {
    case Rule::LongMethod: {
      NodeId fn = kNoNode;
      for (NodeId id : v.ast.functions())
        if (v.ast[id].span == f.entity.span && v.ast.qualified_name(id) == f.entity.name) fn = id;
      const FunctionViews* fv = fn == kNoNode ? nullptr : v.function(fn);
      if (!fv) break;
      for (const Region& r : extraction_candidates(v.ast, fn)) {
        try {
          patches.push_back(extract_method(v, *fv, r));
        } catch (const NoExtractableRegion&) {
        }
      }
      break;
    }
    case Rule::HardcodedSecret:
      patches.push_back(relocate_secret(f, v));
      break;
    case Rule::SqlInjection:
    case Rule::CommandInjection:
      try {
        patches.push_back(parameterize_query(f, v, policy));
      } catch (const UnsupportedShape&) {
        patches.push_back(advisory(f));
      }
      break;
    default:
      patches.push_back(advisory(f));
  }
  std::vector<RepairSuggestion> out;
  for (auto& p : patches) out.push_back({f.id, std::move(p), 1, std::nullopt});
  return rank(std::move(out), v.unit->text());
}

// ---- validation and ranking --------------------------------------------------------

namespace {

NodeId find_entity(const Ast& ast, const EntityRef& e) {
  if (e.kind == "module") return ast.root();
  NodeKind want = e.kind == "class" ? NodeKind::ClassDef : NodeKind::FunctionDef;
  for (std::size_t i = 0; i < ast.size(); ++i) {
    NodeId id = static_cast<NodeId>(i);
    if (ast[id].kind == want && ast.qualified_name(id) == e.name) return id;
  }
  return kNoNode;
}

std::pair<Rule, std::string> key_of(const Finding& f) { return {f.rule, f.entity.name}; }

int run_test_command(const std::string& command, std::string_view text) {
  char path[] = "/tmp/hybridlint-patched-XXXXXX.py";
  int fd = mkstemps(path, 3);
  if (fd < 0) return -1;
  {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
  ::close(fd);
  pid_t pid = fork();
  if (pid == 0) {
    setenv("HYBRIDLINT_PATCHED_FILE", path, 1);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  int status = 0;
  if (pid > 0) waitpid(pid, &status, 0);
  ::unlink(path);
  if (pid < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

}  // namespace

ValidationReport validate(const SourceUnit& before, const SourceUnit& after, const Finding& finding,
                          const ValidateOptions& options) {
  ValidationReport r;
  if (options.testCommand) r.testExitCode = run_test_command(*options.testCommand, after.text());
  UnitViews vb = build_views(before);
  std::optional<UnitViews> va;
  try {
    va = build_views(after);
  } catch (const SourceError&) {
    return r;
  }
  r.parsesOk = true;
  std::vector<Finding> fb = scan_unit(before, options.config).findings;
  std::vector<Finding> fa = scan_unit(after, options.config).findings;

  std::map<std::pair<Rule, std::string>, int> remaining;
  for (const auto& f : fb) ++remaining[key_of(f)];
  int targetBefore = remaining[key_of(finding)];
  int targetAfter = 0;
  for (const auto& f : fa) {
    if (key_of(f) == key_of(finding)) ++targetAfter;
    auto it = remaining.find(key_of(f));
    if (it != remaining.end() && it->second > 0) --it->second;
    else r.newFindings.push_back(f);
  }
  r.targetCleared = targetAfter == 0 || targetAfter < targetBefore;

  NodeId eb = find_entity(vb.ast, finding.entity), ea = find_entity(va->ast, finding.entity);
  if (eb != kNoNode && ea != kNoNode) {
    MetricVector mb = compute_metrics(vb.ast, vb.codeLines, eb), ma = compute_metrics(va->ast, va->codeLines, ea);
    r.deltaCc = ma.cc - mb.cc;
    r.deltaCbo = ma.cbo - mb.cbo;
    r.deltaLoc = ma.loc - mb.loc;
  }
  r.riskReduction = options.risk.total(fb) - options.risk.total(fa);
  r.accepted = r.parsesOk && r.targetCleared && r.newFindings.empty();
  return r;
}

std::vector<RepairSuggestion> rank(std::vector<RepairSuggestion> s, std::string_view text) {
  struct Key {
    bool accepted;
    double risk;
    std::size_t size;
    std::uint64_t hash;
  };
  std::vector<std::pair<Key, RepairSuggestion>> keyed;
  for (auto& x : s) {
    Key k{x.validation && x.validation->accepted, x.validation ? x.validation->riskReduction : 0.0,
          edit_size(text, x.patch), patch_hash(x.patch)};
    keyed.emplace_back(k, std::move(x));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const Key& x = a.first;
    const Key& y = b.first;
    if (x.accepted != y.accepted) return x.accepted;
    if (x.risk != y.risk) return x.risk > y.risk;
    if (x.size != y.size) return x.size < y.size;
    return x.hash < y.hash;
  });
  std::vector<RepairSuggestion> out;
  int n = 1;
  for (auto& [_, x] : keyed) {
    x.rank = n++;
    out.push_back(std::move(x));
  }
  return out;
}

// ---- diffs -------------------------------------------------------------------------

std::string unified_diff(std::string_view before, std::string_view after, const std::string& path) {
  if (before == after) return {};
  auto a = split_lines(before), b = split_lines(after);
  std::size_t pre = 0;
  while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) ++suf;
  std::size_t n = a.size() - pre - suf, m = b.size() - pre - suf;

  // LCS over the differing middle.
  std::vector<std::vector<int>> L(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      L[i][j] = a[pre + i] == b[pre + j] ? L[i + 1][j + 1] + 1 : std::max(L[i + 1][j], L[i][j + 1]);

  struct Op {
    char kind;  // ' ', '-', '+'
    std::size_t ai, bi;
  };
  std::vector<Op> ops;
  for (std::size_t i = 0; i < pre; ++i) ops.push_back({' ', i, i});
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[pre + i] == b[pre + j]) {
      ops.push_back({' ', pre + i++, pre + j++});
    } else if (j < m && (i == n || L[i][j + 1] > L[i + 1][j])) {
      ops.push_back({'+', pre + i, pre + j++});
    } else {
      ops.push_back({'-', pre + i++, pre + j});
    }
  }
  for (std::size_t k = 0; k < suf; ++k) ops.push_back({' ', a.size() - suf + k, b.size() - suf + k});

  std::ostringstream out;
  out << "--- a/" << path << "\n+++ b/" << path << "\n";
  const std::size_t ctx = 3;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].kind == ' ') {
      ++k;
      continue;
    }
    std::size_t start = k > ctx ? k - ctx : 0;
    std::size_t end = k;
    // Extend while the next change is within 2*ctx lines of context.
    while (true) {
      while (end < ops.size() && ops[end].kind != ' ') ++end;
      std::size_t gap = end;
      while (gap < ops.size() && ops[gap].kind == ' ' && gap - end < 2 * ctx) ++gap;
      if (gap < ops.size() && ops[gap].kind != ' ') {
        end = gap;
        continue;
      }
      end = std::min(ops.size(), end + ctx);
      break;
    }
    std::size_t aStart = ops[start].ai, bStart = ops[start].bi, aLen = 0, bLen = 0;
    for (std::size_t x = start; x < end; ++x) {
      if (ops[x].kind != '+') ++aLen;
      if (ops[x].kind != '-') ++bLen;
    }
    out << "@@ -" << (aLen ? aStart + 1 : aStart) << "," << aLen << " +" << (bLen ? bStart + 1 : bStart) << ","
        << bLen << " @@\n";
    for (std::size_t x = start; x < end; ++x) {
      const std::string& line = ops[x].kind == '+' ? b[ops[x].bi] : a[ops[x].ai];
      out << ops[x].kind << line << "\n";
    }
    k = end;
  }
  return out.str();
}

void write_refactor_branch(const std::filesystem::path& dir, const std::string& path, std::string_view before,
                           std::string_view after) {
  // Absolute paths are re-rooted under `dir`; nothing may land outside it.
  std::filesystem::path rel = std::filesystem::path(path).lexically_normal().relative_path();
  for (const auto& part : rel)
    if (part == "..") throw Error("refusing to write " + path + " outside " + dir.string());
  std::filesystem::path target = dir / rel;
  std::filesystem::create_directories(target.parent_path());
  {
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error("cannot write " + target.string());
    out << after;
  }
  std::ofstream diff(target.string() + ".diff", std::ios::binary);
  if (!diff) throw Error("cannot write " + target.string() + ".diff");
  diff << unified_diff(before, after, path);
}

}  // namespace hybridlint
