#include <algorithm>
#include <functional>

#include "hybridlint/detection.hpp"

namespace hybridlint {

bool glob_match(std::string_view p, std::string_view s) {
  std::size_t pi = 0, si = 0, star = std::string_view::npos, mark = 0;
  while (si < s.size()) {
    if (pi < p.size() && p[pi] == '*') {
      star = pi++;
      mark = si;
    } else if (pi < p.size() && p[pi] == s[si]) {
      ++pi;
      ++si;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      si = ++mark;
    } else {
      return false;
    }
  }
  while (pi < p.size() && p[pi] == '*') ++pi;
  return pi == p.size();
}

bool call_matches(std::string_view pattern, std::string_view dotted) {
  if (dotted.empty()) return false;
  if (glob_match(pattern, dotted)) return true;
  if (pattern.find('.') != std::string_view::npos) return false;
  std::size_t dot = dotted.rfind('.');
  return dot != std::string_view::npos && glob_match(pattern, dotted.substr(dot + 1));
}

TaintPolicy TaintPolicy::defaults() {
  TaintPolicy p;
  p.sourceCalls = {"input", "raw_input", "request_args", "request.*", "get_param*", "read_request*"};
  p.sourceParams = {"request", "req", "*_input", "untrusted_*", "user_data"};
  p.sinks = {{"execute", 89, 0},       {"executemany", 89, 0},        {"raw_query", 89, 0},
             {"os_system", 78, 0},     {"os.system", 78, 0},          {"os.popen", 78, 0},
             {"subprocess.*", 78, 0},  {"popen", 78, 0},              {"run_shell", 78, 0},
             {"render_html", 79, 0},   {"render_template_string", 79, 0}, {"write_html", 79, 0}};
  p.sanitizers = {"int", "float", "escape", "*.escape", "quote", "shlex.quote", "sanitize*", "html_escape"};
  return p;
}

void TaintPolicy::validate() const {
  if (sourceCalls.empty() && sourceParams.empty()) throw Error("taint policy: no sources");
  if (sinks.empty()) throw Error("taint policy: no sinks");
  if (sanitizers.empty()) throw Error("taint policy: no sanitizers");
  for (const auto& s : sinks) {
    if (s.pattern.empty()) throw Error("taint policy: empty sink pattern");
    if (s.cwe != 89 && s.cwe != 78 && s.cwe != 79)
      throw Error("taint policy: sink " + s.pattern + " maps to unsupported CWE " + std::to_string(s.cwe));
  }
  auto nonEmpty = [](const std::vector<std::string>& v, const char* what) {
    for (const auto& x : v)
      if (x.empty()) throw Error(std::string("taint policy: empty ") + what + " pattern");
  };
  nonEmpty(sourceCalls, "source");
  nonEmpty(sourceParams, "parameter");
  nonEmpty(sanitizers, "sanitizer");
}

Rule rule_for_cwe(int cwe) {
  switch (cwe) {
    case 89: return Rule::SqlInjection;
    case 78: return Rule::CommandInjection;
    case 79: return Rule::Xss;
    default: throw Error("no injection rule for CWE-" + std::to_string(cwe));
  }
}

namespace {

bool any_match(const std::vector<std::string>& patterns, const std::string& dotted) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) { return call_matches(p, dotted); });
}

// Expressions that belong to the statement itself, not to nested blocks or scopes.
template <typename F>
void own_expressions(const Ast& ast, NodeId stmt, F&& f) {
  const Node& n = ast[stmt];
  if (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef || n.kind == NodeKind::Param) return;
  for (NodeId c : n.children) ast.walk(c, f);
}

std::string callee(const Ast& ast, NodeId call) { return dotted_name(ast, ast[call].children.front()); }

bool reads(const Ast& ast, NodeId expr, const std::string& var, const TaintPolicy& policy) {
  bool hit = false;
  ast.walk(expr, [&](NodeId id) {
    const Node& n = ast[id];
    if (var.empty()) {
      if (n.kind == NodeKind::Call && any_match(policy.sourceCalls, callee(ast, id))) hit = true;
    } else if (n.kind == NodeKind::Name && n.attr("id") == var && n.attr("ctx") != "store") {
      hit = true;
    }
  });
  return hit;
}

}  // namespace

bool is_source_statement(const Ast& ast, NodeId stmt, const TaintPolicy& policy, std::string* source) {
  const Node& n = ast[stmt];
  if (n.kind == NodeKind::Param) {
    const std::string& name = n.attr("name");
    for (const auto& p : policy.sourceParams)
      if (glob_match(p, name)) {
        if (source) *source = "parameter " + name;
        return true;
      }
    return false;
  }
  std::string found;
  own_expressions(ast, stmt, [&](NodeId id) {
    if (!found.empty() || ast[id].kind != NodeKind::Call) return;
    std::string name = callee(ast, id);
    if (any_match(policy.sourceCalls, name)) found = name + "()";
  });
  if (found.empty()) return false;
  if (source) *source = "call " + found;
  return true;
}

std::vector<std::pair<std::string, SinkPattern>> sinks_reading(const Ast& ast, NodeId stmt, const std::string& var,
                                                               const TaintPolicy& policy) {
  std::vector<std::pair<std::string, SinkPattern>> out;
  own_expressions(ast, stmt, [&](NodeId id) {
    const Node& call = ast[id];
    if (call.kind != NodeKind::Call) return;
    std::string name = callee(ast, id);
    for (const auto& sink : policy.sinks) {
      if (!call_matches(sink.pattern, name)) continue;
      std::vector<NodeId> positional;
      for (std::size_t i = 1; i < call.children.size(); ++i)
        if (!ast[call.children[i]].has("keyword")) positional.push_back(call.children[i]);
      bool hit = false;
      if (sink.arg < 0) {
        for (NodeId a : positional) hit = hit || reads(ast, a, var, policy);
      } else if (static_cast<std::size_t>(sink.arg) < positional.size()) {
        hit = reads(ast, positional[static_cast<std::size_t>(sink.arg)], var, policy);
      }
      if (hit) out.emplace_back(name, sink);
      break;  // first matching pattern decides the call's CWE
    }
  });
  return out;
}

bool sanitizes(const Ast& ast, NodeId stmt, const std::string& var, const TaintPolicy& policy) {
  bool hit = false;
  own_expressions(ast, stmt, [&](NodeId id) {
    const Node& call = ast[id];
    if (hit || call.kind != NodeKind::Call || !any_match(policy.sanitizers, callee(ast, id))) return;
    for (std::size_t i = 1; i < call.children.size(); ++i)
      if (reads(ast, call.children[i], var, policy)) hit = true;
  });
  return hit;
}

std::vector<TaintPath> taint_analyze(const Ast& ast, const Pdg& pdg, const TaintPolicy& policy) {
  std::map<NodeId, std::vector<std::pair<NodeId, std::string>>> succ;
  for (const auto& e : pdg.data_edges()) succ[e.from].emplace_back(e.to, e.variable);

  std::vector<TaintPath> paths;
  std::vector<NodeId> stmts;
  std::vector<std::string> vars;
  std::string sourceDesc;

  auto emit_sinks = [&](NodeId at, const std::string& var, bool sanitizedSoFar) {
    for (const auto& [name, sink] : sinks_reading(ast, at, var, policy)) {
      if (paths.size() >= kTaintPathCap) return;
      TaintPath p;
      p.stmts = stmts;
      p.variables = vars;
      p.sanitized = sanitizedSoFar;
      p.cwe = sink.cwe;
      p.source = sourceDesc;
      p.sink = name + "()";
      paths.push_back(std::move(p));
    }
  };

  std::function<void(NodeId, bool)> extend = [&](NodeId at, bool sanitized) {
    auto it = succ.find(at);
    if (it == succ.end()) return;
    for (const auto& [next, var] : it->second) {
      if (paths.size() >= kTaintPathCap) return;
      if (std::find(stmts.begin(), stmts.end(), next) != stmts.end()) continue;
      bool s = sanitized || sanitizes(ast, next, var, policy);
      stmts.push_back(next);
      vars.push_back(var);
      emit_sinks(next, var, s);
      extend(next, s);
      stmts.pop_back();
      vars.pop_back();
    }
  };

  for (NodeId s : pdg.nodes) {
    if (!is_source_statement(ast, s, policy, &sourceDesc)) continue;
    bool sanitized = ast[s].kind != NodeKind::Param && sanitizes(ast, s, "", policy);
    stmts = {s};
    vars.clear();
    if (ast[s].kind != NodeKind::Param) emit_sinks(s, "", sanitized);
    extend(s, sanitized);
  }

  auto key = [&](const TaintPath& p) {
    std::vector<Span> spans;
    for (NodeId id : p.stmts) spans.push_back(ast[id].span);
    return std::make_tuple(spans.front(), spans.back(), spans, p.variables, p.cwe, p.sink);
  };
  std::stable_sort(paths.begin(), paths.end(), [&](const TaintPath& a, const TaintPath& b) { return key(a) < key(b); });
  return paths;
}

std::vector<Finding> detect_injection(const UnitViews& v, NodeId fn, const std::vector<TaintPath>& paths) {
  std::map<std::pair<NodeId, int>, const TaintPath*> chosen;
  std::vector<std::pair<NodeId, int>> order;
  for (const TaintPath& p : paths) {
    auto key = std::make_pair(p.stmts.back(), p.cwe);
    auto it = chosen.find(key);
    if (it == chosen.end()) {
      chosen.emplace(key, &p);
      order.push_back(key);
    } else if (it->second->sanitized && !p.sanitized) {
      it->second = &p;
    }
  }
  std::vector<Finding> out;
  for (const auto& key : order) {
    const TaintPath& p = *chosen.at(key);
    Finding f;
    f.rule = rule_for_cwe(p.cwe);
    f.cwe = p.cwe;
    f.path = v.unit->path();
    f.span = v.ast[p.stmts.back()].span;
    f.entity = entity_ref(v.ast, fn);
    f.structuralScore = p.sanitized ? 0.0 : 1.0;
    TaintEvidence te;
    te.source = p.source;
    te.sink = p.sink;
    te.sanitized = p.sanitized;
    for (std::size_t i = 0; i < p.stmts.size(); ++i)
      te.steps.push_back({p.stmts[i], v.ast[p.stmts[i]].span, i < p.variables.size() ? p.variables[i] : std::string()});
    f.evidence.taint = te;
    f.id = finding_id(f.rule, f.path, f.span);
    out.push_back(std::move(f));
  }
  sort_findings(out);
  return out;
}

}  // namespace hybridlint
