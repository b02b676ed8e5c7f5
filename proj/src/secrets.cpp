#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <regex>

#include "hybridlint/detection.hpp"

namespace hybridlint {

double shannon_entropy(std::string_view s) {
  if (s.empty()) return 0.0;
  std::array<int, 256> counts{};
  for (unsigned char c : s) ++counts[c];
  double h = 0;
  for (int c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / static_cast<double>(s.size());
    h -= p * std::log2(p);
  }
  return h;
}

std::string literal_body(std::string_view lexeme) {
  std::size_t q = lexeme.find_first_of("'\"");
  if (q == std::string_view::npos) return std::string(lexeme);
  std::size_t quote = lexeme.compare(q, 3, "\"\"\"") == 0 || lexeme.compare(q, 3, "'''") == 0 ? 3 : 1;
  if (lexeme.size() < q + 2 * quote) return {};
  return std::string(lexeme.substr(q + quote, lexeme.size() - q - 2 * quote));
}

namespace {

const std::regex& credential_name() {
  static const std::regex re("password|passwd|secret|api_key|apikey|token|credential", std::regex::icase);
  return re;
}

bool plain_string(const Node& n) {
  return n.kind == NodeKind::Literal && n.attr("type") == "str" && !n.has("fstring");
}

std::string target_name(const Ast& ast, NodeId target) {
  const Node& t = ast[target];
  if (t.kind == NodeKind::Name) return t.attr("id");
  if (t.kind == NodeKind::Attribute) return t.attr("attr");
  return {};
}

NodeId enclosing_scope(const Ast& ast, NodeId id) {
  NodeId e = ast.enclosing_entity(id);
  return e == kNoNode ? ast.root() : e;
}

}  // namespace

std::vector<Finding> detect_hardcoded_secret(const UnitViews& v, const Thresholds& t) {
  const Ast& ast = v.ast;
  std::map<NodeId, std::string> named;  // literal -> credential-looking target
  ast.walk(ast.root(), [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind == NodeKind::Assign) {
      NodeId value = n.children.back();
      if (!plain_string(ast[value])) return;
      for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
        std::string name = target_name(ast, n.children[i]);
        if (!name.empty() && std::regex_search(name, credential_name())) {
          named.emplace(value, name);
          break;
        }
      }
    } else if (n.kind == NodeKind::Call) {
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        const Node& arg = ast[n.children[i]];
        if (arg.has("keyword") && plain_string(arg) && std::regex_search(arg.attr("keyword"), credential_name()))
          named.emplace(n.children[i], arg.attr("keyword"));
      }
    }
  });

  std::vector<Finding> out;
  ast.walk(ast.root(), [&](NodeId id) {
    const Node& n = ast[id];
    if (!plain_string(n)) return;
    const std::string& value = n.attr("value");
    int length = static_cast<int>(value.size());
    double entropy = shannon_entropy(value);
    LiteralEvidence ev{n.span, {}, {}, entropy, length};
    double score = 0;
    auto it = named.find(id);
    if (it != named.end() && length >= t.secretNameMinLength) {
      ev.target = it->second;
      ev.trigger = "name";
      score = 1.0;
    } else if (length >= t.secretEntropyMinLength && entropy >= t.secretEntropy &&
               std::none_of(value.begin(), value.end(), [](unsigned char c) { return std::isspace(c); })) {
      // Whitespace marks prose and SQL, never key material.
      ev.trigger = "entropy";
      score = std::min(1.0, entropy / 4.5);
      const Node& parent = ast[n.parent];
      if (parent.kind == NodeKind::Assign && parent.children.back() == id)
        ev.target = target_name(ast, parent.children.front());
      else if (n.has("keyword"))
        ev.target = n.attr("keyword");
    } else {
      return;
    }
    Finding f;
    f.rule = Rule::HardcodedSecret;
    f.cwe = 798;
    f.path = v.unit->path();
    f.span = n.span;
    f.entity = entity_ref(ast, enclosing_scope(ast, id));
    f.structuralScore = score;
    f.evidence.literal = ev;
    f.id = finding_id(f.rule, f.path, f.span);
    out.push_back(std::move(f));
  });
  sort_findings(out);
  return out;
}

}  // namespace hybridlint
