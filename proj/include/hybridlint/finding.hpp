#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/ast.hpp"
#include "json.hpp"

namespace hybridlint {

enum class Rule {
  LongMethod,
  GodClass,
  DataClass,
  FeatureEnvy,
  DuplicatedCode,
  SqlInjection,
  CommandInjection,
  Xss,
  HardcodedSecret,
};

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);
const std::vector<Rule>& all_rules();
bool is_vulnerability(Rule rule);
/// CWE a rule always carries; injection rules take theirs from the sink.
std::optional<int> fixed_cwe(Rule rule);

struct EntityRef {
  std::string kind;  // "function", "class" or "module"
  std::string name;
  Span span;
  bool operator==(const EntityRef&) const = default;
};

struct MetricExceedance {
  std::string metric;
  double value = 0;
  double threshold = 0;
  bool operator==(const MetricExceedance&) const = default;
};

struct TaintStep {
  NodeId stmt = kNoNode;
  Span span;
  std::string variable;  // value carried out of this statement; empty at the sink
  bool operator==(const TaintStep&) const = default;
};

struct TaintEvidence {
  std::vector<TaintStep> steps;  // source first, sink last
  std::string source;
  std::string sink;
  bool sanitized = false;
  bool operator==(const TaintEvidence&) const = default;
};

struct ClonePartner {
  std::string path;
  Span span;
  bool operator==(const ClonePartner&) const = default;
};

struct CloneEvidence {
  int tokens = 0;
  std::vector<ClonePartner> partners;
  bool operator==(const CloneEvidence&) const = default;
};

struct LiteralEvidence {
  Span literal;
  std::string target;   // assignment target or keyword, may be empty
  std::string trigger;  // "name" or "entropy"
  double entropy = 0;
  int length = 0;
  bool operator==(const LiteralEvidence&) const = default;
};

struct Evidence {
  std::vector<MetricExceedance> metrics;
  std::optional<TaintEvidence> taint;
  std::optional<CloneEvidence> clone;
  std::optional<LiteralEvidence> literal;
  bool operator==(const Evidence&) const = default;
};

struct Finding {
  std::string id;
  Rule rule = Rule::LongMethod;
  std::optional<int> cwe;
  std::string path;
  Span span;
  EntityRef entity;
  double structuralScore = 0;
  double semanticScore = 0;
  double confidence = 0;
  Evidence evidence;
  bool inDiff = false;
  bool operator==(const Finding&) const = default;
};

/// FNV-1a over (rule, path, span), rendered as 16 hex digits.
std::string finding_id(Rule rule, const std::string& path, const Span& span);

/// Canonical order: path, span, rule.
bool finding_less(const Finding& a, const Finding& b);
void sort_findings(std::vector<Finding>& findings);

nlohmann::ordered_json span_to_json(const Span& span);
Span span_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Finding& finding);
/// Inverse of to_json; throws Error on a malformed document.
Finding finding_from_json(const nlohmann::json& j);

}  // namespace hybridlint
