#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/finding.hpp"
#include "hybridlint/graph_export.hpp"

namespace hybridlint {

enum class AttributionKind { TaintPath, MetricExceedance, ClonePair, Literal };

std::string_view to_string(AttributionKind kind);

/// One attributed target. `target` is "statement" (stmt set), "span" (a token
/// region, possibly in another file for clone partners) or "metric" (metric
/// set, span = the entity it was measured on).
struct AttributionItem {
  std::string target;
  NodeId stmt = kNoNode;
  std::string metric;
  std::string path;
  Span span;
  double weight = 0;
  bool operator==(const AttributionItem&) const = default;
};

struct Attribution {
  AttributionKind kind = AttributionKind::MetricExceedance;
  std::vector<AttributionItem> items;
  bool operator==(const Attribution&) const = default;
};

class MissingEvidence : public Error {
 public:
  explicit MissingEvidence(const std::string& what) : Error("missing evidence: " + what) {}
};

/// Taint findings weight path statements uniformly; metric findings weight
/// each metric by its share of the normalized exceedance (value - t) / t,
/// dropping metrics at or below threshold; clones split evenly over both
/// regions; secrets put everything on the literal.
Attribution attribute(const Finding& finding);

enum class ExplainFormat { Text, Markdown, Json };
ExplainFormat parse_explain_format(std::string_view name);

std::string render_explanation(const Finding& finding, const Attribution& attribution, ExplainFormat format);

nlohmann::ordered_json to_json(const Attribution& attribution);
Attribution attribution_from_json(const nlohmann::json& j);

}  // namespace hybridlint
