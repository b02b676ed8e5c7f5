#include "hybridlint/explanation.hpp"

#include <cstdio>
#include <sstream>

namespace hybridlint {

std::string_view to_string(AttributionKind kind) {
  switch (kind) {
    case AttributionKind::TaintPath: return "taint-path";
    case AttributionKind::MetricExceedance: return "metric-exceedance";
    case AttributionKind::ClonePair: return "clone-pair";
    case AttributionKind::Literal: return "literal";
  }
  return "?";
}

namespace {

AttributionKind parse_kind(const std::string& s) {
  for (auto k : {AttributionKind::TaintPath, AttributionKind::MetricExceedance, AttributionKind::ClonePair,
                 AttributionKind::Literal})
    if (to_string(k) == s) return k;
  throw Error("attribution json: unknown kind " + s);
}

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string lines(const Span& s) {
  return s.startLine == s.endLine ? "line " + std::to_string(s.startLine)
                                  : "lines " + std::to_string(s.startLine) + "-" + std::to_string(s.endLine);
}

bool is_ratio(const MetricExceedance& m) { return m.metric == "accessorRatio"; }

// Metrics whose firing comparison is "at least" rather than "more than".
bool inclusive(const Finding& f, const MetricExceedance& m) {
  return f.rule == Rule::DataClass || (f.rule == Rule::FeatureEnvy && m.metric.rfind("foreign:", 0) == 0);
}

std::string metric_value(const MetricExceedance& m) { return is_ratio(m) ? fmt(m.value) : fmt(m.value, 0); }
std::string metric_bound(const MetricExceedance& m) { return is_ratio(m) ? fmt(m.threshold) : fmt(m.threshold, 0); }

std::vector<std::string> reasons(const Finding& f) {
  std::vector<std::string> out;
  const Evidence& ev = f.evidence;
  if (!ev.metrics.empty()) {
    for (const auto& m : ev.metrics) {
      if (f.rule == Rule::FeatureEnvy && m.metric == "own") {
        out.push_back("own attribute accesses " + metric_value(m) + " < foreign " + metric_bound(m));
        continue;
      }
      bool fired = inclusive(f, m) ? m.value >= m.threshold : m.value > m.threshold;
      std::string op = fired ? (inclusive(f, m) ? " >= " : " > ") : " <= ";
      out.push_back(m.metric + " = " + metric_value(m) + op + metric_bound(m) + (fired ? "" : " (within threshold)"));
    }
  }
  if (ev.taint) {
    const auto& t = *ev.taint;
    std::string chain = "untrusted value from " + t.source;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      chain += i == 0 ? " at line " : " -> line ";
      chain += std::to_string(t.steps[i].span.startLine);
      if (!t.steps[i].variable.empty()) chain += " (" + t.steps[i].variable + ")";
    }
    chain += " reaches sink " + t.sink + (t.sanitized ? ", sanitized on the way" : " without sanitization");
    out.push_back(chain);
  }
  if (ev.clone) {
    std::string r = std::to_string(ev.clone->tokens) + " normalized tokens repeated at";
    for (std::size_t i = 0; i < ev.clone->partners.size(); ++i)
      r += (i ? ", " : " ") + ev.clone->partners[i].path + " " + lines(ev.clone->partners[i].span);
    out.push_back(r);
  }
  if (ev.literal) {
    const auto& l = *ev.literal;
    if (l.trigger == "name")
      out.push_back("string literal of " + std::to_string(l.length) + " chars assigned to credential-like name '" +
                    l.target + "'");
    else
      out.push_back("string literal of " + std::to_string(l.length) + " chars with entropy " + fmt(l.entropy) +
                    " bits/char" + (l.target.empty() ? "" : " assigned to '" + l.target + "'"));
  }
  return out;
}

std::string headline(const Finding& f) {
  std::string h(to_string(f.rule));
  if (f.cwe) h += " (CWE-" + std::to_string(*f.cwe) + ")";
  return h;
}

std::string item_label(const AttributionItem& it) {
  if (it.target == "metric") return "metric " + it.metric;
  if (it.target == "statement") return "statement at " + lines(it.span);
  return (it.path.empty() ? "" : it.path + " ") + lines(it.span);
}

}  // namespace

Attribution attribute(const Finding& f) {
  Attribution a;
  const Evidence& ev = f.evidence;
  if (ev.taint) {
    if (ev.taint->steps.empty()) throw MissingEvidence("taint path without statements");
    a.kind = AttributionKind::TaintPath;
    double w = 1.0 / static_cast<double>(ev.taint->steps.size());
    for (const auto& s : ev.taint->steps) a.items.push_back({"statement", s.stmt, {}, f.path, s.span, w});
    return a;
  }
  if (ev.clone) {
    if (ev.clone->partners.empty()) throw MissingEvidence("clone without partner");
    a.kind = AttributionKind::ClonePair;
    // The finding's own region plus its first partner; further partners are
    // listed in the evidence but the pair is what the rule reports.
    a.items.push_back({"span", kNoNode, {}, f.path, f.span, 0.5});
    a.items.push_back({"span", kNoNode, {}, ev.clone->partners.front().path, ev.clone->partners.front().span, 0.5});
    return a;
  }
  if (ev.literal) {
    a.kind = AttributionKind::Literal;
    a.items.push_back({"span", kNoNode, {}, f.path, ev.literal->literal, 1.0});
    return a;
  }
  if (ev.metrics.empty()) throw MissingEvidence(std::string(to_string(f.rule)) + " finding " + f.id);
  a.kind = AttributionKind::MetricExceedance;
  std::vector<double> ex;
  double total = 0;
  for (const auto& m : ev.metrics) {
    double e = m.threshold > 0 && m.value > m.threshold ? (m.value - m.threshold) / m.threshold : 0.0;
    ex.push_back(e);
    total += e;
  }
  for (std::size_t i = 0; i < ev.metrics.size(); ++i) {
    if (total > 0 && ex[i] == 0) continue;
    double w = total > 0 ? ex[i] / total : 1.0 / static_cast<double>(ev.metrics.size());
    a.items.push_back({"metric", kNoNode, ev.metrics[i].metric, f.path, f.entity.span, w});
  }
  return a;
}

ExplainFormat parse_explain_format(std::string_view name) {
  if (name == "text") return ExplainFormat::Text;
  if (name == "markdown" || name == "md") return ExplainFormat::Markdown;
  if (name == "json") return ExplainFormat::Json;
  throw UnknownFormat(std::string(name));
}

nlohmann::ordered_json to_json(const Attribution& a) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& it : a.items) {
    nlohmann::ordered_json j{{"target", it.target}};
    if (it.target == "statement") j["stmt"] = it.stmt;
    if (it.target == "metric") j["metric"] = it.metric;
    j["path"] = it.path;
    j["span"] = span_to_json(it.span);
    j["weight"] = it.weight;
    items.push_back(j);
  }
  return {{"kind", std::string(to_string(a.kind))}, {"items", items}};
}

Attribution attribution_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("items")) throw Error("attribution json: expected {kind, items}");
  Attribution a;
  a.kind = parse_kind(j["kind"].get<std::string>());
  for (const auto& it : j["items"]) {
    AttributionItem item;
    item.target = it.at("target").get<std::string>();
    if (item.target != "statement" && item.target != "span" && item.target != "metric")
      throw Error("attribution json: unknown target " + item.target);
    item.stmt = it.value("stmt", kNoNode);
    item.metric = it.value("metric", "");
    item.path = it.value("path", "");
    item.span = span_from_json(it.at("span"));
    item.weight = it.at("weight").get<double>();
    a.items.push_back(item);
  }
  return a;
}

std::string render_explanation(const Finding& f, const Attribution& a, ExplainFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExplainFormat::Json: {
      nlohmann::ordered_json j{{"finding", to_json(f)}, {"attribution", to_json(a)}, {"reasons", reasons(f)}};
      out << j.dump(2) << "\n";
      break;
    }
    case ExplainFormat::Text: {
      out << headline(f) << " in " << f.entity.name << " at " << f.path << ":" << f.span.startLine << "-"
          << f.span.endLine << " (confidence " << fmt(f.confidence) << ")\n";
      for (const auto& r : reasons(f)) out << "  why: " << r << "\n";
      for (const auto& it : a.items) out << "  " << fmt(it.weight, 3) << "  " << item_label(it) << "\n";
      break;
    }
    case ExplainFormat::Markdown: {
      out << "### " << headline(f) << " in `" << f.entity.name << "`\n\n";
      out << "`" << f.path << "` " << lines(f.span) << ", confidence " << fmt(f.confidence) << " (structural "
          << fmt(f.structuralScore) << ", semantic " << fmt(f.semanticScore) << ")\n\n";
      if (f.evidence.taint) {
        const auto& steps = f.evidence.taint->steps;
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const char* role = i == 0 ? "Source" : i + 1 == steps.size() ? "Sink" : "Flow";
          out << "- **" << role << "** line " << steps[i].span.startLine;
          if (i == 0) out << ": " << f.evidence.taint->source;
          if (i + 1 == steps.size()) out << ": " << f.evidence.taint->sink;
          if (!steps[i].variable.empty()) out << " (carries `" << steps[i].variable << "`)";
          out << "\n";
        }
        out << "\n";
      }
      for (const auto& r : reasons(f)) out << "- " << r << "\n";
      out << "\n| weight | target |\n|---|---|\n";
      for (const auto& it : a.items) out << "| " << fmt(it.weight, 3) << " | " << item_label(it) << " |\n";
      break;
    }
  }
  return out.str();
}

}  // namespace hybridlint
