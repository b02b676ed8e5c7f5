#include "hybridlint/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace hybridlint {

std::string_view to_string(SizeClass s) {
  switch (s) {
    case SizeClass::Small: return "small";
    case SizeClass::Medium: return "medium";
    case SizeClass::Large: return "large";
  }
  return "?";
}

std::size_t Corpus::label_count() const {
  std::size_t n = 0;
  for (const auto& u : units) n += u.labels.size();
  return n;
}

// ---- manifest ------------------------------------------------------------------

namespace {

using Json = nlohmann::json;

const Json& require(const Json& obj, const std::string& key, const std::string& at) {
  if (!obj.contains(key)) throw ManifestSchemaError(at, "missing required key '" + key + "'");
  return obj[key];
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& at) {
  if (!obj.is_object()) throw ManifestSchemaError(at, "expected an object");
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) throw ManifestSchemaError(at + "/" + k, "unknown key");
  }
}

std::string string_at(const Json& v, const std::string& at) {
  if (!v.is_string() || v.get<std::string>().empty()) throw ManifestSchemaError(at, "expected a non-empty string");
  return v.get<std::string>();
}

int int_at(const Json& v, const std::string& at, int min) {
  if (!v.is_number_integer()) throw ManifestSchemaError(at, "expected an integer");
  int x = v.get<int>();
  if (x < min) throw ManifestSchemaError(at, "must be >= " + std::to_string(min));
  return x;
}

SizeClass size_at(const Json& v, const std::string& at) {
  std::string s = string_at(v, at);
  if (s == "small") return SizeClass::Small;
  if (s == "medium") return SizeClass::Medium;
  if (s == "large") return SizeClass::Large;
  throw ManifestSchemaError(at, "sizeClass must be small, medium or large");
}

Label label_at(const Json& j, const std::string& at) {
  only_keys(j, {"category", "cwe", "span"}, at);
  Label l;
  std::string cat = string_at(require(j, "category", at), at + "/category");
  auto rule = parse_rule(cat);
  if (!rule) throw ManifestSchemaError(at + "/category", "unknown category '" + cat + "'");
  l.category = *rule;
  if (j.contains("cwe") && !j["cwe"].is_null()) l.cwe = int_at(j["cwe"], at + "/cwe", 1);
  if (auto fixed = fixed_cwe(l.category)) {
    if (!l.cwe) l.cwe = fixed;
    else if (*l.cwe != *fixed)
      throw ManifestSchemaError(at + "/cwe", "category " + cat + " implies CWE-" + std::to_string(*fixed));
  } else if (l.cwe) {
    throw ManifestSchemaError(at + "/cwe", "category " + cat + " carries no CWE");
  }
  const Json& span = require(j, "span", at);
  only_keys(span, {"startLine", "endLine"}, at + "/span");
  l.startLine = int_at(require(span, "startLine", at + "/span"), at + "/span/startLine", 1);
  l.endLine = int_at(require(span, "endLine", at + "/span"), at + "/span/endLine", 1);
  if (l.endLine < l.startLine) throw ManifestSchemaError(at + "/span/endLine", "endLine before startLine");
  return l;
}

}  // namespace

Corpus corpus_from_json(const Json& j, const std::filesystem::path& root) {
  only_keys(j, {"version", "units"}, "");
  Corpus c;
  c.root = root;
  c.version = int_at(require(j, "version", ""), "/version", 1);
  const Json& units = require(j, "units", "");
  if (!units.is_array()) throw ManifestSchemaError("/units", "expected an array");
  if (units.empty()) c.warnings.push_back("manifest lists no units");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::string at = "/units/" + std::to_string(i);
    const Json& u = units[i];
    only_keys(u, {"path", "language", "sizeClass", "labels"}, at);
    CorpusUnit cu;
    cu.path = string_at(require(u, "path", at), at + "/path");
    if (!seen.insert(cu.path).second) throw ManifestSchemaError(at + "/path", "duplicate unit path");
    cu.language = string_at(require(u, "language", at), at + "/language");
    cu.sizeClass = size_at(require(u, "sizeClass", at), at + "/sizeClass");
    const Json& labels = require(u, "labels", at);
    if (!labels.is_array()) throw ManifestSchemaError(at + "/labels", "expected an array");
    for (std::size_t k = 0; k < labels.size(); ++k) cu.labels.push_back(label_at(labels[k], at + "/labels/" + std::to_string(k)));
    std::filesystem::path file = root / cu.path;
    if (!std::filesystem::exists(file)) {
      cu.problem = "file not found";
      c.warnings.push_back(cu.path + ": file not found");
    } else {
      cu.unit.emplace(cu.path, read_file(file), cu.language);
      try {
        build_views(*cu.unit);
      } catch (const Error& e) {
        cu.problem = e.what();
        c.warnings.push_back(cu.path + ": " + e.what());
      }
    }
    c.units.push_back(std::move(cu));
  }
  return c;
}

Corpus load_corpus(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error("cannot read manifest " + manifest.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ManifestSchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return corpus_from_json(j, manifest.parent_path());
}

// ---- split -----------------------------------------------------------------------

std::string stratum_of(const CorpusUnit& u) {
  std::map<Rule, int> counts;
  for (const auto& l : u.labels) ++counts[l.category];
  std::string dominant = "none";
  int best = 0;
  for (Rule r : all_rules()) {
    auto it = counts.find(r);
    if (it != counts.end() && it->second > best) {
      best = it->second;
      dominant = std::string(to_string(r));
    }
  }
  return u.language + "|" + std::string(to_string(u.sizeClass)) + "|" + dominant;
}

std::array<std::size_t, 3> apportion(std::size_t n, const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> out{};
  std::array<double, 3> frac{};
  std::size_t given = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    double q = static_cast<double>(n) * ratios[k] + 1e-9;
    out[k] = static_cast<std::size_t>(std::floor(q));
    frac[k] = q - std::floor(q);
    given += out[k];
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b] + 1e-12; });
  for (std::size_t i = 0; given < n; ++i, ++given) ++out[order[i % 3]];
  return out;
}

Split stratified_split(const Corpus& corpus, std::uint64_t seed, std::array<double, 3> ratios) {
  double sum = 0;
  for (double r : ratios) {
    if (!(r >= 0) || r > 1) throw RatioError("each ratio must lie in [0, 1]");
    sum += r;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw RatioError("ratios sum to " + std::to_string(sum) + ", not 1");

  std::map<std::string, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < corpus.units.size(); ++i) strata[stratum_of(corpus.units[i])].push_back(i);

  std::mt19937_64 rng(seed);
  Split s;
  for (auto& [_, idx] : strata) {
    // Fisher-Yates written out so the order does not depend on the standard
    // library's shuffle.
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
    auto q = apportion(idx.size(), ratios);
    std::size_t p = 0;
    for (std::size_t k = 0; k < q[0]; ++k) s.train.push_back(idx[p++]);
    for (std::size_t k = 0; k < q[1]; ++k) s.validation.push_back(idx[p++]);
    for (std::size_t k = 0; k < q[2]; ++k) s.test.push_back(idx[p++]);
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.validation.begin(), s.validation.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

// ---- matching --------------------------------------------------------------------

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  tn += o.tn;
  return *this;
}

ConfusionCounts match_spans(std::vector<std::pair<int, int>> predicted, std::vector<std::pair<int, int>> labels) {
  std::sort(predicted.begin(), predicted.end());
  std::sort(labels.begin(), labels.end());
  std::vector<bool> used(labels.size(), false);
  ConfusionCounts c;
  for (const auto& [ps, pe] : predicted) {
    bool hit = false;
    for (std::size_t i = 0; i < labels.size() && !hit; ++i) {
      if (used[i] || labels[i].first > pe || ps > labels[i].second) continue;
      used[i] = true;
      hit = true;
    }
    hit ? ++c.tp : ++c.fp;
  }
  for (bool u : used)
    if (!u) ++c.fn;
  return c;
}

namespace {

enum class Universe { Functions, Classes, Statements };

Universe universe_of(Rule r) {
  switch (r) {
    case Rule::LongMethod:
    case Rule::FeatureEnvy: return Universe::Functions;
    case Rule::GodClass:
    case Rule::DataClass: return Universe::Classes;
    default: return Universe::Statements;
  }
}

std::vector<std::pair<int, int>> universe_spans(const Ast& ast, Universe u) {
  std::vector<std::pair<int, int>> out;
  for (const Node& n : ast.nodes()) {
    bool in = false;
    switch (u) {
      case Universe::Functions: in = n.kind == NodeKind::FunctionDef; break;
      case Universe::Classes: in = n.kind == NodeKind::ClassDef; break;
      case Universe::Statements:
        in = is_statement(n.kind) && !is_compound(n.kind) && n.kind != NodeKind::FunctionDef &&
             n.kind != NodeKind::ClassDef && n.kind != NodeKind::Param;
        break;
    }
    if (in) out.emplace_back(n.span.startLine, n.span.endLine);
  }
  return out;
}

bool overlaps(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first <= b.second && b.first <= a.second;
}

}  // namespace

Confusion match_findings(const std::vector<Finding>& predicted, const Corpus& corpus) {
  Confusion out;
  for (Rule r : all_rules()) out.perCategory[r] = {};
  std::map<std::string, const CorpusUnit*> byPath;
  for (const auto& u : corpus.units) byPath[u.path] = &u;

  std::map<std::pair<std::string, Rule>, std::vector<std::pair<int, int>>> preds;
  for (const auto& f : predicted) preds[{f.path, f.rule}].emplace_back(f.span.startLine, f.span.endLine);

  for (const auto& [key, spans] : preds)
    if (!byPath.count(key.first)) out.perCategory[key.second].fp += static_cast<long>(spans.size());

  for (const auto& cu : corpus.units) {
    std::optional<Ast> ast;
    if (cu.unit && !cu.problem) ast = parse(*cu.unit);
    for (Rule r : all_rules()) {
      std::vector<std::pair<int, int>> labels;
      for (const auto& l : cu.labels)
        if (l.category == r) labels.emplace_back(l.startLine, l.endLine);
      auto it = preds.find({cu.path, r});
      std::vector<std::pair<int, int>> ps = it == preds.end() ? std::vector<std::pair<int, int>>{} : it->second;
      ConfusionCounts c = match_spans(ps, labels);
      if (ast) {
        for (const auto& e : universe_spans(*ast, universe_of(r))) {
          bool touched = std::any_of(labels.begin(), labels.end(), [&](const auto& l) { return overlaps(l, e); }) ||
                         std::any_of(ps.begin(), ps.end(), [&](const auto& p) { return overlaps(p, e); });
          if (!touched) ++c.tn;
        }
      }
      out.perCategory[r] += c;
    }
  }
  for (const auto& [_, c] : out.perCategory) out.pooled += c;
  return out;
}

// ---- metrics ---------------------------------------------------------------------

double f1_score(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

Scores scores_of(const ConfusionCounts& c) {
  Scores s;
  double tp = static_cast<double>(c.tp), fp = static_cast<double>(c.fp), fn = static_cast<double>(c.fn),
         tn = static_cast<double>(c.tn);
  if (tp + tn + fp + fn > 0) s.accuracy = (tp + tn) / (tp + tn + fp + fn);
  if (tp + fp > 0) s.precision = tp / (tp + fp);
  if (tp + fn > 0) s.recall = tp / (tp + fn);
  if (s.precision && s.recall) s.f1 = f1_score(*s.precision, *s.recall);
  return s;
}

MetricsReport metrics_report(const Confusion& counts, double totalMs, int totalLoc) {
  MetricsReport r;
  r.counts = counts;
  for (const auto& [rule, c] : counts.perCategory) r.perCategory[rule] = scores_of(c);
  r.pooled = scores_of(counts.pooled);
  if (totalLoc > 0) r.runtimeMsPerKloc = totalMs * 1000.0 / totalLoc;
  return r;
}

std::vector<KnownIssue> known_issues(const Corpus& corpus) {
  std::set<KnownIssue> out;
  for (const auto& u : corpus.units)
    for (const auto& l : u.labels)
      if (l.cwe) out.insert({u.path, *l.cwe, l.startLine, l.endLine});
  return {out.begin(), out.end()};
}

double coverage(const std::vector<Finding>& findings, const std::vector<KnownIssue>& known) {
  std::set<KnownIssue> distinct(known.begin(), known.end());
  if (distinct.empty()) throw EmptyKnownList();
  std::size_t hit = 0;
  for (const auto& k : distinct) {
    bool found = std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
      return f.cwe && *f.cwe == k.cwe && f.path == k.path && f.span.startLine <= k.endLine &&
             k.startLine <= f.span.endLine;
    });
    if (found) ++hit;
  }
  return 100.0 * static_cast<double>(hit) / static_cast<double>(distinct.size());
}

// ---- risk ------------------------------------------------------------------------

RiskReport risk_report(const std::vector<Finding>& before, const std::vector<Finding>& after, const RiskTable& table) {
  RiskReport r;
  std::set<int> unknown;
  auto summarize = [&](const std::vector<Finding>& fs, std::vector<RiskEntry>& entries, double& average) {
    std::map<std::string, RiskEntry> byKey;
    double sum = 0;
    for (const auto& f : fs) {
      bool isUnknown = false;
      double s = table.score(f, &isUnknown);
      if (isUnknown) unknown.insert(*f.cwe);
      std::string key = f.cwe ? "CWE-" + std::to_string(*f.cwe) : "smell";
      RiskEntry& e = byKey[key];
      e.key = key;
      ++e.count;
      e.baseScore = s;
      sum += s;
    }
    for (auto& [_, e] : byKey) entries.push_back(e);
    average = fs.empty() ? 0.0 : sum / static_cast<double>(fs.size());
  };
  summarize(before, r.before, r.averageBefore);
  summarize(after, r.after, r.averageAfter);
  r.unknownCwes.assign(unknown.begin(), unknown.end());
  return r;
}

// ---- runs ------------------------------------------------------------------------

namespace {

MetricsReport report_for(const Corpus& corpus, const std::vector<Finding>& findings, double totalMs, int totalLoc) {
  MetricsReport r = metrics_report(match_findings(findings, corpus), totalMs, totalLoc);
  auto known = known_issues(corpus);
  if (!known.empty()) r.coveragePercent = coverage(findings, known);
  return r;
}

}  // namespace

EvalRun evaluate(const Corpus& corpus, const DetectionConfig& config) {
  std::vector<SourceUnit> units;
  for (const auto& u : corpus.units)
    if (u.unit && !u.problem) units.push_back(*u.unit);
  EvalRun run;
  run.scan = scan_units(units, config);
  run.findings = run.scan.findings;
  run.candidates = run.scan.candidates;
  run.report = report_for(corpus, run.findings, run.scan.totalMs, run.scan.totalLoc);
  return run;
}

MetricsReport rescore(const Corpus& corpus, const EvalRun& run, const FusionWeights& weights, ScorerKind scorer) {
  return report_for(corpus, refuse(run.candidates, weights, scorer), run.scan.totalMs, run.scan.totalLoc);
}

// ---- output ----------------------------------------------------------------------

namespace {

nlohmann::ordered_json opt(const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nullptr; }

nlohmann::ordered_json scores_json(const Scores& s, const ConfusionCounts& c) {
  return {{"accuracy", opt(s.accuracy)}, {"precision", opt(s.precision)}, {"recall", opt(s.recall)},
          {"f1", opt(s.f1)},             {"tp", c.tp},                    {"fp", c.fp},
          {"fn", c.fn},                  {"tn", c.tn}};
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "   -";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const MetricsReport& r) {
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (const auto& [rule, s] : r.perCategory) cats[std::string(to_string(rule))] = scores_json(s, r.counts.perCategory.at(rule));
  return {{"pooled", scores_json(r.pooled, r.counts.pooled)},
          {"categories", cats},
          {"coveragePercent", opt(r.coveragePercent)},
          {"runtimeMsPerKloc", opt(r.runtimeMsPerKloc)}};
}

nlohmann::ordered_json to_json(const RiskReport& r) {
  auto entries = [](const std::vector<RiskEntry>& es) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& e : es)
      a.push_back({{"key", e.key}, {"count", e.count}, {"baseScore", e.baseScore}, {"band", std::string(to_string(e.band()))}});
    return a;
  };
  return {{"before", entries(r.before)},
          {"after", entries(r.after)},
          {"averageBefore", r.averageBefore},
          {"averageAfter", r.averageAfter},
          {"bandBefore", std::string(to_string(r.bandBefore()))},
          {"bandAfter", std::string(to_string(r.bandAfter()))},
          {"unknownCwes", r.unknownCwes}};
}

nlohmann::ordered_json to_json(const Split& s, const Corpus& corpus) {
  auto paths = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (std::size_t i : idx) out.push_back(corpus.units[i].path);
    return out;
  };
  return {{"train", paths(s.train)}, {"validation", paths(s.validation)}, {"test", paths(s.test)}};
}

std::string render_table(const MetricsReport& r) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-18s %5s %5s %5s %5s %5s %5s %5s %7s\n", "category", "acc", "prec", "rec", "f1", "tp",
                "fp", "fn", "tn");
  out << buf;
  auto row = [&](const std::string& name, const Scores& s, const ConfusionCounts& c) {
    std::snprintf(buf, sizeof buf, "%-18s %5s %5s %5s %5s %5ld %5ld %5ld %7ld\n", name.c_str(), cell(s.accuracy).c_str(),
                  cell(s.precision).c_str(), cell(s.recall).c_str(), cell(s.f1).c_str(), c.tp, c.fp, c.fn, c.tn);
    out << buf;
  };
  for (const auto& [rule, s] : r.perCategory) row(std::string(to_string(rule)), s, r.counts.perCategory.at(rule));
  row("pooled", r.pooled, r.counts.pooled);
  if (r.coveragePercent) out << "CWE coverage: " << cell(r.coveragePercent) << "%\n";
  if (r.runtimeMsPerKloc) out << "runtime: " << cell(r.runtimeMsPerKloc) << " ms/KLOC\n";
  return out.str();
}

}  // namespace hybridlint
