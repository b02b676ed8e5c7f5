#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybridlint/detection.hpp"
#include "hybridlint/risk.hpp"

namespace hybridlint {

enum class SizeClass { Small, Medium, Large };

std::string_view to_string(SizeClass s);

struct Label {
  Rule category = Rule::LongMethod;
  std::optional<int> cwe;
  int startLine = 1;
  int endLine = 1;
  bool operator==(const Label&) const = default;
};

struct CorpusUnit {
  std::string path;  // as written in the manifest, relative to its directory
  std::string language;
  SizeClass sizeClass = SizeClass::Small;
  std::vector<Label> labels;
  std::optional<SourceUnit> unit;  // absent when the file is missing
  std::optional<std::string> problem;  // read or parse failure, kept for reporting
};

struct Corpus {
  int version = 1;
  std::filesystem::path root;
  std::vector<CorpusUnit> units;
  std::vector<std::string> warnings;

  std::size_t label_count() const;
};

class ManifestSchemaError : public Error {
 public:
  ManifestSchemaError(std::string pointer, const std::string& what)
      : Error("manifest " + (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Parses a manifest: {version, units: [{path, language, sizeClass, labels:
/// [{category, cwe?, span: {startLine, endLine}}]}]}. Unknown keys are schema
/// errors. Missing or unparseable units are kept and flagged.
Corpus load_corpus(const std::filesystem::path& manifest);
Corpus corpus_from_json(const nlohmann::json& j, const std::filesystem::path& root);

class RatioError : public Error {
 public:
  explicit RatioError(const std::string& what) : Error("split ratios: " + what) {}
};

struct Split {
  std::vector<std::size_t> train, validation, test;  // unit indices, ascending
  bool operator==(const Split&) const = default;
};

/// Stratum key: language, size class and the unit's most frequent label
/// category ("none" when unlabeled; ties go to the earlier rule).
std::string stratum_of(const CorpusUnit& unit);

/// Per stratum, shuffles with one mt19937_64 seeded by `seed` (strata in key
/// order) and cuts by largest-remainder quotas.
Split stratified_split(const Corpus& corpus, std::uint64_t seed, std::array<double, 3> ratios = {0.7, 0.15, 0.15});

/// Largest-remainder apportionment of n items; ties go to the earlier slot.
std::array<std::size_t, 3> apportion(std::size_t n, const std::array<double, 3>& ratios);

struct ConfusionCounts {
  long tp = 0, fp = 0, fn = 0, tn = 0;
  ConfusionCounts& operator+=(const ConfusionCounts& o);
  bool operator==(const ConfusionCounts&) const = default;
};

struct Confusion {
  std::map<Rule, ConfusionCounts> perCategory;
  ConfusionCounts pooled;
  bool operator==(const Confusion&) const = default;
};

/// One-to-one greedy matching per (unit, category) in span order: a
/// prediction matches the first unmatched label of the same category whose
/// line range overlaps it. TN counts universe entities of each category
/// (functions for method rules, classes for class rules, simple statements
/// otherwise) touched by neither a label nor a prediction.
Confusion match_findings(const std::vector<Finding>& predicted, const Corpus& corpus);

/// Counts without the TN universe, for callers holding only spans.
ConfusionCounts match_spans(std::vector<std::pair<int, int>> predicted, std::vector<std::pair<int, int>> labels);

struct Scores {
  std::optional<double> accuracy, precision, recall, f1;
};

Scores scores_of(const ConfusionCounts& c);
/// Harmonic mean; 0 when both are 0.
double f1_score(double precision, double recall);

struct MetricsReport {
  std::map<Rule, Scores> perCategory;
  Scores pooled;
  std::optional<double> coveragePercent;
  std::optional<double> runtimeMsPerKloc;
  Confusion counts;
};

MetricsReport metrics_report(const Confusion& counts, double totalMs, int totalLoc);

class EmptyKnownList : public Error {
 public:
  EmptyKnownList() : Error("coverage: known issue list is empty") {}
};

struct KnownIssue {
  std::string path;
  int cwe = 0;
  int startLine = 1;
  int endLine = 1;
  auto operator<=>(const KnownIssue&) const = default;
};

std::vector<KnownIssue> known_issues(const Corpus& corpus);
/// Percentage of distinct known issues hit by at least one finding with the
/// same path and CWE whose lines overlap.
double coverage(const std::vector<Finding>& findings, const std::vector<KnownIssue>& known);

struct RiskEntry {
  std::string key;  // "CWE-89", or "smell"
  int count = 0;
  double baseScore = 0;
  RiskBand band() const { return band_of(baseScore); }
};

struct RiskReport {
  std::vector<RiskEntry> before, after;
  double averageBefore = 0, averageAfter = 0;
  std::vector<int> unknownCwes;
  RiskBand bandBefore() const { return band_of(averageBefore); }
  RiskBand bandAfter() const { return band_of(averageAfter); }
};

RiskReport risk_report(const std::vector<Finding>& before, const std::vector<Finding>& after,
                       const RiskTable& table = {});

struct EvalRun {
  std::vector<Finding> findings;
  std::vector<Finding> candidates;
  ScanResult scan;
  MetricsReport report;
};

/// Scans every parsed unit (paths relative to the corpus root) and scores
/// the result against the labels.
EvalRun evaluate(const Corpus& corpus, const DetectionConfig& config);
/// Re-scores the same candidates under different fusion weights.
MetricsReport rescore(const Corpus& corpus, const EvalRun& run, const FusionWeights& weights, ScorerKind scorer);

nlohmann::ordered_json to_json(const MetricsReport& r);
nlohmann::ordered_json to_json(const RiskReport& r);
nlohmann::ordered_json to_json(const Split& s, const Corpus& corpus);
std::string render_table(const MetricsReport& r);

}  // namespace hybridlint
