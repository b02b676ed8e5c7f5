#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hybridlint/ast.hpp"
#include "hybridlint/cfg.hpp"
#include "hybridlint/dataflow.hpp"
#include "hybridlint/finding.hpp"
#include "hybridlint/lexer.hpp"
#include "hybridlint/metrics.hpp"
#include "hybridlint/pdg.hpp"

namespace hybridlint {

// ---- configuration ---------------------------------------------------------

struct Thresholds {
  int longMethodNos = 30;
  int longMethodCc = 10;
  int godClassNom = 15;
  int godClassWmc = 47;
  int godClassLoc = 200;
  int godClassCbo = 8;
  double dataClassAccessorRatio = 0.8;
  int dataClassFields = 3;
  int featureEnvyForeign = 3;
  int cloneTokens = 30;
  int secretNameMinLength = 6;
  int secretEntropyMinLength = 16;
  double secretEntropy = 3.5;
};

struct RuleWeights {
  double wStruct = 0.6;
  double wSem = 0.4;
  bool operator==(const RuleWeights&) const = default;
};

struct FusionWeights {
  double wStruct = 0.6;
  double wSem = 0.4;
  double tau = 0.5;
  std::map<Rule, RuleWeights> overrides;

  RuleWeights for_rule(Rule rule) const;
  /// Throws Error unless every weight pair sums to 1 and tau is in (0,1).
  void validate() const;
  bool operator==(const FusionWeights&) const = default;
};

struct SinkPattern {
  std::string pattern;
  int cwe = 0;
  int arg = 0;  // argument index that must carry taint; -1 for any
  bool operator==(const SinkPattern&) const = default;
};

/// Patterns are dotted call names with `*` wildcards. A pattern without a dot
/// also matches the last component of a dotted name, so "execute" matches
/// "cursor.execute".
struct TaintPolicy {
  std::vector<std::string> sourceCalls;
  std::vector<std::string> sourceParams;
  std::vector<SinkPattern> sinks;
  std::vector<std::string> sanitizers;

  static TaintPolicy defaults();
  void validate() const;
  bool operator==(const TaintPolicy&) const = default;
};

bool glob_match(std::string_view pattern, std::string_view text);
bool call_matches(std::string_view pattern, std::string_view dotted);

enum class ScorerKind { Builtin, None, External };

struct ScorerConfig {
  ScorerKind kind = ScorerKind::Builtin;
  std::string command;
  double timeoutSec = 2.0;
  int windowLines = 3;
};

struct DetectionConfig {
  Thresholds thresholds;
  FusionWeights weights;
  TaintPolicy policy = TaintPolicy::defaults();
  std::set<Rule> enabled{all_rules().begin(), all_rules().end()};
  ScorerConfig scorer;
};

// ---- per-unit views ----------------------------------------------------------

struct FunctionViews {
  NodeId fn = kNoNode;
  Cfg cfg;
  DefUseIndex defuse;
  Pdg pdg;
};

/// Everything the detectors read for one unit. Building it throws LexError or
/// ParseError.
struct UnitViews {
  const SourceUnit* unit = nullptr;
  TokenStream tokens;
  Ast ast;
  std::set<int> codeLines;
  std::vector<FunctionViews> functions;

  const FunctionViews* function(NodeId fn) const;
};

UnitViews build_views(const SourceUnit& unit);
EntityRef entity_ref(const Ast& ast, NodeId entity);

// ---- structural detectors ----------------------------------------------------
// Each returns an unfused candidate: structuralScore and evidence are set,
// semanticScore and confidence are left at 0.

std::optional<Finding> detect_long_method(const UnitViews& v, NodeId fn, const MetricVector& m, const Thresholds& t);
std::optional<Finding> detect_god_class(const UnitViews& v, NodeId cls, const MetricVector& m, const Thresholds& t);
std::optional<Finding> detect_data_class(const UnitViews& v, NodeId cls, const MetricVector& m, const Thresholds& t);
std::optional<Finding> detect_feature_envy(const UnitViews& v, NodeId fn, const Thresholds& t);
std::vector<Finding> detect_duplicated_code(const std::vector<const UnitViews*>& units, const Thresholds& t);
std::vector<Finding> detect_hardcoded_secret(const UnitViews& v, const Thresholds& t);

/// Shannon entropy in bits per character.
double shannon_entropy(std::string_view s);
/// Contents of a string literal token without prefix and quotes.
std::string literal_body(std::string_view lexeme);

/// Identifiers become ID and literals LIT; everything else keeps its lexeme.
/// Comments are dropped.
std::vector<std::string> normalize_tokens(const TokenStream& tokens, std::vector<Span>* spans = nullptr);

// ---- taint -------------------------------------------------------------------

struct TaintPath {
  std::vector<NodeId> stmts;         // source statement first, sink statement last
  std::vector<std::string> variables;  // variables[i] flows stmts[i] -> stmts[i+1]
  bool sanitized = false;
  int cwe = 0;
  std::string source;
  std::string sink;
  bool operator==(const TaintPath&) const = default;
};

inline constexpr std::size_t kTaintPathCap = 10000;

/// Def-clear DataDep chains from sources to sinks within one function.
std::vector<TaintPath> taint_analyze(const Ast& ast, const Pdg& pdg, const TaintPolicy& policy);

/// Statement-level predicates shared with the path enumeration. `source`
/// receives a description when the statement introduces taint.
bool is_source_statement(const Ast& ast, NodeId stmt, const TaintPolicy& policy, std::string* source = nullptr);
/// Sinks in `stmt` whose guarded argument reads `var` (or contains a source
/// call when `var` is empty).
std::vector<std::pair<std::string, SinkPattern>> sinks_reading(const Ast& ast, NodeId stmt, const std::string& var,
                                                               const TaintPolicy& policy);
/// True when a sanitizer call in `stmt` wraps a read of `var`.
bool sanitizes(const Ast& ast, NodeId stmt, const std::string& var, const TaintPolicy& policy);

Rule rule_for_cwe(int cwe);

/// One candidate per (sink statement, cwe): the first unsanitized path, or the
/// first path with structuralScore 0 when every path is sanitized.
std::vector<Finding> detect_injection(const UnitViews& v, NodeId fn, const std::vector<TaintPath>& paths);

// ---- semantic scoring and fusion ---------------------------------------------

struct Cue {
  std::string text;
  std::string match;  // "word": case-insensitive word inside any token; "token": exact lexeme
  double weight = 0;
  int cap = 1;
};

struct Lexicon {
  std::map<Rule, std::vector<Cue>> cues;
  static Lexicon from_json(const nlohmann::json& j);
  static const Lexicon& builtin();
};

struct ScoreRequest {
  std::string id;
  Rule rule = Rule::LongMethod;
  std::vector<Token> window;
  std::vector<Span> spans;
};

/// Tokens on lines [start - k, end + k] of each span, in source order.
std::vector<Token> context_window(const TokenStream& tokens, const std::vector<Span>& spans, int k);
std::string window_text(const std::vector<Token>& window);

/// min(1, sum of weight * min(hits, cap)) over the rule's cues.
double lexical_score(const Lexicon& lexicon, Rule rule, const std::vector<Token>& window);

class PluginTimeout : public Error {
 public:
  using Error::Error;
};
class PluginMalformedReply : public Error {
 public:
  using Error::Error;
};

class SemanticScorer {
 public:
  virtual ~SemanticScorer() = default;
  virtual double score(const ScoreRequest& request) = 0;
};

class LexicalScorer : public SemanticScorer {
 public:
  explicit LexicalScorer(const Lexicon& lexicon = Lexicon::builtin()) : lexicon_(lexicon) {}
  double score(const ScoreRequest& request) override;

 private:
  const Lexicon& lexicon_;
};

/// Long-lived child process speaking line-delimited JSON on stdin/stdout:
/// request {id, rule, window, spans}, reply {id, score}.
class ExternalScorer : public SemanticScorer {
 public:
  ExternalScorer(std::string command, double timeoutSec);
  ~ExternalScorer() override;
  ExternalScorer(const ExternalScorer&) = delete;
  ExternalScorer& operator=(const ExternalScorer&) = delete;
  /// Throws PluginTimeout or PluginMalformedReply.
  double score(const ScoreRequest& request) override;

 private:
  void start();
  void stop();
  std::string command_;
  double timeoutSec_;
  int pid_ = -1;
  int in_ = -1;   // child's stdin
  int out_ = -1;  // child's stdout
  std::string buffer_;
};

double fuse(double structural, double semantic, const RuleWeights& w);
/// Weights actually applied to `rule`: (1, 0) when no scorer is configured.
RuleWeights effective_weights(const FusionWeights& w, Rule rule, ScorerKind scorer);

// ---- scanning ----------------------------------------------------------------

struct SkippedUnit {
  std::string path;
  std::string message;
  Span span;
};

struct ScanResult {
  std::vector<Finding> findings;    // emitted, canonical order
  std::vector<Finding> candidates;  // every scored candidate, canonical order
  std::vector<SkippedUnit> skipped;
  std::vector<std::string> incidents;
  std::map<std::string, double> unitMs;
  double totalMs = 0;
  int totalLoc = 0;
};

/// Re-applies fusion to already scored candidates.
std::vector<Finding> refuse(const std::vector<Finding>& candidates, const FusionWeights& weights, ScorerKind scorer);

ScanResult scan_units(const std::vector<SourceUnit>& units, const DetectionConfig& config);
ScanResult scan_unit(const SourceUnit& unit, const DetectionConfig& config);

}  // namespace hybridlint
