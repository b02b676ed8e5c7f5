#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "hybridlint/detection.hpp"
#include "oracle/taint_oracle.hpp"
#include "unit/test_support.hpp"

using namespace hybridlint;
using testing_support::find_class;
using testing_support::find_function;
using testing_support::fixture_path;
using testing_support::fixture_text;

namespace {

struct Loaded {
  std::unique_ptr<SourceUnit> unit;
  UnitViews views;
};

Loaded load(const std::string& path, const std::string& text) {
  Loaded l;
  l.unit = std::make_unique<SourceUnit>(path, text);
  l.views = build_views(*l.unit);
  return l;
}

Loaded load_fixture(const std::string& rel) { return load(rel, fixture_text(rel)); }

MetricVector with(int nos, int cc) {
  MetricVector m;
  m.nos = nos;
  m.cc = cc;
  return m;
}

std::vector<Finding> scan_text(const std::string& text, DetectionConfig cfg = {}) {
  return scan_unit(SourceUnit("t.py", text), cfg).findings;
}

}  // namespace

// ---- Long Method / God Class / Data Class / Feature Envy ------------------------

TEST(LongMethod, Thresholds) {
  Loaded l = load("t.py", "def f():\n    pass\n");
  NodeId fn = find_function(l.views.ast, "f");
  Thresholds t;
  EXPECT_FALSE(detect_long_method(l.views, fn, with(5, 2), t));
  auto f = detect_long_method(l.views, fn, with(40, 4), t);
  ASSERT_TRUE(f);
  EXPECT_NEAR(f->structuralScore, 40.0 / 60.0, 1e-12);
  EXPECT_FALSE(detect_long_method(l.views, fn, with(30, 10), t));
  EXPECT_TRUE(detect_long_method(l.views, fn, with(30, 11), t));
  EXPECT_TRUE(detect_long_method(l.views, fn, with(31, 10), t));
}

TEST(GodClass, ThresholdsAndFixture) {
  Loaded l = load_fixture("repr/god_class.py");
  NodeId cls = find_class(l.views.ast, "InventoryManager");
  Thresholds t;
  MetricVector m = compute_metrics(l.views.ast, l.views.codeLines, cls);
  auto f = detect_god_class(l.views, cls, m, t);
  ASSERT_TRUE(f);
  EXPECT_NEAR(f->structuralScore, std::max({17.0 / 30, 51.0 / 94, m.cbo / 16.0}), 1e-12);

  MetricVector small;
  small.nom = 3;
  small.wmc = 7;
  EXPECT_FALSE(detect_god_class(l.views, cls, small, t));
  MetricVector edge;
  edge.nom = 15;
  edge.wmc = 47;
  edge.loc = 200;
  edge.cbo = 20;
  EXPECT_FALSE(detect_god_class(l.views, cls, edge, t));
  edge.loc = 201;
  EXPECT_TRUE(detect_god_class(l.views, cls, edge, t));
  edge.loc = 500;
  edge.cbo = 8;
  EXPECT_FALSE(detect_god_class(l.views, cls, edge, t));
}

TEST(DataClass, AccessorClasses) {
  Thresholds t;
  Loaded rec = load_fixture("detect/data_record.py");
  NodeId c = find_class(rec.views.ast, "Contact");
  auto m = compute_metrics(rec.views.ast, rec.views.codeLines, c);
  EXPECT_EQ(m.fieldCount, 3);
  auto f = detect_data_class(rec.views, c, m, t);
  ASSERT_TRUE(f);
  EXPECT_DOUBLE_EQ(f->structuralScore, 1.0);

  // Accessor oracle: get_level, set_level, get_unit are accessors,
  // recalibrate is not, so 3 of 4.
  Loaded mixed = load_fixture("detect/mixed_accessors.py");
  NodeId g = find_class(mixed.views.ast, "Gauge");
  auto mm = compute_metrics(mixed.views.ast, mixed.views.codeLines, g);
  EXPECT_DOUBLE_EQ(*mm.accessorRatio, 0.75);
  EXPECT_FALSE(detect_data_class(mixed.views, g, mm, t));

  Loaded heavy = load("t.py", "class H:\n    def run(self, xs):\n        for x in xs:\n            if x:\n                while x:\n                    x = x - 1\n        self.a = 1\n");
  NodeId h = find_class(heavy.views.ast, "H");
  EXPECT_FALSE(detect_data_class(heavy.views, h, compute_metrics(heavy.views.ast, heavy.views.codeLines, h), t));
}

TEST(FeatureEnvy, Rules) {
  Thresholds t;
  Loaded self_only = load("t.py", "class A:\n    def m(self):\n        return self.x + self.y\n");
  EXPECT_FALSE(detect_feature_envy(self_only.views, find_function(self_only.views.ast, "m"), t));

  Loaded envy = load("t.py", "class A:\n    def m(self, other):\n        return other.a + other.b + other.c + other.d + self.e\n");
  auto f = detect_feature_envy(envy.views, find_function(envy.views.ast, "m"), t);
  ASSERT_TRUE(f);
  EXPECT_NEAR(f->structuralScore, 0.8, 1e-12);

  Loaded tie = load("t.py", "class A:\n    def m(self, o):\n        return o.a + o.b + o.c + self.a + self.b + self.c\n");
  EXPECT_FALSE(detect_feature_envy(tie.views, find_function(tie.views.ast, "m"), t));

  Loaded plain = load("t.py", "def m(o):\n    return o.a + o.b + o.c + o.d\n");
  EXPECT_FALSE(detect_feature_envy(plain.views, find_function(plain.views.ast, "m"), t));
}

// ---- clones -------------------------------------------------------------------------

namespace {

// Normalized length by hand: def ID ( ID , ID ) : (8), ID = ID * LIT + ID (7),
// for ID in ID : (5), ID = ID - ID * LIT (7), if ID > LIT : (5), ID = LIT (3),
// return ID (2); 37 in total.
std::string clone_body(const std::string& fn, const std::string& a, const std::string& b) {
  return "def " + fn + "(" + a + ", " + b + "):\n" +
         "    t = " + a + " * 3 + " + b + "\n" +
         "    for k in " + b + ":\n" +
         "        t = t - k * 2\n" +
         "    if t > 9:\n" +
         "        t = 0\n" +
         "    return t\n";
}

std::vector<std::string> independent_normalize(const std::string& text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize_python(text).tokens) {
    if (t.kind == TokenKind::Comment) continue;
    out.push_back(t.kind == TokenKind::Identifier ? "ID"
                  : (t.kind == TokenKind::StringLiteral || t.kind == TokenKind::NumberLiteral) ? "LIT"
                                                                                                 : t.lexeme);
  }
  return out;
}

}  // namespace

TEST(DuplicatedCode, PastedFunctionIsOnePair) {
  std::string one = clone_body("f", "x", "y");
  ASSERT_EQ(independent_normalize(one).size(), 37u);
  Loaded l = load("t.py", one + "\n\n" + one);
  auto found = detect_duplicated_code({&l.views}, Thresholds{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].span.startLine, 1);
  ASSERT_EQ(found[0].evidence.clone->partners.size(), 1u);
  EXPECT_EQ(found[0].evidence.clone->partners[0].span.startLine, 10);
  EXPECT_EQ(found[0].evidence.clone->tokens, 37);
  EXPECT_NEAR(found[0].structuralScore, 37.0 / 120.0, 1e-12);
}

TEST(DuplicatedCode, RenamedIdentifiersStillMatch) {
  std::string a = clone_body("f", "x", "y"), b = clone_body("g", "left", "right");
  // Oracle: the two regions normalize to the same sequence.
  EXPECT_EQ(independent_normalize(a), independent_normalize(b));
  Loaded l = load("t.py", a + "\n\n" + b);
  EXPECT_EQ(detect_duplicated_code({&l.views}, Thresholds{}).size(), 1u);
}

TEST(DuplicatedCode, ShortRepeatIsIgnored) {
  std::string rep = "def f(a):\n    b = a + 1\n    c = b * 2\n    d = c - 1\n    return d\n";
  ASSERT_EQ(independent_normalize(rep).size(), 23u);
  Loaded l = load("t.py", rep + "\n\n" + "x = 5\n\n" + rep);
  EXPECT_TRUE(detect_duplicated_code({&l.views}, Thresholds{}).empty());
}

TEST(DuplicatedCode, AcrossUnits) {
  Loaded a = load("a.py", clone_body("f", "x", "y"));
  Loaded b = load("b.py", "z = 1\n" + clone_body("g", "p", "q"));
  auto found = detect_duplicated_code({&b.views, &a.views}, Thresholds{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].path, "a.py");
  EXPECT_EQ(found[0].evidence.clone->partners[0].path, "b.py");
}

// ---- secrets --------------------------------------------------------------------------

TEST(HardcodedSecret, NameRule) {
  Loaded l = load("t.py", "password = \"hunter2\"\n");
  auto found = detect_hardcoded_secret(l.views, Thresholds{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].evidence.literal->trigger, "name");
  EXPECT_EQ(found[0].evidence.literal->target, "password");
  EXPECT_DOUBLE_EQ(found[0].structuralScore, 1.0);
  EXPECT_EQ(found[0].cwe, 798);
}

TEST(HardcodedSecret, EntropyRule) {
  EXPECT_DOUBLE_EQ(shannon_entropy("aaaa"), 0.0);
  // Independent value computed before the build: 24 distinct symbols, log2(24).
  EXPECT_NEAR(shannon_entropy("Zq8vN3kR7tLm2XbY9wPc4HsJ"), 4.584962500721156, 1e-12);
  Loaded l = load_fixture("detect/entropy_literal.py");
  auto found = detect_hardcoded_secret(l.views, Thresholds{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].span.startLine, 1);
  EXPECT_EQ(found[0].evidence.literal->trigger, "entropy");
  EXPECT_EQ(found[0].evidence.literal->target, "signing_blob");
  EXPECT_NEAR(found[0].structuralScore, 4.584962500721156 / 4.5 > 1 ? 1.0 : 4.584962500721156 / 4.5, 1e-12);
}

TEST(HardcodedSecret, ShortAndFormattedValuesIgnored) {
  Loaded l = load("t.py", "token = \"abc\"\nsecret = f\"{x}abcdefgh\"\napi_key = KEY\n");
  EXPECT_TRUE(detect_hardcoded_secret(l.views, Thresholds{}).empty());
}

TEST(HardcodedSecret, KeywordArgument) {
  Loaded l = load("t.py", "conn = connect(host=\"db\", password=\"s3cr3t!!\")\n");
  auto found = detect_hardcoded_secret(l.views, Thresholds{});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].evidence.literal->target, "password");
}

// ---- taint ------------------------------------------------------------------------------

namespace {

std::vector<TaintPath> taint_of(const Loaded& l, const std::string& fn) {
  const FunctionViews* fv = l.views.function(find_function(l.views.ast, fn));
  return taint_analyze(l.views.ast, fv->pdg, TaintPolicy::defaults());
}

}  // namespace

TEST(Taint, NoSourceNoPath) {
  Loaded l = load("t.py", "def f(conn, k):\n    q = \"SELECT \" + k\n    conn.execute(q)\n");
  EXPECT_TRUE(taint_of(l, "f").empty());
}

TEST(Taint, ConcatChain) {
  Loaded l = load_fixture("repr/tainted_concat.py");
  auto paths = taint_of(l, "lookup");
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_FALSE(paths[0].sanitized);
  EXPECT_EQ(paths[0].cwe, 89);
  EXPECT_EQ(paths[0].stmts.size(), 3u);
  const FunctionViews* fv = l.views.function(find_function(l.views.ast, "lookup"));
  EXPECT_EQ(oracle::keys_of(paths), oracle::taint_paths(l.views.ast, fv->cfg, TaintPolicy::defaults()));
}

TEST(Taint, SanitizerInterposed) {
  Loaded l = load_fixture("detect/sql_sanitized.py");
  auto paths = taint_of(l, "lookup");
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(paths[0].sanitized);
  EXPECT_EQ(paths[0].stmts.size(), 4u);
  const FunctionViews* fv = l.views.function(find_function(l.views.ast, "lookup"));
  EXPECT_EQ(oracle::keys_of(paths), oracle::taint_paths(l.views.ast, fv->cfg, TaintPolicy::defaults()));
  auto found = detect_injection(l.views, fv->fn, paths);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_DOUBLE_EQ(found[0].structuralScore, 0.0);
  EXPECT_TRUE(scan_text(fixture_text("detect/sql_sanitized.py")).empty());
}

TEST(Taint, TwoSinksTwoFindings) {
  Loaded l = load_fixture("detect/two_sinks.py");
  NodeId fn = find_function(l.views.ast, "handle");
  auto paths = taint_of(l, "handle");
  std::set<int> cwes;
  for (const auto& p : paths) cwes.insert(p.cwe);
  EXPECT_EQ(cwes, (std::set<int>{78, 89}));
  auto found = detect_injection(l.views, fn, paths);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_NE(found[0].cwe, found[1].cwe);
  EXPECT_EQ(found[0].rule, Rule::SqlInjection);
  EXPECT_EQ(found[1].rule, Rule::CommandInjection);
}

TEST(Taint, PatternMatching) {
  EXPECT_TRUE(call_matches("execute", "cursor.execute"));
  EXPECT_TRUE(call_matches("request.*", "request.args.get"));
  EXPECT_TRUE(call_matches("get_param*", "get_param"));
  EXPECT_FALSE(call_matches("os.system", "system"));
  EXPECT_FALSE(call_matches("execute", "executemany"));
  TaintPolicy bad = TaintPolicy::defaults();
  bad.sinks.push_back({"eval", 94, 0});
  EXPECT_THROW(bad.validate(), Error);
}

TEST(TaintProperty, SuiteMatchesBruteForce) {
  Loaded l = load_fixture("taint/suite.py");
  ASSERT_GE(l.views.functions.size(), 30u);
  std::size_t nonEmpty = 0;
  for (const FunctionViews& fv : l.views.functions) {
    ASSERT_LE(fv.cfg.body_block_count(), 12u) << l.views.ast[fv.fn].attr("name");
    auto paths = taint_analyze(l.views.ast, fv.pdg, TaintPolicy::defaults());
    EXPECT_EQ(oracle::keys_of(paths), oracle::taint_paths(l.views.ast, fv.cfg, TaintPolicy::defaults()))
        << l.views.ast[fv.fn].attr("name");
    nonEmpty += paths.empty() ? 0 : 1;
  }
  EXPECT_GE(nonEmpty, 15u);
}

// ---- semantic scoring and fusion ---------------------------------------------------

namespace {

nlohmann::json shipped_lexicon() {
  std::ifstream in(std::string(HYBRIDLINT_SOURCE_DIR) + "/data/lexicon.json");
  return nlohmann::json::parse(in);
}

// Table-lookup oracle over the shipped lexicon file.
double table_score(const nlohmann::json& lex, const std::string& rule, const std::map<std::string, int>& hits) {
  double s = 0;
  for (const auto& cue : lex["rules"][rule]) {
    auto it = hits.find(cue["cue"].get<std::string>());
    int n = it == hits.end() ? 0 : it->second;
    s += cue["weight"].get<double>() * std::min(n, cue.value("cap", 1));
  }
  return std::min(1.0, s);
}

}  // namespace

TEST(SemanticScore, SqlCuesUnderBuiltinLexicon) {
  std::string text = "q = \"SELECT name FROM users WHERE id = \" + uid\n";
  auto tokens = tokenize_python(text);
  double got = lexical_score(Lexicon::builtin(), Rule::SqlInjection, tokens.tokens);
  double want = table_score(shipped_lexicon(), "SqlInjection", {{"select", 1}, {"where", 1}, {"+", 1}});
  EXPECT_NEAR(got, want, 1e-12);
  EXPECT_GE(got, 0.7);
}

TEST(SemanticScore, NoCuesIsZero) {
  auto tokens = tokenize_python("x = 1\n");
  EXPECT_DOUBLE_EQ(lexical_score(Lexicon::builtin(), Rule::SqlInjection, tokens.tokens), 0.0);
}

TEST(SemanticScore, WindowIsLinesAroundSpan) {
  auto tokens = tokenize_python("a = 1\nb = 2\nc = 3\nd = 4\ne = 5\nf = 6\n");
  auto w = context_window(tokens, {Span{3, 1, 3, 6}}, 1);
  ASSERT_EQ(w.size(), 9u);
  EXPECT_EQ(w.front().lexeme, "b");
  EXPECT_EQ(w.back().lexeme, "4");
}

TEST(ExternalScorer, PassThrough) {
  ExternalScorer s("python3 " + std::string(HYBRIDLINT_SOURCE_DIR) + "/tests/plugins/fixed_score.py", 2.0);
  ScoreRequest r;
  r.id = "abc";
  r.rule = Rule::Xss;
  EXPECT_DOUBLE_EQ(s.score(r), 0.42);
  r.id = "def";
  EXPECT_DOUBLE_EQ(s.score(r), 0.42);
}

TEST(ExternalScorer, TimeoutAndMalformed) {
  ScoreRequest r;
  r.id = "x";
  ExternalScorer slow("python3 " + std::string(HYBRIDLINT_SOURCE_DIR) + "/tests/plugins/sleeper.py", 0.3);
  EXPECT_THROW(slow.score(r), PluginTimeout);
  ExternalScorer bad("python3 " + std::string(HYBRIDLINT_SOURCE_DIR) + "/tests/plugins/malformed.py", 2.0);
  EXPECT_THROW(bad.score(r), PluginMalformedReply);
  ExternalScorer missing("exit 3", 2.0);
  EXPECT_THROW(missing.score(r), PluginMalformedReply);
}

TEST(ExternalScorer, ScanFallsBackAndRecordsIncident) {
  DetectionConfig cfg;
  cfg.scorer.kind = ScorerKind::External;
  cfg.scorer.command = "python3 " + std::string(HYBRIDLINT_SOURCE_DIR) + "/tests/plugins/malformed.py";
  auto res = scan_unit(SourceUnit("t.py", "password = \"hunter22\"\n"), cfg);
  ASSERT_EQ(res.findings.size(), 1u);
  EXPECT_EQ(res.incidents.size(), 1u);
  DetectionConfig builtin;
  auto ref = scan_unit(SourceUnit("t.py", "password = \"hunter22\"\n"), builtin);
  EXPECT_DOUBLE_EQ(res.findings[0].semanticScore, ref.findings[0].semanticScore);

  cfg.scorer.command = "python3 " + std::string(HYBRIDLINT_SOURCE_DIR) + "/tests/plugins/fixed_score.py";
  res = scan_unit(SourceUnit("t.py", "password = \"hunter22\"\n"), cfg);
  ASSERT_EQ(res.findings.size(), 1u);
  EXPECT_DOUBLE_EQ(res.findings[0].semanticScore, 0.42);
  EXPECT_TRUE(res.incidents.empty());
}

TEST(Fusion, Examples) {
  FusionWeights w;
  EXPECT_NEAR(fuse(1.0, 0.0, w.for_rule(Rule::SqlInjection)), 0.6, 1e-12);
  EXPECT_GE(fuse(1.0, 0.0, w.for_rule(Rule::SqlInjection)), w.tau);
  EXPECT_NEAR(fuse(0.4, 0.4, w.for_rule(Rule::SqlInjection)), 0.4, 1e-12);
  EXPECT_LT(fuse(0.4, 0.4, w.for_rule(Rule::SqlInjection)), w.tau);
  EXPECT_NEAR(fuse(0.55, 0.9, effective_weights(w, Rule::LongMethod, ScorerKind::None)), 0.55, 1e-12);
}

TEST(Fusion, OverridesAndValidation) {
  FusionWeights w;
  w.overrides[Rule::Xss] = {0.3, 0.7};
  EXPECT_EQ(w.for_rule(Rule::Xss), (RuleWeights{0.3, 0.7}));
  EXPECT_EQ(w.for_rule(Rule::GodClass), (RuleWeights{0.6, 0.4}));
  EXPECT_NO_THROW(w.validate());
  w.overrides[Rule::Xss] = {0.3, 0.6};
  EXPECT_THROW(w.validate(), Error);
  FusionWeights t;
  t.tau = 1.0;
  EXPECT_THROW(t.validate(), Error);
}

// ---- scan ---------------------------------------------------------------------------------

TEST(Scan, CleanFileHasNoFindings) {
  auto text = fixture_text("detect/clean.py");
  EXPECT_TRUE(scan_text(text).empty());
}

TEST(Scan, KitchenSinkMatchesLabels) {
  auto labels = nlohmann::json::parse(fixture_text("detect/kitchen_sink.labels.json"));
  auto found = scan_unit(SourceUnit("kitchen_sink.py", fixture_text("detect/kitchen_sink.py")), DetectionConfig{}).findings;
  std::set<std::tuple<std::string, int, int>> want, got;
  for (const auto& l : labels)
    want.emplace(l["category"].get<std::string>(), l["span"]["startLine"].get<int>(), l["span"]["endLine"].get<int>());
  for (const auto& f : found) got.emplace(std::string(to_string(f.rule)), f.span.startLine, f.span.endLine);
  EXPECT_EQ(got, want);
  EXPECT_EQ(found.size(), 7u);
}

TEST(Scan, DeterministicIdsAndOrder) {
  SourceUnit u("kitchen_sink.py", fixture_text("detect/kitchen_sink.py"));
  auto a = scan_unit(u, DetectionConfig{}).findings;
  auto b = scan_unit(u, DetectionConfig{}).findings;
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_TRUE(finding_less(a[i - 1], a[i]));
}

TEST(Scan, ParseErrorBecomesSkippedUnit) {
  std::vector<SourceUnit> units{SourceUnit("bad.py", fixture_text("repr/stray_paren.py")),
                                SourceUnit("ok.py", "password = \"hunter22\"\n")};
  auto res = scan_units(units, DetectionConfig{});
  ASSERT_EQ(res.skipped.size(), 1u);
  EXPECT_EQ(res.skipped[0].path, "bad.py");
  EXPECT_EQ(res.findings.size(), 1u);
}

TEST(Scan, ScoresStayInBounds) {
  auto res = scan_unit(SourceUnit("k.py", fixture_text("detect/kitchen_sink.py")), DetectionConfig{});
  for (const auto& f : res.candidates) {
    EXPECT_GE(f.structuralScore, 0.0);
    EXPECT_LE(f.structuralScore, 1.0);
    EXPECT_GE(f.semanticScore, 0.0);
    EXPECT_LE(f.semanticScore, 1.0);
    EXPECT_GE(f.confidence, 0.0);
    EXPECT_LE(f.confidence, 1.0);
    EXPECT_EQ(f.cwe.has_value(), is_vulnerability(f.rule));
  }
}

TEST(Scan, DisabledRulesDoNotRun) {
  DetectionConfig cfg;
  cfg.enabled = {Rule::HardcodedSecret};
  auto found = scan_unit(SourceUnit("k.py", fixture_text("detect/kitchen_sink.py")), cfg).findings;
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].rule, Rule::HardcodedSecret);
}

TEST(FindingJson, RoundTrip) {
  auto found = scan_unit(SourceUnit("k.py", fixture_text("detect/kitchen_sink.py")), DetectionConfig{}).findings;
  ASSERT_FALSE(found.empty());
  for (const auto& f : found) {
    auto back = finding_from_json(nlohmann::json::parse(to_json(f).dump()));
    EXPECT_EQ(back, f);
  }
  EXPECT_THROW(finding_from_json(nlohmann::json::object()), Error);
}
