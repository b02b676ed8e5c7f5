#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hybridlint/delivery.hpp"
#include "hybridlint/evaluation.hpp"
#include "hybridlint/explanation.hpp"
#include "hybridlint/repair.hpp"

namespace hybridlint {

namespace fs = std::filesystem;
using OJson = nlohmann::ordered_json;

namespace {

// Exit codes.
constexpr int kClean = 0;
constexpr int kFindings = 1;
constexpr int kFailure = 2;

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// ---- state -------------------------------------------------------------------

struct State {
  fs::path dir;
  fs::path findings() const { return dir / "findings.json"; }
  fs::path feedback() const { return dir / "feedback.jsonl"; }
};

void write_findings(const State& s, const std::vector<Finding>& findings) {
  fs::create_directories(s.dir);
  OJson arr = OJson::array();
  for (const auto& f : findings) arr.push_back(to_json(f));
  std::ofstream out(s.findings());
  if (!out) throw Error("cannot write " + s.findings().string());
  out << OJson{{"findings", arr}}.dump(2) << "\n";
}

std::vector<Finding> read_findings(const State& s) {
  std::ifstream in(s.findings());
  if (!in) throw Error("no scan results in " + s.dir.string() + "; run 'hybridlint scan' first");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(s.findings().string() + ": " + e.what());
  }
  std::vector<Finding> out;
  for (const auto& f : j.at("findings")) out.push_back(finding_from_json(f));
  return out;
}

const Finding& find_by_id(const std::vector<Finding>& fs, const std::string& id) {
  for (const auto& f : fs)
    if (f.id == id) return f;
  throw UnknownFinding(id);
}

std::set<std::string> ids_of(const std::vector<Finding>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f.id);
  return out;
}

/// Config file (or $HYBRIDLINT_CONFIG) with recorded feedback folded into the
/// fusion weights.
ToolConfig effective_config(const std::optional<std::string>& path, const State& s) {
  ToolConfig c = resolve_config(path ? std::optional<fs::path>(*path) : std::nullopt);
  auto fb = replay_feedback(s.feedback());
  if (!fb.records.empty()) c.detection.weights = update_weights(fb.records, c.detection.weights);
  return c;
}

// ---- scan --------------------------------------------------------------------

std::vector<std::string> expand_targets(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    fs::path path(p);
    if (fs::is_directory(path)) {
      std::vector<std::string> found;
      for (const auto& e : fs::recursive_directory_iterator(path))
        if (e.is_regular_file() && e.path().extension() == ".py") found.push_back(e.path().generic_string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(path)) {
      out.push_back(path.generic_string());
    } else {
      throw Error("no such file or directory: " + p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string text_report(const ScanResult& r, const std::vector<Finding>& findings) {
  std::ostringstream out;
  for (const auto& f : findings) {
    out << f.path << ":" << f.span.startLine << ":" << f.span.startCol << ": " << to_string(level_of(f)) << " "
        << to_string(f.rule);
    if (f.cwe) out << " [CWE-" << *f.cwe << "]";
    if (!f.entity.name.empty()) out << " in " << f.entity.name;
    out << " (confidence " << fmt2(f.confidence) << (f.inDiff ? ", in diff" : "") << ") " << f.id << "\n";
  }
  out << findings.size() << (findings.size() == 1 ? " finding" : " findings") << " in " << r.unitMs.size()
      << (r.unitMs.size() == 1 ? " file" : " files");
  if (r.totalLoc > 0) out << ", " << fmt2(r.totalMs * 1000.0 / r.totalLoc) << " ms/KLOC";
  out << "\n";
  return out.str();
}

// Timings are left out so the document is byte-identical across runs.
OJson json_report(const ScanResult& r, const std::vector<Finding>& findings) {
  OJson fs = OJson::array();
  for (const auto& f : findings) fs.push_back(to_json(f));
  OJson skipped = OJson::array();
  for (const auto& s : r.skipped) skipped.push_back({{"path", s.path}, {"message", s.message}, {"span", span_to_json(s.span)}});
  return {{"findings", fs}, {"skipped", skipped}, {"incidents", r.incidents}, {"files", r.unitMs.size()},
          {"loc", r.totalLoc}};
}

struct ScanOptions {
  std::vector<std::string> paths;
  std::optional<std::string> config, format, changedFrom, failOn, output;
};

int cmd_scan(const ScanOptions& o, const State& state, std::ostream& out, std::ostream& err) {
  ToolConfig cfg = effective_config(o.config, state);
  if (o.format) cfg.format = parse_output_format(*o.format);
  if (o.failOn) cfg.failOn = parse_level(*o.failOn);

  auto targets = expand_targets(o.paths);
  std::vector<ChangedFile> changed;
  if (o.changedFrom) {
    std::string diff = read_file(*o.changedFrom);
    changed = parse_unified_diff(diff);
    targets = filter_changed(targets, diff);
  }

  std::vector<SourceUnit> units;
  for (const auto& t : targets) units.emplace_back(t, read_file(t));
  ScanResult r = scan_units(units, cfg.detection);
  std::vector<Finding> findings = r.findings;
  if (o.changedFrom) tag_in_diff(findings, changed);

  // Single writer phase: analysis is complete before anything is written.
  for (const auto& s : r.skipped) err << "hybridlint: skipped " << s.path << ": " << s.message << "\n";
  for (const auto& i : r.incidents) err << "hybridlint: " << i << "\n";
  std::string report;
  switch (cfg.format) {
    case OutputFormat::Text: report = text_report(r, findings); break;
    case OutputFormat::Json: report = json_report(r, findings).dump(2) + "\n"; break;
    case OutputFormat::Sarif: report = emit_sarif(findings).dump(2) + "\n"; break;
  }
  if (o.output) {
    std::ofstream f(*o.output);
    if (!f) throw Error("cannot write " + *o.output);
    f << report;
  } else {
    out << report;
  }
  write_findings(state, findings);

  bool fail = std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return level_of(f) >= cfg.failOn; });
  return fail ? kFindings : kClean;
}

// ---- explain -----------------------------------------------------------------

int cmd_explain(const std::string& id, const std::string& format, const State& state, std::ostream& out) {
  auto findings = read_findings(state);
  const Finding& f = find_by_id(findings, id);
  out << render_explanation(f, attribute(f), parse_explain_format(format));
  return kClean;
}

// ---- fix ---------------------------------------------------------------------

struct FixOptions {
  std::vector<std::string> ids;
  bool interactive = false;
  bool applyBest = false;
  std::optional<std::string> branchDir, testCommand, config;
};

struct Candidate {
  RepairSuggestion suggestion;
  std::string after;
};

/// The finding in `current` that corresponds to `original`: same rule and
/// entity, nearest start line. Absent when the issue is already gone.
std::optional<Finding> relocate(const Finding& original, const std::vector<Finding>& current) {
  std::optional<Finding> best;
  for (const auto& f : current) {
    if (f.rule != original.rule || f.entity.name != original.entity.name) continue;
    if (!best || std::abs(f.span.startLine - original.span.startLine) < std::abs(best->span.startLine - original.span.startLine))
      best = f;
  }
  return best;
}

std::vector<Candidate> candidates_for(const Finding& f, const SourceUnit& unit, const ToolConfig& cfg,
                                      const ValidateOptions& vo) {
  UnitViews v = build_views(unit);
  std::vector<RepairSuggestion> sugg = suggest(f, v, cfg.detection.policy);
  std::map<std::uint64_t, std::string> afterByHash;
  for (auto& s : sugg) {
    if (s.patch.kind == PatchKind::Advisory) continue;
    std::string after = apply_patch(unit.text(), s.patch);
    s.validation = validate(unit, SourceUnit(unit.path(), after, unit.language()), f, vo);
    afterByHash[patch_hash(s.patch)] = after;
  }
  std::vector<Candidate> out;
  for (auto& s : rank(std::move(sugg), unit.text())) {
    auto it = afterByHash.find(patch_hash(s.patch));
    out.push_back({s, it == afterByHash.end() ? std::string(unit.text()) : it->second});
  }
  return out;
}

void describe(const Candidate& c, std::ostream& out, const std::string& path, std::string_view before) {
  const auto& s = c.suggestion;
  out << "  [" << s.rank << "] " << to_string(s.patch.kind) << ": " << s.patch.description << "\n";
  for (const auto& n : s.patch.notes) out << "      note: " << n << "\n";
  if (s.validation) {
    const auto& v = *s.validation;
    out << "      " << (v.accepted ? "accepted" : "rejected") << " (parses " << (v.parsesOk ? "yes" : "no")
        << ", target cleared " << (v.targetCleared ? "yes" : "no") << ", new findings " << v.newFindings.size()
        << ", dCC " << v.deltaCc << ", dCBO " << v.deltaCbo << ", dLOC " << v.deltaLoc << ", risk -"
        << fmt2(v.riskReduction);
    if (v.testExitCode) out << ", tests exit " << *v.testExitCode;
    out << ")\n";
    out << unified_diff(before, c.after, path);
  }
}

int cmd_fix(const FixOptions& o, const State& state, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.interactive && o.applyBest) throw Error("--interactive and --apply-best are mutually exclusive");
  ToolConfig cfg = effective_config(o.config, state);
  ValidateOptions vo{cfg.detection, cfg.risk, o.testCommand};
  auto stored = read_findings(state);
  std::vector<Finding> targets;
  if (o.ids.empty()) targets = stored;
  else
    for (const auto& id : o.ids) targets.push_back(find_by_id(stored, id));
  auto known = ids_of(stored);

  std::map<std::string, std::vector<Finding>> byPath;
  for (const auto& f : targets) byPath[f.path].push_back(f);

  bool modifying = o.interactive || o.applyBest;
  bool quit = false;
  std::vector<FeedbackRecord> feedback;
  std::map<std::string, std::pair<std::string, std::string>> results;  // path -> before, after
  for (const auto& [path, fs] : byPath) {
    if (quit) break;
    const std::string original = read_file(path);
    std::string current = original;
    for (const Finding& target : fs) {
      if (quit) break;
      SourceUnit unit(path, current);
      std::optional<Finding> f = target;
      if (current != original) f = relocate(target, scan_unit(unit, cfg.detection).findings);
      out << path << ":" << target.span.startLine << ": " << to_string(target.rule) << " " << target.id << "\n";
      if (!f) {
        out << "  already resolved by an earlier repair\n";
        continue;
      }
      std::vector<Candidate> cands;
      try {
        cands = candidates_for(*f, unit, cfg, vo);
      } catch (const Error& e) {
        err << "hybridlint: " << path << ": " << e.what() << "\n";
        continue;
      }
      if (!modifying) {
        for (const auto& c : cands) describe(c, out, path, current);
        continue;
      }
      if (o.applyBest) {
        if (!cands.empty() && cands.front().suggestion.validation && cands.front().suggestion.validation->accepted) {
          describe(cands.front(), out, path, current);
          current = cands.front().after;
        } else {
          out << "  no accepted repair\n";
        }
        continue;
      }
      for (const auto& c : cands) {
        describe(c, out, path, current);
        if (c.suggestion.patch.kind == PatchKind::Advisory) continue;
        out << "  apply? [y]es / [n]o / [s]kip finding / [q]uit: " << std::flush;
        std::string answer;
        if (!std::getline(in, answer)) answer = "q";
        char a = answer.empty() ? 'n' : static_cast<char>(std::tolower(static_cast<unsigned char>(answer[0])));
        if (a == 'y') {
          current = c.after;
          feedback.push_back({utc_timestamp(), target.id, target.rule, Verdict::Accepted});
          break;
        }
        if (a == 'q') {
          quit = true;
          break;
        }
        if (a == 's') break;
        feedback.push_back({utc_timestamp(), target.id, target.rule, Verdict::Rejected});
      }
    }
    if (current != original) results[path] = {original, current};
  }

  // Writes happen once every decision is made.
  for (const auto& r : feedback) record_feedback(state.feedback(), r, known);
  for (const auto& [path, ba] : results) {
    if (o.branchDir) {
      write_refactor_branch(*o.branchDir, path, ba.first, ba.second);
      out << "wrote " << (fs::path(*o.branchDir) / path).generic_string() << "\n";
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot write " + path);
      f << ba.second;
      out << "patched " << path << "\n";
    }
  }
  return kClean;
}

// ---- eval --------------------------------------------------------------------

int cmd_eval(const std::string& manifest, std::uint64_t seed, const std::string& format,
             const std::optional<std::string>& config, std::ostream& out, std::ostream& err) {
  ToolConfig cfg = resolve_config(config ? std::optional<fs::path>(*config) : std::nullopt);
  Corpus corpus = load_corpus(manifest);
  for (const auto& w : corpus.warnings) err << "hybridlint: " << w << "\n";
  EvalRun run = evaluate(corpus, cfg.detection);
  const auto& w = cfg.detection.weights;
  MetricsReport structural = rescore(corpus, run, {1.0, 0.0, w.tau, {}}, ScorerKind::Builtin);
  MetricsReport semantic = rescore(corpus, run, {0.0, 1.0, w.tau, {}}, ScorerKind::Builtin);
  Split split = stratified_split(corpus, seed);

  if (format == "json") {
    out << OJson{{"report", to_json(run.report)},
                 {"ablation", {{"structural", to_json(structural)}, {"semantic", to_json(semantic)}}},
                 {"split", to_json(split, corpus)},
                 {"seed", seed}}
               .dump(2)
        << "\n";
    return kClean;
  }
  if (format != "text") throw Error("eval --format must be text or json");
  out << "corpus: " << corpus.units.size() << " units, " << corpus.label_count() << " labels\n\n";
  out << render_table(run.report) << "\n";
  auto f1 = [](const MetricsReport& r) { return r.pooled.f1 ? fmt2(*r.pooled.f1) : std::string("-"); };
  out << "ablation (pooled F1): fused " << f1(run.report) << ", structural only " << f1(structural)
      << ", semantic only " << f1(semantic) << "\n";
  out << "split (seed " << seed << "): train " << split.train.size() << ", validation " << split.validation.size()
      << ", test " << split.test.size() << "\n";
  return kClean;
}

// ---- feedback ----------------------------------------------------------------

int cmd_feedback(const std::string& id, const std::string& verdict, const State& state, std::ostream& out) {
  auto stored = read_findings(state);
  Verdict v = parse_verdict(verdict);
  auto it = std::find_if(stored.begin(), stored.end(), [&](const Finding& f) { return f.id == id; });
  Rule rule = it == stored.end() ? Rule::LongMethod : it->rule;
  record_feedback(state.feedback(), {utc_timestamp(), id, rule, v}, ids_of(stored));
  auto fb = replay_feedback(state.feedback());
  RuleWeights w = update_weights(fb.records, FusionWeights{}).for_rule(rule);
  auto [acc, rej] = fb.tally[rule];
  out << "recorded " << verdict << " for " << id << " (" << to_string(rule) << ": " << acc << " accepted, " << rej
      << " rejected; weights now wStruct " << fmt2(w.wStruct) << ", wSem " << fmt2(w.wSem) << ")\n";
  return kClean;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid structural and semantic linter for code smells and vulnerabilities", "hybridlint"};
  app.require_subcommand(1);
  std::string stateDir = ".hybridlint";
  app.add_option("--state-dir", stateDir, "Where scan results and the feedback log are kept")->capture_default_str();

  ScanOptions scan;
  auto* scanCmd = app.add_subcommand("scan", "Scan files or directories");
  scanCmd->add_option("paths", scan.paths, "Files or directories")->required();
  scanCmd->add_option("--config", scan.config, "JSON config file (default: $HYBRIDLINT_CONFIG)");
  scanCmd->add_option("--format", scan.format, "text, json or sarif");
  scanCmd->add_option("--changed-from", scan.changedFrom, "Unified diff; only files it names are scanned");
  scanCmd->add_option("--fail-on", scan.failOn, "info, warning or error");
  scanCmd->add_option("-o,--output", scan.output, "Write the report to a file");

  std::string explainId, explainFormat = "text";
  auto* explainCmd = app.add_subcommand("explain", "Explain a finding from the last scan");
  explainCmd->add_option("finding-id", explainId)->required();
  explainCmd->add_option("--format", explainFormat, "text, markdown or json")->capture_default_str();

  FixOptions fix;
  auto* fixCmd = app.add_subcommand("fix", "Suggest, validate and apply repairs");
  fixCmd->add_option("finding-ids", fix.ids, "Findings to repair (default: all from the last scan)");
  fixCmd->add_flag("--interactive", fix.interactive, "Prompt to accept or reject each suggestion");
  fixCmd->add_flag("--apply-best", fix.applyBest, "Apply the top-ranked accepted repair per finding");
  fixCmd->add_option("--branch-dir", fix.branchDir, "Write patched copies and diffs here instead of in place");
  fixCmd->add_option("--test-command", fix.testCommand, "Shell command run against each patched file");
  fixCmd->add_option("--config", fix.config, "JSON config file");

  std::string manifest, evalFormat = "text";
  std::uint64_t seed = 42;
  std::optional<std::string> evalConfig;
  auto* evalCmd = app.add_subcommand("eval", "Evaluate against a labeled corpus");
  evalCmd->add_option("--corpus", manifest, "Corpus manifest")->required();
  evalCmd->add_option("--seed", seed, "Split seed")->capture_default_str();
  evalCmd->add_option("--format", evalFormat, "text or json")->capture_default_str();
  evalCmd->add_option("--config", evalConfig, "JSON config file");

  std::string fbId, fbVerdict;
  auto* fbCmd = app.add_subcommand("feedback", "Record a verdict on a finding");
  fbCmd->add_option("finding-id", fbId)->required();
  fbCmd->add_option("verdict", fbVerdict, "accepted or rejected")->required();

  std::vector<const char*> argv{"hybridlint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kClean;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kClean;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFailure;
  }

  State state{stateDir};
  try {
    if (scanCmd->parsed()) return cmd_scan(scan, state, out, err);
    if (explainCmd->parsed()) return cmd_explain(explainId, explainFormat, state, out);
    if (fixCmd->parsed()) return cmd_fix(fix, state, in, out, err);
    if (evalCmd->parsed()) return cmd_eval(manifest, seed, evalFormat, evalConfig, out, err);
    if (fbCmd->parsed()) return cmd_feedback(fbId, fbVerdict, state, out);
  } catch (const std::exception& e) {
    err << "hybridlint: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace hybridlint
