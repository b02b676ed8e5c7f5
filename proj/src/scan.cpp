#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <thread>

#include "hybridlint/detection.hpp"

namespace hybridlint {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void structural_candidates(const UnitViews& v, const DetectionConfig& cfg, std::vector<Finding>& out) {
  auto on = [&](Rule r) { return cfg.enabled.count(r) != 0; };
  const Thresholds& t = cfg.thresholds;
  for (NodeId fn : v.ast.functions()) {
    MetricVector m = compute_metrics(v.ast, v.codeLines, fn);
    if (on(Rule::LongMethod))
      if (auto f = detect_long_method(v, fn, m, t)) out.push_back(std::move(*f));
    if (on(Rule::FeatureEnvy))
      if (auto f = detect_feature_envy(v, fn, t)) out.push_back(std::move(*f));
  }
  for (NodeId cls : v.ast.classes()) {
    MetricVector m = compute_metrics(v.ast, v.codeLines, cls);
    if (on(Rule::GodClass))
      if (auto f = detect_god_class(v, cls, m, t)) out.push_back(std::move(*f));
    if (on(Rule::DataClass))
      if (auto f = detect_data_class(v, cls, m, t)) out.push_back(std::move(*f));
  }
  if (on(Rule::SqlInjection) || on(Rule::CommandInjection) || on(Rule::Xss)) {
    for (const FunctionViews& fv : v.functions) {
      auto paths = taint_analyze(v.ast, fv.pdg, cfg.policy);
      for (Finding& f : detect_injection(v, fv.fn, paths))
        if (on(f.rule)) out.push_back(std::move(f));
    }
  }
  if (on(Rule::HardcodedSecret))
    for (Finding& f : detect_hardcoded_secret(v, t)) out.push_back(std::move(f));
}

}  // namespace

std::vector<Finding> refuse(const std::vector<Finding>& candidates, const FusionWeights& weights, ScorerKind scorer) {
  std::vector<Finding> out;
  for (Finding f : candidates) {
    f.confidence = fuse(f.structuralScore, f.semanticScore, effective_weights(weights, f.rule, scorer));
    if (f.confidence >= weights.tau) out.push_back(std::move(f));
  }
  sort_findings(out);
  return out;
}

ScanResult scan_units(const std::vector<SourceUnit>& units, const DetectionConfig& config) {
  config.weights.validate();
  config.policy.validate();
  auto scanStart = Clock::now();
  ScanResult result;

  std::vector<std::size_t> order(units.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return units[a].path() < units[b].path(); });

  // Per-unit analysis runs on worker threads; each unit owns one slot, and
  // slots are merged in path order so the result does not depend on timing.
  struct Slot {
    std::optional<UnitViews> views;
    std::vector<Finding> candidates;
    std::optional<SkippedUnit> skipped;
    double ms = 0;
  };
  std::vector<Slot> slots(order.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++) {
      const SourceUnit& unit = units[order[k]];
      Slot& slot = slots[k];
      auto t0 = Clock::now();
      try {
        slot.views.emplace(build_views(unit));
      } catch (const SourceError& e) {
        slot.skipped = SkippedUnit{unit.path(), e.what(), e.span()};
        continue;
      } catch (const Error& e) {
        slot.skipped = SkippedUnit{unit.path(), e.what(), Span{}};
        continue;
      }
      structural_candidates(*slot.views, config, slot.candidates);
      slot.ms = ms_since(t0);
    }
  };
  std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), order.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<UnitViews> views;
  views.reserve(units.size());
  std::vector<Finding> candidates;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Slot& slot = slots[k];
    if (slot.skipped) {
      result.skipped.push_back(std::move(*slot.skipped));
      continue;
    }
    const SourceUnit& unit = units[order[k]];
    views.push_back(std::move(*slot.views));
    for (Finding& f : slot.candidates) candidates.push_back(std::move(f));
    result.unitMs[unit.path()] = slot.ms;
    result.totalLoc += unit.loc();
  }
  if (config.enabled.count(Rule::DuplicatedCode)) {
    std::vector<const UnitViews*> ptrs;
    for (const auto& v : views) ptrs.push_back(&v);
    for (Finding& f : detect_duplicated_code(ptrs, config.thresholds)) candidates.push_back(std::move(f));
  }
  sort_findings(candidates);

  std::map<std::string, const UnitViews*> byPath;
  for (const auto& v : views) byPath[v.unit->path()] = &v;

  std::unique_ptr<SemanticScorer> external;
  bool externalAlive = config.scorer.kind == ScorerKind::External;
  if (externalAlive) external = std::make_unique<ExternalScorer>(config.scorer.command, config.scorer.timeoutSec);
  LexicalScorer builtin;

  for (Finding& f : candidates) {
    if (config.scorer.kind == ScorerKind::None) {
      f.semanticScore = 0;
    } else {
      ScoreRequest req;
      req.id = f.id;
      req.rule = f.rule;
      std::map<std::string, std::vector<Span>> spans{{f.path, {f.span}}};
      req.spans.push_back(f.span);
      if (f.evidence.clone)
        for (const auto& p : f.evidence.clone->partners) {
          spans[p.path].push_back(p.span);
          req.spans.push_back(p.span);
        }
      for (const auto& [path, ss] : spans) {
        auto w = context_window(byPath.at(path)->tokens, ss, config.scorer.windowLines);
        req.window.insert(req.window.end(), w.begin(), w.end());
      }
      bool scored = false;
      if (externalAlive) {
        try {
          f.semanticScore = external->score(req);
          scored = true;
        } catch (const PluginTimeout& e) {
          result.incidents.push_back(std::string(e.what()) + " for " + f.id + "; built-in scorer used from here on");
          externalAlive = false;
        } catch (const PluginMalformedReply& e) {
          result.incidents.push_back(std::string(e.what()) + " for " + f.id + "; built-in scorer used");
        }
      }
      if (!scored) f.semanticScore = builtin.score(req);
    }
    f.confidence = fuse(f.structuralScore, f.semanticScore, effective_weights(config.weights, f.rule, config.scorer.kind));
  }

  result.candidates = candidates;
  for (const Finding& f : candidates)
    if (f.confidence >= config.weights.tau) result.findings.push_back(f);
  result.totalMs = ms_since(scanStart);
  return result;
}

ScanResult scan_unit(const SourceUnit& unit, const DetectionConfig& config) { return scan_units({unit}, config); }

}  // namespace hybridlint
