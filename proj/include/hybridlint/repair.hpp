#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/detection.hpp"
#include "hybridlint/risk.hpp"

namespace hybridlint {

enum class PatchKind { ExtractMethod, RelocateSecret, ParameterizeQuery, Advisory };

std::string_view to_string(PatchKind kind);

struct Edit {
  Span span;
  std::string replacement;
  bool operator==(const Edit&) const = default;
};

struct Patch {
  std::vector<Edit> edits;
  std::string description;
  PatchKind kind = PatchKind::Advisory;
  /// Follow-up actions for the developer, e.g. environment variables to provision.
  std::vector<std::string> notes;
  bool operator==(const Patch&) const = default;
};

/// FNV-1a over kind, description and edits; the final ranking tie-break.
std::uint64_t patch_hash(const Patch& patch);
/// Characters replaced plus characters inserted, measured against `text`.
std::size_t edit_size(std::string_view text, const Patch& patch);

struct ValidationReport {
  bool parsesOk = false;
  bool targetCleared = false;
  std::vector<Finding> newFindings;
  int deltaCc = 0;
  int deltaCbo = 0;
  int deltaLoc = 0;
  /// Risk-table total of the unit's findings, before minus after.
  double riskReduction = 0;
  /// Exit status of the optional user test command.
  std::optional<int> testExitCode;
  bool accepted = false;
};

struct RepairSuggestion {
  std::string findingId;
  Patch patch;
  int rank = 1;
  std::optional<ValidationReport> validation;
};

class NoExtractableRegion : public Error {
 public:
  explicit NoExtractableRegion(const std::string& why) : Error("no extractable region: " + why) {}
};

class UnsupportedShape : public Error {
 public:
  explicit UnsupportedShape(const std::string& why) : Error("unsupported shape: " + why) {}
};

class OverlappingEdits : public Error {
 public:
  OverlappingEdits(const Span& a, const Span& b) : Error("overlapping edits at " + a.str() + " and " + b.str()) {}
};

class OutOfBounds : public Error {
 public:
  explicit OutOfBounds(const Span& s) : Error("edit out of bounds at " + s.str()) {}
};

/// A contiguous run of statements inside one block of a function.
struct Region {
  NodeId owner = kNoNode;  // node whose block holds the statements
  int block = 0;
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  bool operator==(const Region&) const = default;
};

std::vector<NodeId> region_statements(const Ast& ast, const Region& r);
Span region_span(const Ast& ast, const Region& r);

/// Candidate regions of `fn`: every If/For/While block in the function's own
/// scope, and every maximal run of at least five simple statements. The whole
/// function body is never a candidate.
std::vector<Region> extraction_candidates(const Ast& ast, NodeId fn);

struct Signature {
  std::vector<std::string> params;
  std::vector<std::string> returns;
};

/// Parameters are variables read in the region with a reaching definition
/// outside it; returns are variables defined in the region whose definition
/// reaches a read after it. Throws NoExtractableRegion when control escapes
/// the region or a returned variable could arrive unassigned.
Signature region_signature(const Ast& ast, const FunctionViews& fv, const Region& r);

Patch extract_method(const UnitViews& v, const FunctionViews& fv, const Region& r);
/// First candidate that satisfies the precondition; throws NoExtractableRegion
/// when none does.
Patch extract_method(const UnitViews& v, const FunctionViews& fv);

Patch relocate_secret(const Finding& finding, const UnitViews& v);
/// Upper-case environment key for an assignment target, e.g. apiKey -> API_KEY.
std::string env_key(std::string_view target);

Patch parameterize_query(const Finding& finding, const UnitViews& v, const TaintPolicy& policy = TaintPolicy::defaults());

Patch advisory(const Finding& finding);

std::vector<RepairSuggestion> suggest(const Finding& finding, const UnitViews& v,
                                      const TaintPolicy& policy = TaintPolicy::defaults());

std::string apply_patch(std::string_view text, const Patch& patch);

struct ValidateOptions {
  DetectionConfig config;
  RiskTable risk;
  /// Run through /bin/sh with HYBRIDLINT_PATCHED_FILE naming a temporary copy
  /// of the patched unit. Recorded only; does not affect acceptance.
  std::optional<std::string> testCommand;
};

ValidationReport validate(const SourceUnit& before, const SourceUnit& after, const Finding& finding,
                          const ValidateOptions& options = {});

/// Orders by (accepted desc, risk reduction desc, edit size asc, patch hash
/// asc) and renumbers ranks from 1. Unvalidated suggestions sort as rejected.
std::vector<RepairSuggestion> rank(std::vector<RepairSuggestion> suggestions, std::string_view text);

/// Line-based unified diff with three lines of context; empty when equal.
std::string unified_diff(std::string_view before, std::string_view after, const std::string& path);

/// Writes the patched copy to `dir/<path>` and its diff to `dir/<path>.diff`.
/// An absolute path is re-rooted under `dir`; a path climbing out with ".."
/// throws Error.
void write_refactor_branch(const std::filesystem::path& dir, const std::string& path, std::string_view before,
                           std::string_view after);

}  // namespace hybridlint
