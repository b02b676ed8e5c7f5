#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hybridlint/detection.hpp"
#include "hybridlint/repair.hpp"
#include "hybridlint/risk.hpp"

namespace hybridlint {

// ---- configuration -----------------------------------------------------------

enum class OutputFormat { Text, Json, Sarif };
/// Finding levels in increasing order. Every finding is at least Info.
enum class Level { Info, Warning, Error };

std::string_view to_string(OutputFormat f);
std::string_view to_string(Level l);
OutputFormat parse_output_format(std::string_view name);
Level parse_level(std::string_view name);

/// Error when confidence >= 0.8, Warning otherwise.
Level level_of(const Finding& f);

struct ToolConfig {
  DetectionConfig detection;
  RiskTable risk;
  OutputFormat format = OutputFormat::Text;
  Level failOn = Level::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : Error("config " + (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Keys absent from `j` keep the values already in `base`. Unknown keys and
/// ill-typed values throw ConfigError naming the JSON pointer.
ToolConfig config_from_json(const nlohmann::json& j, ToolConfig base = {});
ToolConfig load_config(const std::filesystem::path& path, ToolConfig base = {});
nlohmann::ordered_json to_json(const ToolConfig& config);

/// Explicit path first, then $HYBRIDLINT_CONFIG; defaults when neither is set.
ToolConfig resolve_config(const std::optional<std::filesystem::path>& explicitPath);

// ---- SARIF -------------------------------------------------------------------

struct ToolMeta {
  std::string name = "hybridlint";
  std::string version = "0.1.0";
  std::string informationUri = "https://example.invalid/hybridlint";
};

nlohmann::ordered_json emit_sarif(const std::vector<Finding>& findings, const ToolMeta& meta = {});

// ---- pull-request comment ----------------------------------------------------

struct PrItem {
  Finding finding;
  std::string explanation;          // markdown
  std::optional<std::string> diff;  // unified diff of the top-ranked suggestion
};

std::string render_pr_comment(const std::vector<PrItem>& items, std::size_t cap = 50);

// ---- changed-files mode ------------------------------------------------------

class DiffParseError : public Error {
 public:
  DiffParseError(int line, const std::string& what) : Error("diff line " + std::to_string(line) + ": " + what) {}
};

struct ChangedFile {
  std::string path;
  std::vector<std::pair<int, int>> hunks;  // new-side line ranges, inclusive
};

/// Files named by "+++" headers with their new-side hunk ranges. Deleted files
/// are dropped. A pure deletion hunk marks the line it follows.
std::vector<ChangedFile> parse_unified_diff(std::string_view text);

/// Targets named in the diff, in their original order. A target matches when
/// it equals the diff path or ends with "/" + diff path.
std::vector<std::string> filter_changed(const std::vector<std::string>& targets, std::string_view diffText);
/// Sets Finding::inDiff where the span intersects a hunk of its file.
void tag_in_diff(std::vector<Finding>& findings, const std::vector<ChangedFile>& changed);

// ---- feedback ----------------------------------------------------------------

enum class Verdict { Accepted, Rejected };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view name);

struct FeedbackRecord {
  std::string timestamp;  // ISO 8601 UTC
  std::string findingId;
  Rule rule = Rule::LongMethod;
  Verdict verdict = Verdict::Accepted;
  bool operator==(const FeedbackRecord&) const = default;
};

class UnknownFinding : public Error {
 public:
  explicit UnknownFinding(const std::string& id) : Error("unknown finding id " + id) {}
};

nlohmann::ordered_json to_json(const FeedbackRecord& r);
FeedbackRecord feedback_from_json(const nlohmann::json& j);
std::string utc_timestamp();

/// In-memory view of a feedback log.
struct FeedbackState {
  std::vector<FeedbackRecord> records;
  std::map<Rule, std::pair<int, int>> tally;  // accepted, rejected
  void apply(const FeedbackRecord& r);
  bool operator==(const FeedbackState&) const = default;
};

/// Appends one line to the log at `path` after checking the id against
/// `known`. Earlier lines are never rewritten.
void record_feedback(const std::filesystem::path& path, const FeedbackRecord& record,
                     const std::set<std::string>& known);
/// Reads the log back; a missing file is an empty state.
FeedbackState replay_feedback(const std::filesystem::path& path);

inline constexpr std::size_t kFeedbackWindow = 50;
inline constexpr std::size_t kFeedbackMinRecords = 5;

/// Per rule, over that rule's trailing 50 records: wSem' = clamp(wSem + 0.1 *
/// (acceptRate - 0.5), 0.1, 0.9) and wStruct' = 1 - wSem'. Rules with fewer
/// than five records keep their weights.
FusionWeights update_weights(const std::vector<FeedbackRecord>& log, const FusionWeights& weights);

}  // namespace hybridlint
