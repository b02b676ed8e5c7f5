#include "hybridlint/delivery.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace hybridlint {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

// ---- enums -------------------------------------------------------------------

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Sarif: return "sarif";
  }
  return "?";
}

std::string_view to_string(Level l) {
  switch (l) {
    case Level::Info: return "info";
    case Level::Warning: return "warning";
    case Level::Error: return "error";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view name) {
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Sarif})
    if (to_string(f) == name) return f;
  throw Error("unknown output format '" + std::string(name) + "' (text, json, sarif)");
}

Level parse_level(std::string_view name) {
  for (auto l : {Level::Info, Level::Warning, Level::Error})
    if (to_string(l) == name) return l;
  throw Error("unknown level '" + std::string(name) + "' (info, warning, error)");
}

Level level_of(const Finding& f) { return f.confidence >= 0.8 ? Level::Error : Level::Warning; }

// ---- configuration -----------------------------------------------------------

namespace {

struct IntField {
  const char* name;
  int Thresholds::*field;
};
struct DoubleField {
  const char* name;
  double Thresholds::*field;
};

const IntField kIntThresholds[] = {
    {"longMethodNos", &Thresholds::longMethodNos},
    {"longMethodCc", &Thresholds::longMethodCc},
    {"godClassNom", &Thresholds::godClassNom},
    {"godClassWmc", &Thresholds::godClassWmc},
    {"godClassLoc", &Thresholds::godClassLoc},
    {"godClassCbo", &Thresholds::godClassCbo},
    {"dataClassFields", &Thresholds::dataClassFields},
    {"featureEnvyForeign", &Thresholds::featureEnvyForeign},
    {"cloneTokens", &Thresholds::cloneTokens},
    {"secretNameMinLength", &Thresholds::secretNameMinLength},
    {"secretEntropyMinLength", &Thresholds::secretEntropyMinLength},
};
const DoubleField kDoubleThresholds[] = {
    {"dataClassAccessorRatio", &Thresholds::dataClassAccessorRatio},
    {"secretEntropy", &Thresholds::secretEntropy},
};

void only_keys(const Json& obj, const std::vector<std::string>& keys, const std::string& at) {
  if (!obj.is_object()) throw ConfigError(at, "expected an object");
  for (const auto& [k, _] : obj.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ConfigError(at + "/" + k, "unknown key");
}

double number_at(const Json& v, const std::string& at) {
  if (!v.is_number()) throw ConfigError(at, "expected a number");
  return v.get<double>();
}

int int_at(const Json& v, const std::string& at) {
  if (!v.is_number_integer()) throw ConfigError(at, "expected an integer");
  return v.get<int>();
}

std::string string_at(const Json& v, const std::string& at) {
  if (!v.is_string()) throw ConfigError(at, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_at(const Json& v, const std::string& at) {
  if (!v.is_array()) throw ConfigError(at, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string_at(v[i], at + "/" + std::to_string(i)));
  return out;
}

Rule rule_at(const std::string& name, const std::string& at) {
  auto r = parse_rule(name);
  if (!r) throw ConfigError(at, "unknown rule '" + name + "'");
  return *r;
}

template <typename F>
void wrap(const std::string& at, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(at, e.what());
  }
}

void read_thresholds(const Json& j, Thresholds& t) {
  std::vector<std::string> keys;
  for (const auto& f : kIntThresholds) keys.push_back(f.name);
  for (const auto& f : kDoubleThresholds) keys.push_back(f.name);
  only_keys(j, keys, "/thresholds");
  for (const auto& f : kIntThresholds)
    if (j.contains(f.name)) {
      std::string at = std::string("/thresholds/") + f.name;
      int v = int_at(j[f.name], at);
      if (v < 0) throw ConfigError(at, "must be >= 0");
      t.*f.field = v;
    }
  for (const auto& f : kDoubleThresholds)
    if (j.contains(f.name)) {
      std::string at = std::string("/thresholds/") + f.name;
      double v = number_at(j[f.name], at);
      if (v < 0) throw ConfigError(at, "must be >= 0");
      t.*f.field = v;
    }
}

void read_weights(const Json& j, FusionWeights& w) {
  only_keys(j, {"wStruct", "wSem", "tau", "overrides"}, "/weights");
  if (j.contains("wStruct")) w.wStruct = number_at(j["wStruct"], "/weights/wStruct");
  if (j.contains("wSem")) w.wSem = number_at(j["wSem"], "/weights/wSem");
  // Giving one side alone keeps the pair summing to 1.
  if (j.contains("wStruct") && !j.contains("wSem")) w.wSem = 1 - w.wStruct;
  if (j.contains("wSem") && !j.contains("wStruct")) w.wStruct = 1 - w.wSem;
  if (j.contains("tau")) w.tau = number_at(j["tau"], "/weights/tau");
  if (j.contains("overrides")) {
    const Json& o = j["overrides"];
    if (!o.is_object()) throw ConfigError("/weights/overrides", "expected an object");
    for (const auto& [name, pair] : o.items()) {
      std::string at = "/weights/overrides/" + name;
      Rule r = rule_at(name, at);
      only_keys(pair, {"wStruct", "wSem"}, at);
      if (!pair.contains("wStruct") && !pair.contains("wSem")) throw ConfigError(at, "needs wStruct or wSem");
      RuleWeights rw;
      if (pair.contains("wStruct")) rw.wStruct = number_at(pair["wStruct"], at + "/wStruct");
      if (pair.contains("wSem")) rw.wSem = number_at(pair["wSem"], at + "/wSem");
      if (!pair.contains("wSem")) rw.wSem = 1 - rw.wStruct;
      if (!pair.contains("wStruct")) rw.wStruct = 1 - rw.wSem;
      w.overrides[r] = rw;
    }
  }
  wrap("/weights", [&] { w.validate(); });
}

void read_policy(const Json& j, TaintPolicy& p) {
  only_keys(j, {"sourceCalls", "sourceParams", "sinks", "sanitizers"}, "/policy");
  if (j.contains("sourceCalls")) p.sourceCalls = strings_at(j["sourceCalls"], "/policy/sourceCalls");
  if (j.contains("sourceParams")) p.sourceParams = strings_at(j["sourceParams"], "/policy/sourceParams");
  if (j.contains("sanitizers")) p.sanitizers = strings_at(j["sanitizers"], "/policy/sanitizers");
  if (j.contains("sinks")) {
    const Json& s = j["sinks"];
    if (!s.is_array()) throw ConfigError("/policy/sinks", "expected an array");
    p.sinks.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::string at = "/policy/sinks/" + std::to_string(i);
      only_keys(s[i], {"pattern", "cwe", "arg"}, at);
      if (!s[i].contains("pattern") || !s[i].contains("cwe")) throw ConfigError(at, "sink needs pattern and cwe");
      SinkPattern sp;
      sp.pattern = string_at(s[i]["pattern"], at + "/pattern");
      sp.cwe = int_at(s[i]["cwe"], at + "/cwe");
      if (s[i].contains("arg")) sp.arg = int_at(s[i]["arg"], at + "/arg");
      p.sinks.push_back(sp);
    }
  }
  wrap("/policy", [&] { p.validate(); });
}

void read_scorer(const Json& j, ScorerConfig& s) {
  only_keys(j, {"kind", "command", "timeoutSec", "windowLines"}, "/scorer");
  if (j.contains("kind")) {
    std::string k = string_at(j["kind"], "/scorer/kind");
    if (k == "builtin") s.kind = ScorerKind::Builtin;
    else if (k == "none") s.kind = ScorerKind::None;
    else if (k == "external") s.kind = ScorerKind::External;
    else throw ConfigError("/scorer/kind", "expected builtin, none or external");
  }
  if (j.contains("command")) s.command = string_at(j["command"], "/scorer/command");
  if (j.contains("timeoutSec")) {
    s.timeoutSec = number_at(j["timeoutSec"], "/scorer/timeoutSec");
    if (s.timeoutSec <= 0) throw ConfigError("/scorer/timeoutSec", "must be > 0");
  }
  if (j.contains("windowLines")) {
    s.windowLines = int_at(j["windowLines"], "/scorer/windowLines");
    if (s.windowLines < 0) throw ConfigError("/scorer/windowLines", "must be >= 0");
  }
  if (s.kind == ScorerKind::External && s.command.empty())
    throw ConfigError("/scorer/command", "external scorer needs a command");
}

void read_risk(const Json& j, RiskTable& r) {
  only_keys(j, {"cwe", "smellScore", "unknownScore"}, "/risk");
  auto score = [](const Json& v, const std::string& at) {
    double x = number_at(v, at);
    if (x < 0 || x > 10) throw ConfigError(at, "score must lie in [0, 10]");
    return x;
  };
  if (j.contains("cwe")) {
    const Json& c = j["cwe"];
    if (!c.is_object()) throw ConfigError("/risk/cwe", "expected an object keyed by CWE number");
    r.cwe.clear();
    for (const auto& [k, v] : c.items()) {
      std::string at = "/risk/cwe/" + k;
      int id = 0;
      std::size_t used = 0;
      try {
        id = std::stoi(k, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != k.size() || id <= 0) throw ConfigError(at, "key must be a CWE number");
      r.cwe[id] = score(v, at);
    }
  }
  if (j.contains("smellScore")) r.smellScore = score(j["smellScore"], "/risk/smellScore");
  if (j.contains("unknownScore")) r.unknownScore = score(j["unknownScore"], "/risk/unknownScore");
}

}  // namespace

ToolConfig config_from_json(const Json& j, ToolConfig c) {
  only_keys(j, {"thresholds", "weights", "policy", "enabled", "scorer", "risk", "format", "failOn"}, "");
  if (j.contains("thresholds")) read_thresholds(j["thresholds"], c.detection.thresholds);
  if (j.contains("weights")) read_weights(j["weights"], c.detection.weights);
  if (j.contains("policy")) read_policy(j["policy"], c.detection.policy);
  if (j.contains("enabled")) {
    auto names = strings_at(j["enabled"], "/enabled");
    c.detection.enabled.clear();
    for (std::size_t i = 0; i < names.size(); ++i)
      c.detection.enabled.insert(rule_at(names[i], "/enabled/" + std::to_string(i)));
  }
  if (j.contains("scorer")) read_scorer(j["scorer"], c.detection.scorer);
  if (j.contains("risk")) read_risk(j["risk"], c.risk);
  if (j.contains("format")) wrap("/format", [&] { c.format = parse_output_format(string_at(j["format"], "/format")); });
  if (j.contains("failOn")) wrap("/failOn", [&] { c.failOn = parse_level(string_at(j["failOn"], "/failOn")); });
  return c;
}

ToolConfig load_config(const std::filesystem::path& path, ToolConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("not valid JSON: ") + e.what());
  }
  return config_from_json(j, std::move(base));
}

OJson to_json(const ToolConfig& c) {
  OJson t = OJson::object();
  for (const auto& f : kIntThresholds) t[f.name] = c.detection.thresholds.*f.field;
  for (const auto& f : kDoubleThresholds) t[f.name] = c.detection.thresholds.*f.field;
  const auto& w = c.detection.weights;
  OJson overrides = OJson::object();
  for (const auto& [r, rw] : w.overrides) overrides[std::string(to_string(r))] = {{"wStruct", rw.wStruct}, {"wSem", rw.wSem}};
  OJson sinks = OJson::array();
  for (const auto& s : c.detection.policy.sinks) sinks.push_back({{"pattern", s.pattern}, {"cwe", s.cwe}, {"arg", s.arg}});
  std::vector<std::string> enabled;
  for (Rule r : c.detection.enabled) enabled.emplace_back(to_string(r));
  const auto& s = c.detection.scorer;
  std::string kind = s.kind == ScorerKind::Builtin ? "builtin" : s.kind == ScorerKind::None ? "none" : "external";
  OJson cwe = OJson::object();
  for (const auto& [id, score] : c.risk.cwe) cwe[std::to_string(id)] = score;
  return {{"thresholds", t},
          {"weights", {{"wStruct", w.wStruct}, {"wSem", w.wSem}, {"tau", w.tau}, {"overrides", overrides}}},
          {"policy",
           {{"sourceCalls", c.detection.policy.sourceCalls},
            {"sourceParams", c.detection.policy.sourceParams},
            {"sinks", sinks},
            {"sanitizers", c.detection.policy.sanitizers}}},
          {"enabled", enabled},
          {"scorer", {{"kind", kind}, {"command", s.command}, {"timeoutSec", s.timeoutSec}, {"windowLines", s.windowLines}}},
          {"risk", {{"cwe", cwe}, {"smellScore", c.risk.smellScore}, {"unknownScore", c.risk.unknownScore}}},
          {"format", std::string(to_string(c.format))},
          {"failOn", std::string(to_string(c.failOn))}};
}

ToolConfig resolve_config(const std::optional<std::filesystem::path>& explicitPath) {
  if (explicitPath) return load_config(*explicitPath);
  if (const char* env = std::getenv("HYBRIDLINT_CONFIG"); env && *env) return load_config(env);
  return {};
}

// ---- SARIF -------------------------------------------------------------------

namespace {

std::string describe(Rule r) {
  switch (r) {
    case Rule::LongMethod: return "Function is too long or too complex.";
    case Rule::GodClass: return "Class concentrates too much behaviour and coupling.";
    case Rule::DataClass: return "Class holds data with little behaviour of its own.";
    case Rule::FeatureEnvy: return "Function uses another object's data more than its own.";
    case Rule::DuplicatedCode: return "Token sequence duplicated elsewhere.";
    case Rule::SqlInjection: return "Untrusted data reaches a SQL query.";
    case Rule::CommandInjection: return "Untrusted data reaches a shell command.";
    case Rule::Xss: return "Untrusted data reaches HTML output.";
    case Rule::HardcodedSecret: return "Credential embedded in source.";
  }
  return "";
}

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string headline(const Finding& f) {
  std::string s = std::string(to_string(f.rule));
  if (f.cwe) s += " (CWE-" + std::to_string(*f.cwe) + ")";
  if (!f.entity.name.empty()) s += " in " + f.entity.name;
  return s + ", confidence " + fmt2(f.confidence);
}

}  // namespace

OJson emit_sarif(const std::vector<Finding>& input, const ToolMeta& meta) {
  std::vector<Finding> findings = input;
  sort_findings(findings);
  std::vector<Rule> rules;
  for (const auto& f : findings)
    if (std::find(rules.begin(), rules.end(), f.rule) == rules.end()) rules.push_back(f.rule);
  std::sort(rules.begin(), rules.end());

  OJson ruleDocs = OJson::array();
  for (Rule r : rules) {
    OJson rd = {{"id", std::string(to_string(r))},
                {"name", std::string(to_string(r))},
                {"shortDescription", {{"text", describe(r)}}}};
    if (auto cwe = fixed_cwe(r)) rd["properties"] = {{"tags", {"CWE-" + std::to_string(*cwe)}}};
    ruleDocs.push_back(rd);
  }

  OJson results = OJson::array();
  for (const auto& f : findings) {
    auto idx = std::find(rules.begin(), rules.end(), f.rule) - rules.begin();
    OJson props = {{"findingId", f.id}, {"confidence", f.confidence}, {"inDiff", f.inDiff}};
    if (f.cwe) props["cwe"] = "CWE-" + std::to_string(*f.cwe);
    results.push_back(
        {{"ruleId", std::string(to_string(f.rule))},
         {"ruleIndex", idx},
         {"level", std::string(to_string(level_of(f)))},
         {"message", {{"text", headline(f)}}},
         {"locations",
          {{{"physicalLocation",
             {{"artifactLocation", {{"uri", f.path}}},
              {"region",
               {{"startLine", f.span.startLine},
                {"startColumn", f.span.startCol},
                {"endLine", f.span.endLine},
                {"endColumn", f.span.endCol}}}}}}}},
         {"partialFingerprints", {{"hybridlintId/v1", f.id}}},
         {"properties", props}});
  }

  return {{"$schema", "https://json.schemastore.org/sarif-2.1.0.json"},
          {"version", "2.1.0"},
          {"runs",
           {{{"tool",
              {{"driver",
                {{"name", meta.name},
                 {"version", meta.version},
                 {"informationUri", meta.informationUri},
                 {"rules", ruleDocs}}}}},
             {"results", results}}}}};
}

// ---- pull-request comment ----------------------------------------------------

std::string render_pr_comment(const std::vector<PrItem>& items, std::size_t cap) {
  if (items.empty()) return "hybridlint: no issues found.\n";
  std::ostringstream out;
  out << "## hybridlint: " << items.size() << (items.size() == 1 ? " finding" : " findings") << "\n";
  std::size_t shown = std::min(cap, items.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& it = items[i];
    const Finding& f = it.finding;
    out << "\n### " << to_string(f.rule);
    if (f.cwe) out << " (CWE-" << *f.cwe << ")";
    out << " at `" << f.path << ":" << f.span.startLine << "`\n\n";
    out << "Confidence: " << fmt2(f.confidence) << " (" << to_string(level_of(f)) << ")\n\n";
    if (!it.explanation.empty()) {
      out << it.explanation;
      if (it.explanation.back() != '\n') out << "\n";
      out << "\n";
    }
    if (it.diff && !it.diff->empty()) {
      out << "Suggested repair:\n\n```diff\n" << *it.diff;
      if (it.diff->back() != '\n') out << "\n";
      out << "```\n";
    } else {
      out << "No automated repair.\n";
    }
  }
  if (items.size() > shown) out << "\n_" << items.size() - shown << " more findings not shown._\n";
  return out.str();
}

// ---- changed-files mode ------------------------------------------------------

namespace {

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::string header_path(std::string_view rest) {
  // "+++ b/path\t2020-..." : drop the timestamp and the a/ or b/ prefix.
  auto tab = rest.find('\t');
  std::string p(rest.substr(0, tab));
  while (!p.empty() && (p.back() == ' ' || p.back() == '\r')) p.pop_back();
  if (starts_with(p, "a/") || starts_with(p, "b/")) p = p.substr(2);
  return p;
}

// "@@ -a[,b] +c[,d] @@"
bool parse_hunk_header(const std::string& line, int& oldCount, int& newStart, int& newCount) {
  int a = 0, b = 1, c = 0, d = 1;
  const char* s = line.c_str();
  int n = 0;
  if (std::sscanf(s, "@@ -%d,%d +%d,%d @@%n", &a, &b, &c, &d, &n) == 4 && n > 0) {
  } else if (b = 1, d = 1, n = 0, std::sscanf(s, "@@ -%d +%d,%d @@%n", &a, &c, &d, &n) == 3 && n > 0) {
  } else if (b = 1, d = 1, n = 0, std::sscanf(s, "@@ -%d,%d +%d @@%n", &a, &b, &c, &n) == 3 && n > 0) {
  } else if (b = 1, d = 1, n = 0, std::sscanf(s, "@@ -%d +%d @@%n", &a, &c, &n) == 2 && n > 0) {
  } else {
    return false;
  }
  if (a < 0 || b < 0 || c < 0 || d < 0) return false;
  oldCount = b;
  newStart = c;
  newCount = d;
  return true;
}

}  // namespace

std::vector<ChangedFile> parse_unified_diff(std::string_view text) {
  std::vector<ChangedFile> files;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  bool anyContent = false;
  ChangedFile* current = nullptr;
  bool currentDeleted = false;
  ChangedFile sink;  // collects hunks of deleted files
  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string& line = lines[i];
    int lineNo = static_cast<int>(i) + 1;
    if (line.find_first_not_of(" \t\r") != std::string::npos) anyContent = true;
    if (starts_with(line, "--- ")) {
      if (i + 1 >= lines.size() || !starts_with(lines[i + 1], "+++ "))
        throw DiffParseError(lineNo + 1, "expected '+++' header after '---'");
      std::string path = header_path(std::string_view(lines[i + 1]).substr(4));
      if (path.empty()) throw DiffParseError(lineNo + 1, "empty file name");
      currentDeleted = path == "/dev/null";
      if (currentDeleted) {
        sink = {};
        current = &sink;
      } else {
        files.push_back({path, {}});
        current = &files.back();
      }
      i += 2;
      continue;
    }
    if (starts_with(line, "@@")) {
      if (!current) throw DiffParseError(lineNo, "hunk before any file header");
      int oldCount = 0, newStart = 0, newCount = 0;
      if (!parse_hunk_header(line, oldCount, newStart, newCount)) throw DiffParseError(lineNo, "malformed hunk header");
      int seenOld = 0, seenNew = 0;
      ++i;
      while (i < lines.size() && (seenOld < oldCount || seenNew < newCount)) {
        const std::string& body = lines[i];
        int at = static_cast<int>(i) + 1;
        if (starts_with(body, "\\")) {
          ++i;
          continue;
        }
        char tag = body.empty() ? ' ' : body[0];
        if (tag == ' ') {
          ++seenOld;
          ++seenNew;
        } else if (tag == '-') {
          ++seenOld;
        } else if (tag == '+') {
          ++seenNew;
        } else {
          throw DiffParseError(at, "unexpected line inside hunk");
        }
        ++i;
      }
      if (seenOld != oldCount || seenNew != newCount) throw DiffParseError(static_cast<int>(i), "hunk is truncated or overlong");
      while (i < lines.size() && starts_with(lines[i], "\\")) ++i;
      if (newCount > 0) current->hunks.emplace_back(newStart, newStart + newCount - 1);
      else current->hunks.emplace_back(std::max(newStart, 1), std::max(newStart, 1));
      continue;
    }
    // Anything else outside a hunk ("diff --git", "index", mode lines,
    // commit text) is preamble.
    ++i;
  }
  if (anyContent && files.empty() && !current) throw DiffParseError(1, "no file headers found");
  // A file may appear in several sections; merge them.
  std::vector<ChangedFile> merged;
  for (auto& f : files) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ChangedFile& m) { return m.path == f.path; });
    if (it == merged.end()) merged.push_back(std::move(f));
    else it->hunks.insert(it->hunks.end(), f.hunks.begin(), f.hunks.end());
  }
  return merged;
}

namespace {

bool path_matches(const std::string& target, const std::string& diffPath) {
  std::string t = std::filesystem::path(target).lexically_normal().generic_string();
  std::string d = std::filesystem::path(diffPath).lexically_normal().generic_string();
  if (starts_with(t, "./")) t = t.substr(2);
  return t == d || (t.size() > d.size() && t.compare(t.size() - d.size(), d.size(), d) == 0 &&
                    t[t.size() - d.size() - 1] == '/');
}

}  // namespace

std::vector<std::string> filter_changed(const std::vector<std::string>& targets, std::string_view diffText) {
  auto changed = parse_unified_diff(diffText);
  std::vector<std::string> out;
  for (const auto& t : targets)
    if (std::any_of(changed.begin(), changed.end(), [&](const ChangedFile& c) { return path_matches(t, c.path); }))
      out.push_back(t);
  return out;
}

void tag_in_diff(std::vector<Finding>& findings, const std::vector<ChangedFile>& changed) {
  for (auto& f : findings) {
    f.inDiff = false;
    for (const auto& c : changed) {
      if (!path_matches(f.path, c.path)) continue;
      for (const auto& [s, e] : c.hunks)
        if (f.span.startLine <= e && s <= f.span.endLine) f.inDiff = true;
    }
  }
}

// ---- feedback ----------------------------------------------------------------

std::string_view to_string(Verdict v) { return v == Verdict::Accepted ? "accepted" : "rejected"; }

Verdict parse_verdict(std::string_view name) {
  if (name == "accepted") return Verdict::Accepted;
  if (name == "rejected") return Verdict::Rejected;
  throw Error("verdict must be accepted or rejected, not '" + std::string(name) + "'");
}

OJson to_json(const FeedbackRecord& r) {
  return {{"timestamp", r.timestamp},
          {"findingId", r.findingId},
          {"rule", std::string(to_string(r.rule))},
          {"verdict", std::string(to_string(r.verdict))}};
}

FeedbackRecord feedback_from_json(const Json& j) {
  if (!j.is_object()) throw Error("feedback record: expected an object");
  for (const auto& [k, _] : j.items())
    if (k != "timestamp" && k != "findingId" && k != "rule" && k != "verdict")
      throw Error("feedback record: unknown key '" + k + "'");
  auto str = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw Error(std::string("feedback record: bad \"") + key + "\"");
    return j[key].get<std::string>();
  };
  FeedbackRecord r;
  r.timestamp = str("timestamp");
  r.findingId = str("findingId");
  auto rule = parse_rule(str("rule"));
  if (!rule) throw Error("feedback record: unknown rule");
  r.rule = *rule;
  r.verdict = parse_verdict(str("verdict"));
  return r;
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void FeedbackState::apply(const FeedbackRecord& r) {
  records.push_back(r);
  auto& [acc, rej] = tally[r.rule];
  (r.verdict == Verdict::Accepted ? acc : rej)++;
}

void record_feedback(const std::filesystem::path& path, const FeedbackRecord& record,
                     const std::set<std::string>& known) {
  if (!known.count(record.findingId)) throw UnknownFinding(record.findingId);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot append to feedback log " + path.string());
  out << to_json(record).dump() << "\n";
  if (!out) throw Error("write failed on feedback log " + path.string());
}

FeedbackState replay_feedback(const std::filesystem::path& path) {
  FeedbackState state;
  std::ifstream in(path);
  if (!in) return state;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      state.apply(feedback_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw Error(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return state;
}

FusionWeights update_weights(const std::vector<FeedbackRecord>& log, const FusionWeights& weights) {
  FusionWeights out = weights;
  std::map<Rule, std::vector<const FeedbackRecord*>> byRule;
  for (const auto& r : log) byRule[r.rule].push_back(&r);
  for (const auto& [rule, recs] : byRule) {
    if (recs.size() < kFeedbackMinRecords) continue;
    std::size_t from = recs.size() > kFeedbackWindow ? recs.size() - kFeedbackWindow : 0;
    std::size_t accepted = 0;
    for (std::size_t i = from; i < recs.size(); ++i) accepted += recs[i]->verdict == Verdict::Accepted;
    double rate = static_cast<double>(accepted) / static_cast<double>(recs.size() - from);
    double wSem = std::clamp(weights.for_rule(rule).wSem + 0.1 * (rate - 0.5), 0.1, 0.9);
    out.overrides[rule] = {1.0 - wSem, wSem};
  }
  return out;
}

}  // namespace hybridlint
