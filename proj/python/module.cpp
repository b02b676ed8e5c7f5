#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hybridlint/delivery.hpp"
#include "hybridlint/detection.hpp"
#include "hybridlint/evaluation.hpp"
#include "hybridlint/explanation.hpp"
#include "hybridlint/repair.hpp"

namespace py = pybind11;
using namespace hybridlint;
using OJson = nlohmann::ordered_json;

namespace {

ToolConfig config_of(const std::string& configJson) {
  if (configJson.empty()) return {};
  return config_from_json(nlohmann::json::parse(configJson));
}

std::vector<Finding> findings_of(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  if (j.is_object() && j.contains("findings")) j = j["findings"];
  std::vector<Finding> out;
  if (j.is_object()) {
    out.push_back(finding_from_json(j));
    return out;
  }
  for (const auto& f : j) out.push_back(finding_from_json(f));
  return out;
}

std::string scan(const std::vector<std::pair<std::string, std::string>>& sources, const std::string& configJson) {
  ToolConfig cfg = config_of(configJson);
  std::vector<SourceUnit> units;
  for (const auto& [path, text] : sources) units.emplace_back(path, text);
  ScanResult r;
  {
    py::gil_scoped_release release;
    r = scan_units(units, cfg.detection);
  }
  OJson fs = OJson::array(), skipped = OJson::array();
  for (const auto& f : r.findings) fs.push_back(to_json(f));
  for (const auto& s : r.skipped) skipped.push_back({{"path", s.path}, {"message", s.message}, {"span", span_to_json(s.span)}});
  return OJson{{"findings", fs}, {"skipped", skipped}, {"incidents", r.incidents}, {"totalLoc", r.totalLoc}}.dump();
}

std::string sarif(const std::string& findingsJson) { return emit_sarif(findings_of(findingsJson)).dump(); }

std::string explain(const std::string& findingJson, const std::string& format) {
  Finding f = findings_of(findingJson).at(0);
  return render_explanation(f, attribute(f), parse_explain_format(format));
}

std::string attribution(const std::string& findingJson) {
  return to_json(attribute(findings_of(findingJson).at(0))).dump();
}

OJson patch_json(const Patch& p) {
  OJson edits = OJson::array();
  for (const auto& e : p.edits) edits.push_back({{"span", span_to_json(e.span)}, {"replacement", e.replacement}});
  return {{"kind", to_string(p.kind)}, {"description", p.description}, {"notes", p.notes}, {"edits", edits}};
}

OJson validation_json(const ValidationReport& v) {
  OJson fresh = OJson::array();
  for (const auto& f : v.newFindings) fresh.push_back(to_json(f));
  return {{"parsesOk", v.parsesOk},   {"targetCleared", v.targetCleared}, {"newFindings", fresh},
          {"deltaCc", v.deltaCc},     {"deltaCbo", v.deltaCbo},           {"deltaLoc", v.deltaLoc},
          {"riskReduction", v.riskReduction}, {"accepted", v.accepted}};
}

// Suggestions for one finding, each validated against the unit and ranked.
std::string suggest_repairs(const std::string& findingJson, const std::string& path, const std::string& text,
                            const std::string& configJson) {
  ToolConfig cfg = config_of(configJson);
  Finding f = findings_of(findingJson).at(0);
  SourceUnit unit(path, text);
  ValidateOptions vo;
  vo.config = cfg.detection;
  vo.risk = cfg.risk;
  UnitViews v = build_views(unit);
  std::vector<RepairSuggestion> sugg = suggest(f, v, cfg.detection.policy);
  std::map<std::uint64_t, std::string> after;
  for (auto& s : sugg) {
    if (s.patch.kind == PatchKind::Advisory) continue;
    std::string patched = apply_patch(text, s.patch);
    s.validation = validate(unit, SourceUnit(path, patched), f, vo);
    after[patch_hash(s.patch)] = std::move(patched);
  }
  OJson out = OJson::array();
  for (const auto& s : rank(std::move(sugg), text)) {
    OJson item{{"findingId", s.findingId}, {"rank", s.rank}, {"patch", patch_json(s.patch)}};
    auto it = after.find(patch_hash(s.patch));
    if (it != after.end()) {
      item["patched"] = it->second;
      item["diff"] = unified_diff(text, it->second, path);
    }
    if (s.validation) item["validation"] = validation_json(*s.validation);
    out.push_back(std::move(item));
  }
  return out.dump();
}

std::string risk(const std::string& beforeJson, const std::string& afterJson, const std::string& configJson) {
  return to_json(risk_report(findings_of(beforeJson), findings_of(afterJson), config_of(configJson).risk)).dump();
}

}  // namespace

PYBIND11_MODULE(_hybridlint, m) {
  m.doc() = "Native core of hybridlint; every call exchanges JSON text.";
  py::register_exception<Error>(m, "HybridlintError", PyExc_ValueError);
  m.def("scan", &scan, py::arg("sources"), py::arg("config") = "",
        "Scan (path, text) pairs and return the findings document.");
  m.def("sarif", &sarif, py::arg("findings"), "Render findings as a SARIF 2.1.0 log.");
  m.def("explain", &explain, py::arg("finding"), py::arg("format") = "text",
        "Render the explanation of one finding as text, markdown or json.");
  m.def("attribution", &attribution, py::arg("finding"), "Evidence attribution of one finding.");
  m.def("suggest", &suggest_repairs, py::arg("finding"), py::arg("path"), py::arg("text"), py::arg("config") = "",
        "Ranked, validated repair suggestions for one finding.");
  m.def("risk_report", &risk, py::arg("before"), py::arg("after"), py::arg("config") = "", "Risk summary before and after repair.");
  m.attr("__version__") = "0.1.0";
}
