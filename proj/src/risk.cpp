#include "hybridlint/risk.hpp"

namespace hybridlint {

std::string_view to_string(RiskBand band) {
  switch (band) {
    case RiskBand::Low: return "Low";
    case RiskBand::Medium: return "Medium";
    case RiskBand::High: return "High";
  }
  return "?";
}

RiskBand band_of(double score) {
  if (score >= 7.0) return RiskBand::High;
  if (score >= 4.0) return RiskBand::Medium;
  return RiskBand::Low;
}

double RiskTable::score(const Finding& f, bool* unknown) const {
  if (unknown) *unknown = false;
  if (!f.cwe) return smellScore;
  auto it = cwe.find(*f.cwe);
  if (it != cwe.end()) return it->second;
  if (unknown) *unknown = true;
  return unknownScore;
}

double RiskTable::total(const std::vector<Finding>& findings) const {
  double s = 0;
  for (const auto& f : findings) s += score(f);
  return s;
}

}  // namespace hybridlint
