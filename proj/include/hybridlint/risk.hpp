#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/finding.hpp"

namespace hybridlint {

enum class RiskBand { Low, Medium, High };

std::string_view to_string(RiskBand band);
RiskBand band_of(double score);

/// Base scores on a 0-10 scale keyed by CWE. Smells carry no CWE and use
/// `smellScore`; CWEs missing from the table use `unknownScore`.
struct RiskTable {
  std::map<int, double> cwe{{89, 9.0}, {78, 8.5}, {798, 7.5}, {79, 7.0}};
  double smellScore = 3.0;
  double unknownScore = 5.0;

  /// Score of one finding; sets `*unknown` when the CWE was not in the table.
  double score(const Finding& f, bool* unknown = nullptr) const;
  double total(const std::vector<Finding>& findings) const;
};

}  // namespace hybridlint
