#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hybridlint/ast.hpp"
#include "hybridlint/lexer.hpp"

namespace hybridlint {

struct MetricVector {
  int loc = 0;
  int nos = 0;
  int cc = 0;
  int params = 0;
  int nom = 0;
  int wmc = 0;
  int atfd = 0;
  std::optional<double> accessorRatio;  // classes with nom > 0 only
  int cbo = 0;
  int fieldCount = 0;                   // classes only: distinct self.x names plus class-level assignments
};

/// Attribute accesses of one function, grouped by the name they are read
/// through ("self" for own data).
struct AccessProfile {
  int own = 0;
  std::map<std::string, int> foreign;
};

/// Lines carrying at least one non-comment token.
std::set<int> code_lines(const TokenStream& tokens);

/// Metrics for a FunctionDef or ClassDef. Cyclomatic complexity is extended
/// McCabe: 1 + if/elif + while + for + except handlers + each and/or inside
/// an if/while condition.
MetricVector compute_metrics(const Ast& ast, const std::set<int>& codeLines, NodeId entity);

int cyclomatic_complexity(const Ast& ast, NodeId fn);
int statement_count(const Ast& ast, NodeId entity);
AccessProfile access_profile(const Ast& ast, NodeId fn);
/// Getter (`return self.x`) or setter (`self.x = param`) with nothing else.
bool is_accessor(const Ast& ast, NodeId fn);
/// Names bound by imports anywhere in the module.
std::set<std::string> import_bindings(const Ast& ast);

}  // namespace hybridlint
