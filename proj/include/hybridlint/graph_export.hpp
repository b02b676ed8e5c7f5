#pragma once

#include <string>
#include <string_view>

#include "hybridlint/ast.hpp"
#include "hybridlint/cfg.hpp"
#include "hybridlint/pdg.hpp"

namespace hybridlint {

enum class GraphFormat { Dot, Json };

class UnknownFormat : public Error {
 public:
  explicit UnknownFormat(const std::string& name) : Error("unknown format: " + name) {}
};

GraphFormat parse_graph_format(std::string_view name);

/// Byte-stable renderings. JSON follows
/// {nodes:[{id,label,span}], edges:[{from,to,kind}]}; PDG data edges add
/// "variable".
std::string export_graph(const Ast& ast, const Cfg& cfg, GraphFormat format);
std::string export_graph(const Ast& ast, const Pdg& pdg, GraphFormat format);

}  // namespace hybridlint
