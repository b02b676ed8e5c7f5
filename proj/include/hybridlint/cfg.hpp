#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/ast.hpp"

namespace hybridlint {

enum class EdgeKind { Seq, TrueBranch, FalseBranch, LoopBack, Exception };

std::string_view to_string(EdgeKind kind);

using BlockId = int;

struct BasicBlock {
  BlockId id = 0;
  std::string label;  // "entry", "exit", or "B<n>"
  std::vector<NodeId> stmts;
  bool dead = false;
};

struct CfgEdge {
  BlockId from;
  BlockId to;
  EdgeKind kind;

  auto operator<=>(const CfgEdge&) const = default;
};

/// Intraprocedural CFG of one function. Block 0 is the entry, which holds the
/// function's Param nodes; block 1 is the exit. Body blocks follow as B0, B1, ...
/// A block ending in an If/While/For statement is a predicate block and
/// carries exactly one TrueBranch and one FalseBranch edge.
struct Cfg {
  NodeId function = kNoNode;
  std::vector<BasicBlock> blocks;
  std::vector<CfgEdge> edges;
  BlockId entry = 0;
  BlockId exit = 1;

  std::vector<BlockId> successors(BlockId b) const;
  std::vector<BlockId> predecessors(BlockId b) const;
  /// Body blocks only (entry and exit excluded).
  std::size_t body_block_count() const { return blocks.size() - 2; }
  bool is_predicate(BlockId b) const;
  /// Block holding `stmt`, or -1.
  BlockId block_of(NodeId stmt) const;
  /// Every statement in block order, entry params first.
  std::vector<NodeId> statements() const;
};

/// Builds the CFG for a FunctionDef. Nested defs and classes are opaque
/// statements; their bodies get their own CFGs.
Cfg build_cfg(const Ast& ast, NodeId function);

}  // namespace hybridlint
