#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridlint/source.hpp"

namespace hybridlint {

enum class NodeKind {
  Module,
  ClassDef,
  FunctionDef,
  Param,
  Assign,
  AugAssign,
  If,
  While,
  For,
  Return,
  ExprStmt,
  Call,
  Attribute,
  Name,
  Literal,
  BinOp,
  Compare,
  Subscript,
  Try,
  Raise,
  Import,
  Pass,
  Break,
  Continue,
};

std::string_view to_string(NodeKind kind);

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// A statement list owned by a compound node. Roles: "body", "orelse",
/// "except", "finally". Except blocks may carry a header expression (the
/// exception type) and a bound name.
struct Block {
  std::string role;
  std::vector<NodeId> stmts;
  NodeId header = kNoNode;
  std::string binding;
};

struct Node {
  NodeKind kind = NodeKind::Module;
  Span span;
  /// Header of a compound statement (keyword through colon); equals `span`
  /// for everything else.
  Span head;
  NodeId parent = kNoNode;
  std::map<std::string, std::string> attrs;
  std::vector<NodeId> children;
  std::vector<Block> blocks;

  const std::string& attr(const std::string& key) const;
  bool has(const std::string& key) const { return attrs.count(key) != 0; }
};

/// Arena-backed tree. Node 0 is always the Module root.
///
/// Child layout by kind:
///   ClassDef     children = base expressions, blocks = {body}
///   FunctionDef  children = Params, blocks = {body}
///   Param        children = optional default
///   Assign       children = targets..., value (attr "ntargets")
///   AugAssign    children = target, value (attr "op")
///   If / While   children = test, blocks = {body[, orelse]}
///   For          children = target, iterable, blocks = {body}
///   Return/Raise children = optional value
///   ExprStmt     children = expression
///   Call         children = callee, arguments (keyword args carry "keyword")
///   Attribute    children = object (attr "attr")
///   Subscript    children = object, index
///   BinOp        children = operands (attr "op"; unary ops have one child)
///   Compare      children = operands (attr "ops", comma separated)
///   Literal      attr "type" in {str,num,bool,none,tuple,list,dict}; collections
///                and f-strings hold their element expressions as children
///   Try          blocks = {body, except..., [finally]}
class Ast {
 public:
  NodeId add(Node node);
  const Node& operator[](NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  Node& at(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return 0; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// All FunctionDef nodes in source order, nested ones included.
  std::vector<NodeId> functions() const;
  std::vector<NodeId> classes() const;
  /// Name qualified by enclosing classes and functions, e.g. "Repo.save".
  std::string qualified_name(NodeId id) const;
  /// Nearest enclosing ClassDef when `fn` is a method.
  std::optional<NodeId> enclosing_class(NodeId fn) const;
  /// Nearest enclosing FunctionDef or ClassDef.
  NodeId enclosing_entity(NodeId id) const;
  /// Visits `id` and every descendant in pre-order. When `intoScopes` is
  /// false, nested FunctionDef/ClassDef bodies are not entered.
  template <typename F>
  void walk(NodeId id, F&& f, bool intoScopes = true) const;

 private:
  std::vector<Node> nodes_;
};

bool is_statement(NodeKind kind);
bool is_compound(NodeKind kind);

/// Parses the python-subset grammar. Throws LexError or ParseError.
Ast parse_python(std::string_view text);

/// Dispatches on the unit's language through the front-end registry.
Ast parse(const SourceUnit& unit);

/// Dotted name of an expression built from Name/Attribute nodes, e.g.
/// "os.path.join"; empty for anything else.
std::string dotted_name(const Ast& ast, NodeId expr);

template <typename F>
void Ast::walk(NodeId id, F&& f, bool intoScopes) const {
  // The starting node is always entered; only nested scopes are skipped.
  auto rec = [&](auto& self, NodeId cur, bool top) -> void {
    const Node& n = (*this)[cur];
    f(cur);
    if (!intoScopes && !top &&
        (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef))
      return;
    for (NodeId c : n.children) self(self, c, false);
    for (const Block& b : n.blocks) {
      if (b.header != kNoNode) self(self, b.header, false);
      for (NodeId s : b.stmts) self(self, s, false);
    }
  };
  rec(rec, id, true);
}

}  // namespace hybridlint
