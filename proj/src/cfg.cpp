#include "hybridlint/cfg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hybridlint {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Seq: return "Seq";
    case EdgeKind::TrueBranch: return "TrueBranch";
    case EdgeKind::FalseBranch: return "FalseBranch";
    case EdgeKind::LoopBack: return "LoopBack";
    case EdgeKind::Exception: return "Exception";
  }
  return "?";
}

std::vector<BlockId> Cfg::successors(BlockId b) const {
  std::vector<BlockId> out;
  for (const auto& e : edges)
    if (e.from == b && std::find(out.begin(), out.end(), e.to) == out.end()) out.push_back(e.to);
  return out;
}

std::vector<BlockId> Cfg::predecessors(BlockId b) const {
  std::vector<BlockId> out;
  for (const auto& e : edges)
    if (e.to == b && std::find(out.begin(), out.end(), e.from) == out.end()) out.push_back(e.from);
  return out;
}

bool Cfg::is_predicate(BlockId b) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const CfgEdge& e) { return e.from == b && e.kind == EdgeKind::TrueBranch; });
}

BlockId Cfg::block_of(NodeId stmt) const {
  for (const auto& b : blocks)
    if (std::find(b.stmts.begin(), b.stmts.end(), stmt) != b.stmts.end()) return b.id;
  return -1;
}

std::vector<NodeId> Cfg::statements() const {
  std::vector<NodeId> out;
  for (const auto& b : blocks) out.insert(out.end(), b.stmts.begin(), b.stmts.end());
  return out;
}

namespace {

constexpr BlockId kNone = -1;

class CfgBuilder {
 public:
  CfgBuilder(const Ast& ast, NodeId fn) : ast_(ast) {
    cfg_.function = fn;
    cfg_.blocks.push_back(BasicBlock{0, "entry", {}, false});
    cfg_.blocks.push_back(BasicBlock{1, "exit", {}, false});
    for (NodeId c : ast[fn].children)
      if (ast[c].kind == NodeKind::Param) cfg_.blocks[0].stmts.push_back(c);
  }

  Cfg build() {
    const Node& fn = ast_[cfg_.function];
    cur_ = new_block();
    edge(cfg_.entry, cur_, EdgeKind::Seq);
    for (const Block& b : fn.blocks)
      if (b.role == "body") sequence(b.stmts);
    if (cur_ != kNone) edge(cur_, cfg_.exit, EdgeKind::Seq);
    mark_dead();
    return std::move(cfg_);
  }

 private:
  struct Loop {
    BlockId header;
    std::vector<BlockId> breaks;
  };

  BlockId new_block() {
    BlockId id = static_cast<BlockId>(cfg_.blocks.size());
    cfg_.blocks.push_back(BasicBlock{id, "B" + std::to_string(id - 2), {}, false});
    if (!tryBodies_.empty()) tryBodies_.back().push_back(id);
    return id;
  }

  void edge(BlockId from, BlockId to, EdgeKind kind) {
    CfgEdge e{from, to, kind};
    if (std::find(cfg_.edges.begin(), cfg_.edges.end(), e) == cfg_.edges.end()) cfg_.edges.push_back(e);
  }

  BlockId ensure() {
    if (cur_ == kNone) cur_ = new_block();
    return cur_;
  }

  // An empty current block can serve as a loop header or try entry directly.
  BlockId fresh_block_for_header() {
    if (cur_ != kNone && cfg_.blocks[static_cast<std::size_t>(cur_)].stmts.empty()) return cur_;
    BlockId b = new_block();
    if (cur_ != kNone) edge(cur_, b, EdgeKind::Seq);
    cur_ = b;
    return b;
  }

  void push(NodeId stmt) { cfg_.blocks[static_cast<std::size_t>(ensure())].stmts.push_back(stmt); }

  void sequence(const std::vector<NodeId>& stmts) {
    for (NodeId s : stmts) statement(s);
  }

  const std::vector<NodeId>& block_stmts(const Node& n, std::string_view role) {
    static const std::vector<NodeId> none;
    for (const Block& b : n.blocks)
      if (b.role == role) return b.stmts;
    return none;
  }

  void statement(NodeId id) {
    const Node& n = ast_[id];
    switch (n.kind) {
      case NodeKind::If: {
        push(id);
        BlockId pred = cur_;
        BlockId thenB = new_block();
        edge(pred, thenB, EdgeKind::TrueBranch);
        cur_ = thenB;
        sequence(block_stmts(n, "body"));
        BlockId thenEnd = cur_;
        bool hasElse = n.blocks.size() > 1;
        BlockId elseEnd = kNone;
        if (hasElse) {
          BlockId elseB = new_block();
          edge(pred, elseB, EdgeKind::FalseBranch);
          cur_ = elseB;
          sequence(block_stmts(n, "orelse"));
          elseEnd = cur_;
        }
        BlockId join = new_block();
        if (thenEnd != kNone) edge(thenEnd, join, EdgeKind::Seq);
        if (hasElse) {
          if (elseEnd != kNone) edge(elseEnd, join, EdgeKind::Seq);
        } else {
          edge(pred, join, EdgeKind::FalseBranch);
        }
        cur_ = join;
        return;
      }
      case NodeKind::While:
      case NodeKind::For: {
        BlockId header = fresh_block_for_header();
        push(id);
        loops_.push_back(Loop{header, {}});
        BlockId body = new_block();
        edge(header, body, EdgeKind::TrueBranch);
        cur_ = body;
        sequence(block_stmts(n, "body"));
        if (cur_ != kNone) edge(cur_, header, EdgeKind::LoopBack);
        Loop loop = std::move(loops_.back());
        loops_.pop_back();
        BlockId after = new_block();
        edge(header, after, EdgeKind::FalseBranch);
        for (BlockId b : loop.breaks) edge(b, after, EdgeKind::Seq);
        cur_ = after;
        return;
      }
      case NodeKind::Try:
        try_statement(n);
        return;
      case NodeKind::Return:
        push(id);
        edge(cur_, cfg_.exit, EdgeKind::Seq);
        cur_ = kNone;
        return;
      case NodeKind::Raise:
        push(id);
        if (tryBodies_.empty()) edge(cur_, cfg_.exit, EdgeKind::Exception);
        cur_ = kNone;
        return;
      case NodeKind::Break:
        push(id);
        if (!loops_.empty()) loops_.back().breaks.push_back(cur_);
        cur_ = kNone;
        return;
      case NodeKind::Continue:
        push(id);
        if (!loops_.empty()) edge(cur_, loops_.back().header, EdgeKind::LoopBack);
        cur_ = kNone;
        return;
      default:
        push(id);
        return;
    }
  }

  void try_statement(const Node& n) {
    BlockId start = fresh_block_for_header();
    tryBodies_.push_back({start});
    sequence(block_stmts(n, "body"));
    BlockId bodyEnd = cur_;
    std::vector<BlockId> protectedBlocks = std::move(tryBodies_.back());
    tryBodies_.pop_back();

    std::vector<const Block*> handlers;
    const Block* finallyBlock = nullptr;
    for (const Block& b : n.blocks) {
      if (b.role == "except") handlers.push_back(&b);
      if (b.role == "finally") finallyBlock = &b;
    }

    std::vector<BlockId> ends;
    if (bodyEnd != kNone) ends.push_back(bodyEnd);
    BlockId target = kNone;
    if (handlers.size() > 1) target = new_block();  // dispatch among handlers
    for (const Block* h : handlers) {
      BlockId hb = new_block();
      if (target == kNone) target = hb;
      else edge(target, hb, EdgeKind::Seq);
      cur_ = hb;
      sequence(h->stmts);
      if (cur_ != kNone) ends.push_back(cur_);
    }
    BlockId join = new_block();
    if (target == kNone) target = join;  // try/finally without handlers
    for (BlockId b : protectedBlocks) edge(b, target, EdgeKind::Exception);
    for (BlockId b : ends) edge(b, join, EdgeKind::Seq);
    cur_ = join;
    if (finallyBlock) sequence(finallyBlock->stmts);
  }

  void mark_dead() {
    std::vector<bool> seen(cfg_.blocks.size(), false);
    std::deque<BlockId> work{cfg_.entry};
    seen[static_cast<std::size_t>(cfg_.entry)] = true;
    while (!work.empty()) {
      BlockId b = work.front();
      work.pop_front();
      for (const auto& e : cfg_.edges)
        if (e.from == b && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = true;
          work.push_back(e.to);
        }
    }
    for (auto& blk : cfg_.blocks) blk.dead = !seen[static_cast<std::size_t>(blk.id)];
  }

  const Ast& ast_;
  Cfg cfg_;
  BlockId cur_ = kNone;
  std::vector<Loop> loops_;
  std::vector<std::vector<BlockId>> tryBodies_;
};

}  // namespace

Cfg build_cfg(const Ast& ast, NodeId function) {
  if (ast[function].kind != NodeKind::FunctionDef) throw Error("build_cfg: node is not a FunctionDef");
  return CfgBuilder(ast, function).build();
}

}  // namespace hybridlint
