#include <gtest/gtest.h>

#include <random>

#include "hybridlint/cfg.hpp"
#include "unit/test_support.hpp"

using namespace hybridlint;
using testing_support::find_function;
using testing_support::fixture_text;

namespace {

int count_kind(const Cfg& cfg, EdgeKind k) {
  return static_cast<int>(std::count_if(cfg.edges.begin(), cfg.edges.end(), [&](const CfgEdge& e) { return e.kind == k; }));
}

bool has_edge(const Cfg& cfg, const std::string& from, const std::string& to, EdgeKind k) {
  for (const auto& e : cfg.edges)
    if (cfg.blocks[e.from].label == from && cfg.blocks[e.to].label == to && e.kind == k) return true;
  return false;
}

void check_structure(const Cfg& cfg) {
  int preds = 0;
  for (const auto& b : cfg.blocks)
    if (cfg.is_predicate(b.id)) ++preds;
  EXPECT_EQ(count_kind(cfg, EdgeKind::TrueBranch), preds);
  EXPECT_EQ(count_kind(cfg, EdgeKind::FalseBranch), preds);
  EXPECT_TRUE(cfg.successors(cfg.exit).empty());
  for (const auto& e : cfg.edges)
    if (e.kind == EdgeKind::TrueBranch || e.kind == EdgeKind::FalseBranch) {
      const auto& stmts = cfg.blocks[e.from].stmts;
      ASSERT_FALSE(stmts.empty());
    }
}

}  // namespace

TEST(Cfg, StraightLineIsOneBlock) {
  Ast ast = parse_python("def f():\n    a = 1\n    b = 2\n    c = a + b\n");
  Cfg cfg = build_cfg(ast, find_function(ast, "f"));
  EXPECT_EQ(cfg.body_block_count(), 1u);
  ASSERT_EQ(cfg.edges.size(), 2u);
  EXPECT_TRUE(has_edge(cfg, "entry", "B0", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B0", "exit", EdgeKind::Seq));
  check_structure(cfg);
}

TEST(Cfg, IfElseMakesFourBlocks) {
  Ast ast = parse_python("def f(c):\n    if c:\n        a = 1\n    else:\n        b = 2\n");
  Cfg cfg = build_cfg(ast, find_function(ast, "f"));
  EXPECT_EQ(cfg.body_block_count(), 4u);
  EXPECT_TRUE(has_edge(cfg, "B0", "B1", EdgeKind::TrueBranch));
  EXPECT_TRUE(has_edge(cfg, "B0", "B2", EdgeKind::FalseBranch));
  EXPECT_TRUE(has_edge(cfg, "B1", "B3", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B2", "B3", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B3", "exit", EdgeKind::Seq));
  check_structure(cfg);
}

// Hand-drawn CFG for the while/break fixture:
//   entry -> B0 [i = 0]           Seq
//   B0 -> B1 [while]              Seq
//   B1 -> B2 [if]                 TrueBranch
//   B2 -> B3 [break]              TrueBranch
//   B2 -> B4 [i = i + 1]          FalseBranch (if join)
//   B4 -> B1                      LoopBack
//   B1 -> B5 [return i]           FalseBranch
//   B3 -> B5                      Seq (break leaves the loop early)
//   B5 -> exit                    Seq
TEST(Cfg, WhileWithBreak) {
  Ast ast = parse_python(fixture_text("repr/while_break.py"));
  Cfg cfg = build_cfg(ast, find_function(ast, "find_slot"));
  EXPECT_EQ(cfg.body_block_count(), 6u);
  EXPECT_TRUE(has_edge(cfg, "entry", "B0", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B0", "B1", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B1", "B2", EdgeKind::TrueBranch));
  EXPECT_TRUE(has_edge(cfg, "B2", "B3", EdgeKind::TrueBranch));
  EXPECT_TRUE(has_edge(cfg, "B2", "B4", EdgeKind::FalseBranch));
  EXPECT_TRUE(has_edge(cfg, "B4", "B1", EdgeKind::LoopBack));
  EXPECT_TRUE(has_edge(cfg, "B1", "B5", EdgeKind::FalseBranch));
  EXPECT_TRUE(has_edge(cfg, "B3", "B5", EdgeKind::Seq));
  EXPECT_TRUE(has_edge(cfg, "B5", "exit", EdgeKind::Seq));
  EXPECT_EQ(cfg.edges.size(), 9u);
  check_structure(cfg);
}

TEST(Cfg, ReturnInLoopGoesStraightToExitAndLeavesDeadCode) {
  Ast ast = parse_python("def f(xs):\n    for x in xs:\n        return x\n        y = 1\n    return None\n");
  Cfg cfg = build_cfg(ast, find_function(ast, "f"));
  EXPECT_TRUE(has_edge(cfg, "B1", "exit", EdgeKind::Seq));
  int dead = 0;
  for (const auto& b : cfg.blocks) dead += b.dead;
  EXPECT_EQ(dead, 1);
  check_structure(cfg);
}

TEST(Cfg, TryBodyBlocksHaveExceptionEdgeToHandler) {
  Ast ast = parse_python(
      "def f(p):\n    try:\n        if p:\n            v = 1\n        w = 2\n    except E:\n        v = 0\n    return v\n");
  Cfg cfg = build_cfg(ast, find_function(ast, "f"));
  int exc = count_kind(cfg, EdgeKind::Exception);
  // try-body blocks: B0 (if), B1 (then), B2 (join with w = 2)
  EXPECT_EQ(exc, 3);
  for (const auto& e : cfg.edges)
    if (e.kind == EdgeKind::Exception) EXPECT_EQ(cfg.blocks[e.to].label, "B3");
  check_structure(cfg);
}

TEST(Cfg, ParamsLiveInEntryBlock) {
  Ast ast = parse_python("def f(a, b=2):\n    return a\n");
  Cfg cfg = build_cfg(ast, find_function(ast, "f"));
  EXPECT_EQ(cfg.blocks[cfg.entry].stmts.size(), 2u);
}

TEST(CfgProperty, RandomStructuredFunctionsAreSound) {
  std::mt19937 rng(11);
  std::function<void(std::string&, int, int)> gen = [&](std::string& out, int depth, int indent) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (int i = 0; i < n; ++i) {
      int pick = depth > 2 ? 0 : static_cast<int>(rng() % 6);
      switch (pick) {
        case 1:
          out += pad + "if a > " + std::to_string(i) + ":\n";
          gen(out, depth + 1, indent + 4);
          if (rng() % 2) {
            out += pad + "else:\n";
            gen(out, depth + 1, indent + 4);
          }
          break;
        case 2:
          out += pad + "while a < 9:\n";
          gen(out, depth + 1, indent + 4);
          if (rng() % 3 == 0) out += pad + "    break\n";
          break;
        case 3:
          out += pad + "for a in b:\n";
          gen(out, depth + 1, indent + 4);
          if (rng() % 3 == 0) out += pad + "    continue\n";
          break;
        case 4:
          out += pad + "try:\n";
          gen(out, depth + 1, indent + 4);
          out += pad + "except E:\n";
          gen(out, depth + 1, indent + 4);
          break;
        default:
          out += pad + "a = a + " + std::to_string(i) + "\n";
      }
    }
  };
  for (int round = 0; round < 200; ++round) {
    std::string src = "def f(a, b):\n";
    gen(src, 0, 4);
    Ast ast = parse_python(src);
    Cfg cfg = build_cfg(ast, find_function(ast, "f"));
    check_structure(cfg);
    // Every statement lives in exactly one block.
    std::set<NodeId> seen;
    for (NodeId s : cfg.statements()) EXPECT_TRUE(seen.insert(s).second);
  }
}
