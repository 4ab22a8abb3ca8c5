#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tag5/normalize.hpp"

using namespace tag5;
using tag5::testing::fixture;

namespace {

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s;
  return out;
}

}  // namespace

TEST(Split, G1PartsHaveTheExpectedYields) {
  const Grammar g = normalize(fixture("g1.json"));
  const TreeId beta = g.tree_id("beta1");
  const NodeId w = *g.tree(beta).wrapping_node;
  EXPECT_EQ(render_tree(g, beta), "S(a,S(S(b,S(S*,c)),d))");
  const auto parts = split_wrapping_tree(g, beta, w);
  EXPECT_EQ(parts[0].kind, SplitKind::LU);
  EXPECT_EQ(parts[1].kind, SplitKind::RU);
  EXPECT_EQ(parts[2].kind, SplitKind::LD);
  EXPECT_EQ(parts[3].kind, SplitKind::RD);
  EXPECT_EQ(joined(parts[0].tree.yield(g)), "a*");
  EXPECT_EQ(joined(parts[1].tree.yield(g)), "*d");
  EXPECT_EQ(joined(parts[2].tree.yield(g)), "b*");
  EXPECT_EQ(joined(parts[3].tree.yield(g)), "*c");
  EXPECT_EQ(parts[2].side(), Side::Left);
  EXPECT_EQ(parts[3].side(), Side::Right);
  // The foot of the upper halves is the wrapping node.
  EXPECT_EQ(parts[0].tree.nodes[*parts[0].tree.foot].source, w);
  EXPECT_EQ(parts[2].tree.nodes[parts[2].tree.root].source, w);
}

TEST(Split, RejectsNonSpineNodes) {
  const Grammar g = normalize(fixture("g1.json"));
  const TreeId beta = g.tree_id("beta1");
  EXPECT_THROW(split_wrapping_tree(g, beta, node_at_path(g, beta, {0})), Error);
  EXPECT_THROW(split_wrapping_tree(fixture("g1.json"), beta, 0), Error);
}

TEST(Transform, BuildsTheAuxiliarySet) {
  const TransformedGrammar tg = build_transformed_grammar(normalize(fixture("g2.json")));
  const TreeId left = tg.base.tree_id("left");
  const TreeId right = tg.base.tree_id("right");
  EXPECT_EQ(tg.initials.size(), 1u);
  ASSERT_EQ(tg.split_trees.size(), 2u);
  EXPECT_EQ(tg.part(left, SplitKind::L).tree.name, "left.L");
  EXPECT_EQ(tg.part(right, SplitKind::R).tree.name, "right.R");
  EXPECT_FALSE(tg.find(left, SplitKind::R).has_value());
  EXPECT_TRUE(tg.wrap_table.empty());
}

TEST(Transform, PartitionsConstraintsByClass) {
  const TransformedGrammar tg = build_transformed_grammar(normalize(fixture("g2.json")));
  const TreeId left = tg.base.tree_id("left");
  const TreeId right = tg.base.tree_id("right");
  const auto& root = tg.initials[0].nodes[tg.initials[0].root];
  EXPECT_EQ(root.adj.left, std::vector<TreeId>{left});
  EXPECT_EQ(root.adj.right, std::vector<TreeId>{right});
  EXPECT_TRUE(root.adj.wrapping.empty());
  // On the spine of a left tree only left trees stay admissible.
  const auto& l = tg.part(left, SplitKind::L).tree;
  for (LocalId id : l.spine()) {
    EXPECT_TRUE(l.nodes[id].adj.right.empty());
    EXPECT_TRUE(l.nodes[id].adj.wrapping.empty());
  }
}

TEST(Transform, WrapTableAndUpperFeet) {
  const TransformedGrammar tg = build_transformed_grammar(normalize(fixture("g1.json")));
  const TreeId beta = tg.base.tree_id("beta1");
  ASSERT_EQ(tg.wrap_table.count(beta), 1u);
  EXPECT_EQ(tg.wrap_table.at(beta).allowed, std::vector<TreeId>{beta});
  EXPECT_TRUE(tg.wrap_table.at(beta).nil);
  for (SplitKind k : {SplitKind::LU, SplitKind::RU}) {
    const auto& t = tg.part(beta, k).tree;
    EXPECT_EQ(t.nodes[*t.foot].adj, EffectiveAdj{});
  }
  for (SplitKind k : {SplitKind::LU, SplitKind::LD}) {
    const auto& t = tg.part(beta, k).tree;
    for (LocalId id : t.spine()) EXPECT_TRUE(t.nodes[id].adj.wrapping.empty());
  }
}

TEST(Transform, SplitInvariantsHoldOnEveryFixture) {
  std::size_t checked = 0;
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const TransformedGrammar tg = build_transformed_grammar(normalize(fixture(name)));
    for (const auto& [beta, entry] : tg.wrap_table) {
      EXPECT_EQ(tag5::testing::split_invariant_problems(tg, beta), std::vector<std::string>{})
          << name;
      ++checked;
    }
  }
  EXPECT_GE(checked, 6u);
}

TEST(Transform, RefusesInvalidGrammars) {
  EXPECT_THROW(build_transformed_grammar(normalize(fixture("invalid_two_wrapping_nodes.json"))),
               RestrictionViolation);
  EXPECT_THROW(build_transformed_grammar(normalize(fixture("invalid_left_admits_wrapping.json"))),
               RestrictionViolation);
  // Not normalized: beta1's node has three children.
  EXPECT_THROW(build_transformed_grammar(fixture("g1.json")), GrammarError);
}

TEST(Transform, DumpMatchesGolden) {
  const std::string dump = dump_transformed(build_transformed_grammar(normalize(fixture("g1.json"))));
  std::ifstream f(tag5::testing::data_path("g1_transform.golden.json"));
  ASSERT_TRUE(f) << "missing golden file";
  std::stringstream golden;
  golden << f.rdbuf();
  EXPECT_EQ(dump, golden.str());
}
