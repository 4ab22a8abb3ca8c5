#include <gtest/gtest.h>

#include "support.hpp"
#include "tag5/normalize.hpp"
#include "tag5/oracle.hpp"

using namespace tag5;
using tag5::testing::fixture;

namespace {

const char* kTinyAux = R"({
  "start": "S",
  "trees": [
    {"name": "alpha", "kind": "initial",
     "root": {"label": "S", "children": [{"label": "s", "terminal": true}]}},
    {"name": "beta", "kind": "auxiliary",
     "root": {"label": "S", "children": [
       {"label": "a", "terminal": true},
       {"label": "T", "foot": true}]}}
  ]
})";

}  // namespace

TEST(GrammarIo, LoadsG1) {
  const Grammar g = fixture("g1.json");
  EXPECT_EQ(g.start, "S");
  EXPECT_EQ(g.initial_trees().size(), 1u);
  EXPECT_EQ(g.auxiliary_trees().size(), 1u);
  EXPECT_EQ(render_tree(g, g.tree_id("beta1")), "S(a,S(b,S*,c),d)");
}

TEST(GrammarIo, RoundTripsEveryFixture) {
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar g = fixture(name);
    EXPECT_EQ(parse_grammar(serialize_grammar(g)), g) << name;
  }
}

TEST(GrammarIo, RoundTripsNormalizedGrammars) {
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar n = normalize(fixture(name));
    EXPECT_EQ(parse_grammar(serialize_grammar(n)), n) << name;
    const Grammar stripped = parse_grammar(serialize_grammar(n, {.strip_synthetic = true}));
    for (TreeId t = 0; t < stripped.trees.size(); ++t) {
      const Grammar orig = fixture(name);
      EXPECT_EQ(render_tree(stripped, t), render_tree(orig, t)) << name;
    }
  }
}

TEST(GrammarIo, RejectsFootRootMismatch) {
  try {
    parse_grammar(kTinyAux);
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_NE(std::string(e.what()).find("foot/root label mismatch"), std::string::npos);
  }
}

TEST(GrammarIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_grammar("{"), GrammarError);
  EXPECT_THROW(parse_grammar(R"({"start": "S", "trees": 3})"), GrammarError);
  EXPECT_THROW(parse_grammar(R"({"start": "S", "trees": [
      {"name": "a", "kind": "initial", "root": {"label": "S", "children": [
        {"label": "x", "terminal": true, "foot": true}]}}]})"),
               GrammarError);
  EXPECT_THROW(load_grammar(tag5::testing::data_path("missing.json")), Error);
}

TEST(GrammarIo, DefaultAdjunctionAdmitsMatchingAuxiliaryTrees) {
  const Grammar g = fixture("g2.json");
  const NodeId root = g.tree(g.tree_id("alpha")).root;
  const auto& adj = g.node(root).adj;
  EXPECT_TRUE(adj.allows_nil);
  EXPECT_TRUE(adj.allows(g.tree_id("left")));
  EXPECT_TRUE(adj.allows(g.tree_id("right")));
}

TEST(Grammar, SpineAndClasses) {
  const Grammar g2 = fixture("g2.json");
  EXPECT_EQ(classify_tree(g2, g2.tree_id("left")), TreeClass::Left);
  EXPECT_EQ(classify_tree(g2, g2.tree_id("right")), TreeClass::Right);
  const Grammar g1 = fixture("g1.json");
  const TreeId beta = g1.tree_id("beta1");
  EXPECT_EQ(classify_tree(g1, beta), TreeClass::Wrapping);
  const auto spine = compute_spine(g1, beta);
  ASSERT_EQ(spine.size(), 3u);
  EXPECT_EQ(spine.front(), g1.tree(beta).root);
  EXPECT_EQ(spine[1], node_at_path(g1, beta, {1}));
  EXPECT_EQ(spine.back(), *g1.tree(beta).foot);
  EXPECT_THROW(compute_spine(g1, g1.tree_id("alpha1")), GrammarError);
}

TEST(Grammar, ClassesPartitionAuxiliaryTrees) {
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar g = fixture(name);
    const auto classes = classify_all(g);
    for (TreeId t = 0; t < g.trees.size(); ++t) {
      EXPECT_EQ(classes[t].has_value(), g.tree(t).is_auxiliary()) << name;
      if (classes[t]) {
        EXPECT_EQ(*classes[t], classify_tree(g, t)) << name;
      }
    }
  }
}

TEST(Grammar, SizeCountsNodesAndConstraints) {
  const Grammar g = fixture("g1.json");
  // 13 nodes; the two S nodes admitting beta1 add two each, the other two
  // internal nodes and the foot add one each for nil.
  EXPECT_EQ(grammar_size(g).value, 13u + 2 * 2 + 3);
  EXPECT_EQ(grammar_size(g), grammar_size(parse_grammar(serialize_grammar(g))));
}

TEST(Restriction, FixturesAreValid) {
  for (const auto& name : tag5::testing::valid_fixtures()) {
    EXPECT_FALSE(has_errors(validate_restriction(fixture(name)))) << name;
  }
}

TEST(Restriction, FindsTwoWrappingNodes) {
  const Grammar g = fixture("invalid_two_wrapping_nodes.json");
  const auto v = validate_restriction(g);
  ASSERT_TRUE(has_errors(v));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.severity == Severity::Error && x.condition == 1 && x.tree == "beta";
  }));
}

TEST(Restriction, FindsWrappingTreeOnLeftSpine) {
  const auto v = validate_restriction(fixture("invalid_left_admits_wrapping.json"));
  ASSERT_TRUE(has_errors(v));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.severity == Severity::Error && x.condition == 2;
  }));
}

TEST(Restriction, WrappingNodeOfG1) {
  const Grammar g = fixture("g1.json");
  const TreeId beta = g.tree_id("beta1");
  EXPECT_EQ(find_wrapping_node(g, beta), node_at_path(g, beta, {1}));
}

TEST(Normalize, ProducesBinaryTreesWithInternalWrappingNodes) {
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar n = normalize(fixture(name));
    for (const auto& node : n.nodes) EXPECT_LE(node.children.size(), 2u) << name;
    for (TreeId t : n.auxiliary_trees()) {
      if (classify_tree(n, t) != TreeClass::Wrapping) continue;
      ASSERT_TRUE(n.tree(t).wrapping_node.has_value()) << name;
      const NodeId w = *n.tree(t).wrapping_node;
      EXPECT_NE(w, n.tree(t).root) << name;
      EXPECT_NE(w, *n.tree(t).foot) << name;
    }
    EXPECT_FALSE(has_errors(validate_restriction(n))) << name;
    EXPECT_EQ(normalize(n), n) << name;
  }
}

TEST(Normalize, KeepsLeftAndRightClasses) {
  const Grammar g = fixture("g2.json");
  const Grammar n = normalize(g);
  EXPECT_EQ(classify_all(n), classify_all(g));
}

TEST(Normalize, PreservesTheLanguageOfG4) {
  const Grammar g = fixture("g4.json");
  EXPECT_EQ(enumerate_yields(normalize(g), 6), enumerate_yields(g, 6));
}

TEST(Normalize, RejectsEpsilonLeaves) {
  const char* text = R"({"start": "S", "trees": [
    {"name": "alpha", "kind": "initial",
     "root": {"label": "S", "children": [{"label": "", "terminal": true}]}}]})";
  EXPECT_THROW(normalize(parse_grammar(text)), EpsilonLeaf);
}
