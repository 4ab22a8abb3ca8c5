#include <gtest/gtest.h>

#include "support.hpp"
#include "tag5/bench.hpp"

using namespace tag5;
using tag5::testing::chars;
using tag5::testing::fixture;

TEST(Bench, Builders) {
  const Grammar g1 = fixture("g1.json");
  EXPECT_EQ(make_builder("blocks", g1)(8), chars("aabbccdd"));
  EXPECT_EQ(make_builder("blocks:b,a", g1)(4), chars("bbaa"));
  EXPECT_THROW(make_builder("blocks", g1)(6), Error);
  EXPECT_EQ(make_builder("wrap:a,s,b", g1)(4), chars("asbb"));
  EXPECT_EQ(make_builder("repeat:a", g1)(3), chars("aaa"));
  EXPECT_THROW(make_builder("zigzag", g1), Error);
  EXPECT_THROW(make_builder("wrap:a,b", g1), Error);
}

TEST(Bench, SlopeOfAPowerLaw) {
  std::vector<double> xs, ys;
  for (double x : {3.0, 4.0, 5.0, 6.0}) {
    xs.push_back(x);
    ys.push_back(5 * x + 1);
  }
  EXPECT_NEAR(least_squares_slope(xs, ys), 5.0, 1e-12);
  EXPECT_THROW(least_squares_slope({1.0}, {1.0}), Error);
  EXPECT_THROW(least_squares_slope({1.0, 1.0}, {1.0, 2.0}), Error);
}

TEST(Bench, SingleLengthHasNoSlope) {
  const Grammar g = fixture("g1.json");
  const ScalingReport r = run_scaling(g, {8}, make_builder("blocks", g));
  EXPECT_EQ(r.rows.size(), 2u);
  for (const auto& [engine, slope] : r.slopes) EXPECT_FALSE(slope.has_value()) << engine;
}

TEST(Bench, CsvRoundTrip) {
  const Grammar g = fixture("g1.json");
  const ScalingReport r = run_scaling(g, {8, 4, 12, 8}, make_builder("blocks", g));
  ASSERT_EQ(r.rows.size(), 6u);
  EXPECT_EQ(r.rows.front().n, 4u);
  EXPECT_EQ(parse_csv(emit_csv(r)), r);
  EXPECT_EQ(emit_csv(r).rfind("engine,n,rule_applications,items,wall_time_us\n", 0), 0u);
  EXPECT_THROW(parse_csv(""), Error);
  EXPECT_THROW(parse_csv("engine,n\n"), Error);
  EXPECT_THROW(parse_csv("engine,n,rule_applications,items,wall_time_us\nx,1,2,q,4\n"), Error);
}

TEST(Bench, RestrictedStaysBelowBaselineOnG1) {
  const Grammar g = fixture("g1.json");
  const ScalingReport r = run_scaling(g, {8, 16, 32}, make_builder("blocks", g));
  ASSERT_TRUE(r.slopes.at(kRestrictedEngine).has_value());
  EXPECT_LE(*r.slopes.at(kRestrictedEngine), 5.3);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& base = r.rows[k];
    const auto& restr = r.rows[k + 3];
    ASSERT_EQ(base.engine, kBaselineEngine);
    ASSERT_EQ(restr.engine, kRestrictedEngine);
    EXPECT_LT(restr.rule_applications, base.rule_applications);
  }
}

TEST(Bench, G2UsesOnlyTwoIndexItems) {
  const Grammar g = fixture("g2.json");
  const ScalingReport r = run_scaling(g, {8, 16, 32}, make_builder("wrap:\xE2\x84\x93,s,r", g),
                                      {kRestrictedEngine});
  ASSERT_TRUE(r.slopes.at(kRestrictedEngine).has_value());
  EXPECT_LE(*r.slopes.at(kRestrictedEngine), 3.3);
}

TEST(Bench, KCopies) {
  const Grammar g = fixture("g1.json");
  const Grammar g4 = k_copies(g, "beta1", 4);
  EXPECT_EQ(g4.auxiliary_trees().size(), 4u);
  EXPECT_TRUE(g4.find_tree("beta1_4").has_value());
  EXPECT_GT(grammar_size(g4).value, grammar_size(g).value);
  EXPECT_EQ(k_copies(g, "beta1", 1), g);
  EXPECT_THROW(k_copies(g, "alpha1", 2), Error);
  EXPECT_THROW(k_copies(g, "beta1", 0), Error);
}

TEST(Bench, RuleApplicationsPerGrammarSizeStayFlat) {
  const Grammar g = fixture("g1.json");
  const auto rows = run_grammar_size_scaling(
      [&](std::size_t k) { return k_copies(g, "beta1", k); }, {1, 2, 4}, chars("aabbccdd"));
  ASSERT_EQ(rows.size(), 3u);
  double lo = rows[0].ratio, hi = rows[0].ratio;
  for (const auto& row : rows) {
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
  }
  EXPECT_LT(hi / lo, 2.0);
}
