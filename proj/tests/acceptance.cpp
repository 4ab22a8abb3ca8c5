// Acceptance checks: one PASS/FAIL line per criterion, with the measured
// numbers. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "tag5/bench.hpp"
#include "tag5/differential.hpp"
#include "tag5/normalize.hpp"
#include "tag5/oracle.hpp"
#include "tag5/recognizer.hpp"

using namespace tag5;
using tag5::testing::fixture;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream o;
  o << std::fixed << std::setprecision(1) << s << "s";
  return o.str();
}

Tokens blocks(std::size_t n) {
  Tokens w;
  for (const char* t : {"a", "b", "c", "d"}) w.insert(w.end(), n, t);
  return w;
}

std::string summary(const CompareReport& r) {
  std::ostringstream o;
  o << r.checked << " strings, " << r.accepted << " accepted, " << r.disagreements.size()
    << " disagreements";
  if (!r.agree()) o << " (first: " << describe(r.disagreements.front()) << ")";
  return o.str();
}

Outcome g1_language() {
  const Grammar g = fixture("g1.json");
  const Recognizer r = make_recognizer(g);
  std::size_t missed = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    if (!r.accepts(blocks(n))) ++missed;
  }
  CompareOptions o;
  o.max_len = 10;
  const CompareReport rep = compare(g, o);
  // The only accepted strings up to length 10 are abcd and aabbccdd.
  const bool pass = missed == 0 && rep.agree() && rep.accepted == 2 && !rep.sampled;
  return {pass, "a^n b^n c^n d^n (n=1..6) missed " + std::to_string(missed) +
                    "; exhaustive to length 10: " + summary(rep)};
}

Outcome g2_language() {
  const Grammar g = fixture("g2.json");
  CompareOptions o;
  o.max_len = 8;
  const CompareReport rep = compare(g, o);
  const std::string l = "\xE2\x84\x93";
  std::set<Tokens> expect;
  for (std::size_t m = 0; m < 8; ++m) {
    for (std::size_t k = 0; m + k < 8; ++k) {
      Tokens w(m, l);
      w.push_back("s");
      w.insert(w.end(), k, "r");
      expect.insert(w);
    }
  }
  const bool same = enumerate_yields(g, 8) == expect;
  return {rep.agree() && same && !rep.sampled,
          "exhaustive to length 8: " + summary(rep) +
              "; enumerated language " + (same ? "equals" : "differs from") + " l^m s r^k"};
}

Outcome g3_language() {
  CompareOptions o;
  o.max_len = 8;
  const CompareReport rep = compare(fixture("g3.json"), o);
  return {rep.agree() && !rep.sampled, "exhaustive to length 8: " + summary(rep)};
}

Outcome complexity() {
  const Grammar g = fixture("g1.json");
  const ScalingReport r = run_scaling(g, {8, 16, 32, 64}, make_builder("blocks", g));
  const auto restricted = r.slopes.at(kRestrictedEngine);
  const auto baseline = r.slopes.at(kBaselineEngine);
  std::uint64_t restr64 = 0, base64 = 0;
  std::ostringstream o;
  o << std::fixed << std::setprecision(3);
  for (const auto& row : r.rows) {
    if (row.n == 64 && row.engine == kRestrictedEngine) restr64 = row.rule_applications;
    if (row.n == 64 && row.engine == kBaselineEngine) base64 = row.rule_applications;
  }
  const bool restr_ok = restricted && *restricted <= 5.3;
  const bool base_ok = baseline && *baseline >= 5.6;
  const bool lower = restr64 < base64;
  o << "restricted slope " << restricted.value_or(NAN) << (restr_ok ? " <= 5.3" : " > 5.3")
    << ", baseline slope " << baseline.value_or(NAN) << (base_ok ? " >= 5.6" : " < 5.6")
    << ", rule applications at n=64: " << restr64 << " vs " << base64;
  return {restr_ok && base_ok && lower, o.str()};
}

Outcome grammar_size_linearity() {
  const Grammar g = fixture("g1.json");
  const auto rows = run_grammar_size_scaling(
      [&](std::size_t k) { return k_copies(g, "beta1", k); }, {1, 2, 4, 8},
      tag5::testing::chars("aabbccdd"));
  double lo = INFINITY, hi = 0;
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << "ratio per k:";
  for (const auto& row : rows) {
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
    o << " " << row.k << ":" << row.ratio;
  }
  o << "; max/min " << hi / lo;
  return {rows.size() == 4 && hi / lo < 2.0, o.str()};
}

Outcome transform_invariants() {
  std::size_t trees = 0;
  std::vector<std::string> problems;
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const TransformedGrammar tg = build_transformed_grammar(normalize(fixture(name)));
    for (const auto& [beta, entry] : tg.wrap_table) {
      ++trees;
      for (auto& p : tag5::testing::split_invariant_problems(tg, beta)) {
        problems.push_back(name + ": " + p);
      }
    }
  }
  std::string detail = std::to_string(trees) + " wrapping trees, " +
                       std::to_string(problems.size()) + " problems";
  if (!problems.empty()) detail += " (first: " + problems.front() + ")";
  return {problems.empty() && trees > 0, detail};
}

Outcome fixpoint_determinism() {
  std::size_t runs = 0, differ = 0;
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar g = fixture(name);
    const Recognizer r = make_recognizer(g);
    auto inputs = tag5::testing::random_strings(g, 100, 10, 2024);
    for (const auto& w : enumerate_yields(g, 6)) inputs.push_back(w);
    for (const auto& w : inputs) {
      ++runs;
      if (!closure_order_independent(r, w)) ++differ;
    }
  }
  return {differ == 0, std::to_string(runs) + " inputs, " + std::to_string(differ) +
                           " with differing FIFO/LIFO charts"};
}

Outcome normalization_safety() {
  std::size_t differ = 0;
  std::ostringstream o;
  for (const auto& name : tag5::testing::valid_fixtures()) {
    const Grammar g = fixture(name);
    const auto before = enumerate_yields(g, 8);
    const auto after = enumerate_yields(normalize(g), 8);
    if (before != after) ++differ;
    o << name << ":" << before.size() << (before == after ? "" : "!=") << " ";
  }
  o << "strings up to length 8";
  return {differ == 0, o.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"G1 language", g1_language},
      {"G2 language", g2_language},
      {"G3 language", g3_language},
      {"complexity separation", complexity},
      {"grammar-size linearity", grammar_size_linearity},
      {"transformation invariants", transform_invariants},
      {"fixpoint determinism", fixpoint_determinism},
      {"normalization safety", normalization_safety},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " ("
              << criteria[k].first << "): " << out.detail << " [" << seconds_since(t0) << "]"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
