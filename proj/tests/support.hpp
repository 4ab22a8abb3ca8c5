// Helpers shared by the unit tests and the acceptance binary.
#ifndef TAG5_TESTS_SUPPORT_HPP
#define TAG5_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tag5/grammar.hpp"
#include "tag5/grammar_io.hpp"
#include "tag5/restriction.hpp"
#include "tag5/transform.hpp"

namespace tag5::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(TAG5_TEST_DATA_DIR) / name;
}

inline Grammar fixture(const std::string& name) { return load_grammar(data_path(name)); }

/// The restriction-valid fixtures.
inline const std::vector<std::string>& valid_fixtures() {
  static const std::vector<std::string> names = {"g1.json", "g2.json", "g3.json", "g4.json"};
  return names;
}

inline std::vector<std::string> chars(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

/// Random strings over the grammar's terminals with lengths 1..max_len.
inline std::vector<std::vector<std::string>> random_strings(const Grammar& g, std::size_t count,
                                                            std::size_t max_len,
                                                            std::uint64_t seed) {
  const auto terms = g.terminals();
  const std::vector<std::string> alphabet(terms.begin(), terms.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
  std::vector<std::vector<std::string>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::string> s(len(rng));
    for (auto& t : s) t = alphabet[sym(rng)];
    out.push_back(std::move(s));
  }
  return out;
}

/// Leaf yield of a base tree with the foot as "*" and substitution leaves as
/// label followed by a down arrow, matching CompiledTree::yield.
inline std::vector<std::string> base_yield(const Grammar& g, TreeId t) {
  std::vector<std::string> out;
  for (NodeId id : g.preorder(t)) {
    const auto& n = g.node(id);
    if (n.role == NodeRole::Terminal) out.push_back(n.label);
    if (n.role == NodeRole::Foot) out.push_back("*");
    if (n.role == NodeRole::Substitution) out.push_back(n.label + "\xE2\x86\x93");
  }
  return out;
}

inline std::vector<std::string> without_foot(std::vector<std::string> y) {
  y.erase(std::remove(y.begin(), y.end(), "*"), y.end());
  return y;
}

/// Checks that the four parts of a wrapping tree split its yield at the
/// foot and share its nodes as they should. Returns a description of every
/// problem found.
inline std::vector<std::string> split_invariant_problems(const TransformedGrammar& tg, TreeId beta) {
  std::vector<std::string> problems;
  const Grammar& g = tg.base;
  const std::string name = g.tree(beta).name;
  const auto& lu = tg.part(beta, SplitKind::LU).tree;
  const auto& ru = tg.part(beta, SplitKind::RU).tree;
  const auto& ld = tg.part(beta, SplitKind::LD).tree;
  const auto& rd = tg.part(beta, SplitKind::RD).tree;

  const auto full = base_yield(g, beta);
  const auto star = std::find(full.begin(), full.end(), "*");
  const std::vector<std::string> left(full.begin(), star);
  const std::vector<std::string> right(star == full.end() ? star : star + 1, full.end());
  auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (cat(without_foot(lu.yield(g)), without_foot(ld.yield(g))) != left) {
    problems.push_back(name + ": LU+LD yield differs from the left-of-foot yield");
  }
  if (cat(without_foot(rd.yield(g)), without_foot(ru.yield(g))) != right) {
    problems.push_back(name + ": RD+RU yield differs from the right-of-foot yield");
  }

  auto count_in = [](const CompiledTree& t, NodeId src) {
    return std::count_if(t.nodes.begin(), t.nodes.end(),
                         [&](const CompiledNode& n) { return n.source == src; });
  };
  const auto spine = compute_spine(g, beta);
  const NodeId w = *g.tree(beta).wrapping_node;
  const auto w_at = std::find(spine.begin(), spine.end(), w);
  if (w_at == spine.end()) {
    problems.push_back(name + ": wrapping node is not on the spine");
    return problems;
  }
  for (NodeId id : g.preorder(beta)) {
    const auto c_lu = count_in(lu, id), c_ru = count_in(ru, id);
    const auto c_ld = count_in(ld, id), c_rd = count_in(rd, id);
    const auto at = std::find(spine.begin(), spine.end(), id);
    const std::string where = name + ": node " + std::to_string(id);
    if (at == spine.end()) {
      if (c_lu + c_ru + c_ld + c_rd != 1) {
        problems.push_back(where + " off the spine appears " +
                           std::to_string(c_lu + c_ru + c_ld + c_rd) + " times");
      }
      continue;
    }
    const bool upper = at <= w_at;  // the wrapping node is in both halves
    const bool lower = at >= w_at;
    if ((c_lu == 1 && c_ru == 1) != upper || (!upper && (c_lu || c_ru))) {
      problems.push_back(where + " on the spine is misplaced in LU/RU");
    }
    if ((c_ld == 1 && c_rd == 1) != lower || (!lower && (c_ld || c_rd))) {
      problems.push_back(where + " on the spine is misplaced in LD/RD");
    }
  }
  return problems;
}

}  // namespace tag5::testing

#endif  // TAG5_TESTS_SUPPORT_HPP
