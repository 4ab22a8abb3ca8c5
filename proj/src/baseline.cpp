#include "tag5/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "tag5/normalize.hpp"

namespace tag5 {

struct BaselineRecognizer::Program {
  struct Node {
    NodeRole role = NodeRole::Internal;
    std::string label;
    std::vector<NodeId> children;
    bool spine = false;             // dominates the foot of its tree
    std::size_t min_material = 0;   // lower bound on yielded tokens
    std::vector<NodeId> adjoin;     // roots of admissible auxiliary trees
    bool nil = true;
    std::vector<NodeId> subst;      // roots of substitutable initial trees
  };

  std::vector<Node> nodes;
  std::vector<NodeId> order;  // evaluation order within one layer
  bool cyclic = false;
  std::vector<NodeId> accept_roots;
  std::set<std::string> terminals;

  explicit Program(const Grammar& input) {
    const Grammar g = binarize(input);
    terminals = g.terminals();
    nodes.resize(g.nodes.size());
    for (NodeId id = 0; id < g.nodes.size(); ++id) {
      const auto& src = g.node(id);
      Node& n = nodes[id];
      n.role = src.role;
      n.label = src.label;
      n.children = src.children;
      if (src.role == NodeRole::Internal || src.role == NodeRole::Foot) {
        n.nil = src.adj.allows_nil;
        for (TreeId t : src.adj.allowed) n.adjoin.push_back(g.tree(t).root);
      }
      for (TreeId t : src.subst) n.subst.push_back(g.tree(t).root);
    }
    for (TreeId t : g.auxiliary_trees()) {
      for (NodeId id : compute_spine(g, t)) nodes[id].spine = true;
    }
    for (TreeId t : g.initial_trees()) {
      if (g.root_label(t) == g.start) accept_roots.push_back(g.tree(t).root);
    }
    for (TreeId t = 0; t < g.trees.size(); ++t) {
      auto pre = g.preorder(t);
      for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        Node& n = nodes[*it];
        if (n.role == NodeRole::Terminal || n.role == NodeRole::Substitution) {
          n.min_material = 1;
        } else {
          n.min_material = 0;
          for (NodeId c : n.children) n.min_material += nodes[c].min_material;
        }
      }
    }
    build_order();
  }

  // Edges between items that can land in the same material layer.
  void build_order() {
    const std::size_t count = nodes.size();
    std::vector<std::vector<NodeId>> out(count);
    std::vector<std::size_t> indegree(count, 0);
    auto edge = [&](NodeId a, NodeId b) {
      out[a].push_back(b);
      ++indegree[b];
    };
    for (NodeId id = 0; id < count; ++id) {
      const Node& n = nodes[id];
      if (n.children.size() == 1) edge(n.children[0], id);
      if (n.children.size() == 2) {
        if (nodes[n.children[1]].min_material == 0) edge(n.children[0], id);
        if (nodes[n.children[0]].min_material == 0) edge(n.children[1], id);
      }
      for (NodeId r : n.subst) edge(r, id);
      for (NodeId r : n.adjoin) {
        if (n.min_material == 0 || nodes[r].min_material == 0) edge(r, id);
      }
    }
    std::vector<NodeId> ready;
    for (NodeId id = 0; id < count; ++id) {
      if (indegree[id] == 0) ready.push_back(id);
    }
    std::vector<bool> placed(count, false);
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end(), std::greater<>());
      const NodeId id = ready.back();
      ready.pop_back();
      order.push_back(id);
      placed[id] = true;
      for (NodeId b : out[id]) {
        if (--indegree[b] == 0) ready.push_back(b);
      }
    }
    for (NodeId id = 0; id < count; ++id) {
      if (!placed[id]) {
        order.push_back(id);
        cyclic = true;
      }
    }
  }
};

namespace {

// A view into the run's shared bit storage.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::uint64_t* words) : words_(words) {}
  bool test(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
  // True when the bit was newly set.
  bool set(std::size_t k) {
    const std::uint64_t mask = std::uint64_t{1} << (k & 63);
    if (words_[k >> 6] & mask) return false;
    words_[k >> 6] |= mask;
    return true;
  }

 private:
  std::uint64_t* words_ = nullptr;
};

enum Counter { kLex, kFoot, kSubst, kUnary, kBinary, kNil, kAdjoin, kCounters };
constexpr std::array<const char*, kCounters> kCounterNames = {"lex", "foot", "subst", "unary",
                                                               "binary", "nil", "adjoin"};

class Run {
 public:
  Run(const BaselineRecognizer::Program& p, const std::vector<std::string>& tokens)
      : P(p), tokens_(tokens), n_(tokens.size()), s_(n_ + 1) {
    for (const auto& t : tokens_) {
      if (!P.terminals.count(t)) throw UnknownToken(t);
    }
    std::vector<std::size_t> offsets;
    std::size_t words = 0;
    for (NodeId id = 0; id < P.nodes.size(); ++id) {
      const std::size_t cells = P.nodes[id].spine ? s_ * s_ * s_ * s_ : s_ * s_;
      offsets.push_back(words);
      words += 2 * ((cells + 63) / 64);
    }
    storage_.assign(words, 0);
    for (NodeId id = 0; id < P.nodes.size(); ++id) {
      const std::size_t cells = P.nodes[id].spine ? s_ * s_ * s_ * s_ : s_ * s_;
      b_.emplace_back(storage_.data() + offsets[id]);
      t_.emplace_back(storage_.data() + offsets[id] + (cells + 63) / 64);
    }
  }

  void run() {
    for (std::size_t m = 0; m <= n_; ++m) {
      bool changed = true;
      while (changed) {
        changed_ = false;
        for (NodeId id : P.order) {
          compute_b(id, m);
          compute_t(id, m);
        }
        changed = P.cyclic && changed_;
      }
    }
  }

  bool accepted() const {
    if (n_ == 0) return false;
    return std::any_of(P.accept_roots.begin(), P.accept_roots.end(),
                       [&](NodeId r) { return t_[r].test(k2(0, n_)); });
  }

  RecognitionStats stats() const {
    RecognitionStats s;
    std::size_t b = 0, t = 0;
    for (NodeId id = 0; id < P.nodes.size(); ++id) {
      const std::size_t cells = P.nodes[id].spine ? s_ * s_ * s_ * s_ : s_ * s_;
      for (std::size_t k = 0; k < cells; ++k) {
        b += b_[id].test(k);
        t += t_[id].test(k);
      }
    }
    s.items_by_kind["node.B"] = b;
    s.items_by_kind["node.T"] = t;
    for (std::size_t c = 0; c < kCounters; ++c) s.rule_applications[kCounterNames[c]] = counts_[c];
    s.accepted = accepted();
    return s;
  }

 private:
  std::size_t k2(std::size_t i, std::size_t j) const { return i * s_ + j; }
  std::size_t k4(std::size_t i, std::size_t p, std::size_t q, std::size_t j) const {
    return ((i * s_ + p) * s_ + q) * s_ + j;
  }
  void mark(Bits& bits, std::size_t k) {
    if (bits.set(k)) changed_ = true;
  }

  // Calls f(i, j) for every two-index span with material m.
  template <class F>
  void spans(std::size_t m, F&& f) const {
    if (m == 0) return;
    for (std::size_t i = 0; i + m <= n_; ++i) f(i, i + m);
  }
  // Calls f(i, p, q, j) for every four-index span with material m and a
  // non-empty gap.
  template <class F>
  void gapped(std::size_t m, F&& f) const {
    for (std::size_t i = 0; i + m < n_; ++i) {
      for (std::size_t g = 1; i + m + g <= n_; ++g) {
        for (std::size_t p = i; p <= i + m; ++p) f(i, p, p + g, i + m + g);
      }
    }
  }

  void compute_b(NodeId id, std::size_t m) {
    const auto& N = P.nodes[id];
    auto& B = b_[id];
    switch (N.role) {
      case NodeRole::Terminal:
      case NodeRole::Substitution:
        return;
      case NodeRole::Foot:
        if (m != 0) return;
        for (std::size_t p = 0; p < n_; ++p) {
          for (std::size_t q = p + 1; q <= n_; ++q) {
            ++counts_[kFoot];
            mark(B, k4(p, p, q, q));
          }
        }
        return;
      case NodeRole::Internal:
        break;
    }
    if (N.children.size() == 1) {
      const auto& C = t_[N.children[0]];
      if (N.spine) {
        gapped(m, [&](auto i, auto p, auto q, auto j) {
          ++counts_[kUnary];
          if (C.test(k4(i, p, q, j))) mark(B, k4(i, p, q, j));
        });
      } else {
        spans(m, [&](auto i, auto j) {
          ++counts_[kUnary];
          if (C.test(k2(i, j))) mark(B, k2(i, j));
        });
      }
      return;
    }
    const NodeId left = N.children[0], right = N.children[1];
    const auto& L = t_[left];
    const auto& R = t_[right];
    if (!N.spine) {
      spans(m, [&](auto i, auto j) {
        bool hit = false;
        for (std::size_t k = i; k <= j; ++k) {
          ++counts_[kBinary];
          hit = (L.test(k2(i, k)) && R.test(k2(k, j))) || hit;
        }
        if (hit) mark(B, k2(i, j));
      });
    } else if (P.nodes[left].spine) {
      gapped(m, [&](auto i, auto p, auto q, auto j) {
        bool hit = false;
        for (std::size_t k = q; k <= j; ++k) {
          ++counts_[kBinary];
          hit = (L.test(k4(i, p, q, k)) && R.test(k2(k, j))) || hit;
        }
        if (hit) mark(B, k4(i, p, q, j));
      });
    } else {
      gapped(m, [&](auto i, auto p, auto q, auto j) {
        bool hit = false;
        for (std::size_t k = i; k <= p; ++k) {
          ++counts_[kBinary];
          hit = (L.test(k2(i, k)) && R.test(k4(k, p, q, j))) || hit;
        }
        if (hit) mark(B, k4(i, p, q, j));
      });
    }
  }

  void compute_t(NodeId id, std::size_t m) {
    const auto& N = P.nodes[id];
    auto& T = t_[id];
    if (N.role == NodeRole::Terminal) {
      if (m != 1) return;
      for (std::size_t i = 0; i < n_; ++i) {
        ++counts_[kLex];
        if (tokens_[i] == N.label) mark(T, k2(i, i + 1));
      }
      return;
    }
    if (N.role == NodeRole::Substitution) {
      spans(m, [&](auto i, auto j) {
        for (NodeId r : N.subst) {
          ++counts_[kSubst];
          if (t_[r].test(k2(i, j))) mark(T, k2(i, j));
        }
      });
      return;
    }
    const auto& B = b_[id];
    if (!N.spine) {
      spans(m, [&](auto i, auto j) {
        if (N.nil) {
          ++counts_[kNil];
          if (B.test(k2(i, j))) mark(T, k2(i, j));
        }
        for (NodeId r : N.adjoin) {
          const auto& A = t_[r];
          bool hit = false;
          for (std::size_t i2 = i; i2 <= j; ++i2) {
            for (std::size_t j2 = i2 + 1; j2 <= j; ++j2) {
              ++counts_[kAdjoin];
              hit = (B.test(k2(i2, j2)) && A.test(k4(i, i2, j2, j))) || hit;
            }
          }
          if (hit) mark(T, k2(i, j));
        }
      });
    } else {
      gapped(m, [&](auto i, auto p, auto q, auto j) {
        if (N.nil) {
          ++counts_[kNil];
          if (B.test(k4(i, p, q, j))) mark(T, k4(i, p, q, j));
        }
        for (NodeId r : N.adjoin) {
          const auto& A = t_[r];
          bool hit = false;
          for (std::size_t i2 = i; i2 <= p; ++i2) {
            for (std::size_t j2 = q; j2 <= j; ++j2) {
              ++counts_[kAdjoin];
              hit = (B.test(k4(i2, p, q, j2)) && A.test(k4(i, i2, j2, j))) || hit;
            }
          }
          if (hit) mark(T, k4(i, p, q, j));
        }
      });
    }
  }

  const BaselineRecognizer::Program& P;
  const std::vector<std::string>& tokens_;
  std::size_t n_;
  std::size_t s_;
  std::vector<std::uint64_t> storage_;
  std::vector<Bits> b_;
  std::vector<Bits> t_;
  std::array<std::uint64_t, kCounters> counts_{};
  bool changed_ = false;
};

}  // namespace

BaselineRecognizer::BaselineRecognizer(const Grammar& grammar)
    : program_(std::make_unique<Program>(grammar)) {}
BaselineRecognizer::~BaselineRecognizer() = default;
BaselineRecognizer::BaselineRecognizer(BaselineRecognizer&&) noexcept = default;
BaselineRecognizer& BaselineRecognizer::operator=(BaselineRecognizer&&) noexcept = default;

RecognitionStats BaselineRecognizer::recognize(const std::vector<std::string>& tokens) const {
  const auto start = std::chrono::steady_clock::now();
  Run run(*program_, tokens);
  run.run();
  RecognitionStats s = run.stats();
  s.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return s;
}

bool BaselineRecognizer::accepts(const std::vector<std::string>& tokens) const {
  Run run(*program_, tokens);
  run.run();
  return run.accepted();
}

RecognitionStats baseline_recognize(const Grammar& grammar, const std::vector<std::string>& tokens) {
  return BaselineRecognizer(grammar).recognize(tokens);
}

}  // namespace tag5
