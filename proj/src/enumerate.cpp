#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_set>

#include "tag5/oracle.hpp"

namespace tag5 {

std::size_t frontier_cap_from_env() {
  const char* raw = std::getenv("TAG5_FRONTIER_CAP");
  if (!raw || !*raw) return kDefaultFrontierCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultFrontierCap;
  return static_cast<std::size_t>(v);
}

namespace {

// A derived tree is a preorder sequence of codes: signature, whether the node
// can still take an adjunction, and the number of children.
using Code = std::uint32_t;
using Encoded = std::vector<Code>;

constexpr Code kAdjoinable = 1u << 8;

Code make_code(std::uint32_t sig, bool adjoinable, std::size_t children) {
  return (sig << 9) | (adjoinable ? kAdjoinable : 0u) | static_cast<Code>(children);
}
std::uint32_t sig_of(Code c) { return c >> 9; }
std::size_t arity(Code c) { return c & 0xFF; }

struct EncodedHash {
  std::size_t operator()(const Encoded& e) const {
    std::size_t h = 1469598103934665603ull;
    for (Code c : e) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

struct Signature {
  NodeRole role;
  std::string label;
  std::vector<TreeId> allowed;
  bool nil;
  std::vector<TreeId> subst;
  auto key() const { return std::make_tuple(role, label, allowed, nil, subst); }
};

class Enumerator {
 public:
  Enumerator(const Grammar& g, std::size_t max_len, std::size_t cap)
      : g_(g), max_len_(max_len), cap_(cap) {
    for (const auto& n : g.nodes) {
      if (n.children.size() > 255) throw GrammarError("node with more than 255 children");
    }
    node_sig_.resize(g.nodes.size());
    for (NodeId id = 0; id < g.nodes.size(); ++id) {
      const auto& n = g.node(id);
      Signature s{n.role, n.label, {}, true, n.subst};
      if (n.role == NodeRole::Internal || n.role == NodeRole::Foot) {
        s.allowed = n.adj.allowed;
        s.nil = n.adj.allows_nil;
      }
      auto [it, fresh] = sig_index_.emplace(s.key(), static_cast<std::uint32_t>(sigs_.size()));
      if (fresh) sigs_.push_back(s);
      node_sig_[id] = it->second;
    }
    encoded_.resize(g.trees.size());
    foot_pos_.resize(g.trees.size());
    for (TreeId t = 0; t < g.trees.size(); ++t) {
      for (NodeId id : g.preorder(t)) {
        const auto& n = g.node(id);
        if (n.role == NodeRole::Foot) foot_pos_[t] = encoded_[t].size();
        encoded_[t].push_back(make_code(node_sig_[id], can_adjoin(node_sig_[id]), n.children.size()));
      }
    }
    compute_min_lengths();
  }

  std::set<std::vector<std::string>> run() {
    std::set<std::vector<std::string>> out;
    if (max_len_ == 0) return out;
    std::deque<Encoded> queue;
    for (TreeId t : g_.initial_trees()) {
      if (g_.root_label(t) != g_.start) continue;
      push(encoded_[t], queue);
    }
    while (!queue.empty()) {
      Encoded cur = std::move(queue.front());
      queue.pop_front();
      expand(cur, queue, out);
    }
    return out;
  }

 private:
  bool can_adjoin(std::uint32_t sig) const {
    const auto& s = sigs_[sig];
    return (s.role == NodeRole::Internal || s.role == NodeRole::Foot) &&
           (!s.allowed.empty() || !s.nil);
  }

  void compute_min_lengths() {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
    min_len_.assign(g_.trees.size(), inf);
    bool changed = true;
    while (changed) {
      changed = false;
      for (TreeId t : g_.initial_trees()) {
        std::size_t total = 0;
        for (NodeId id : g_.preorder(t)) {
          const auto& n = g_.node(id);
          if (n.role == NodeRole::Terminal) total += 1;
          if (n.role == NodeRole::Substitution) total += slot_min(n.subst);
        }
        total = std::min(total, inf);
        if (total < min_len_[t]) {
          min_len_[t] = total;
          changed = true;
        }
      }
    }
  }

  std::size_t slot_min(const std::vector<TreeId>& options) const {
    std::size_t best = std::numeric_limits<std::size_t>::max() / 4;
    for (TreeId a : options) best = std::min(best, min_len_[a]);
    return best;
  }

  // Lower bound on the yield length of any completion.
  std::size_t lower_bound(const Encoded& e) const {
    std::size_t total = 0;
    for (Code c : e) {
      const auto& s = sigs_[sig_of(c)];
      if (s.role == NodeRole::Terminal) total += 1;
      if (s.role == NodeRole::Substitution) total += slot_min(s.subst);
    }
    return total;
  }

  void push(Encoded e, std::deque<Encoded>& queue) {
    if (lower_bound(e) > max_len_) return;
    if (!seen_.insert(e).second) return;
    if (seen_.size() > cap_) {
      throw BudgetExceeded("enumeration exceeded the frontier cap of " + std::to_string(cap_) +
                           " partial trees");
    }
    queue.push_back(std::move(e));
  }

  void expand(const Encoded& e, std::deque<Encoded>& queue,
              std::set<std::vector<std::string>>& out) {
    // end[k]: one past the last code of the subtree starting at k.
    std::vector<std::size_t> end(e.size());
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (start, children left)
    for (std::size_t k = 0; k < e.size(); ++k) {
      stack.emplace_back(k, arity(e[k]));
      while (!stack.empty() && stack.back().second == 0) {
        end[stack.back().first] = k + 1;
        stack.pop_back();
        if (!stack.empty()) --stack.back().second;
      }
    }

    bool complete = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const Code c = e[k];
      const auto& s = sigs_[sig_of(c)];
      if (s.role == NodeRole::Substitution) {
        complete = false;
        for (TreeId a : s.subst) {
          Encoded next(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
          next.insert(next.end(), encoded_[a].begin(), encoded_[a].end());
          next.insert(next.end(), e.begin() + static_cast<std::ptrdiff_t>(k) + 1, e.end());
          push(std::move(next), queue);
        }
        continue;
      }
      if (!(c & kAdjoinable)) continue;
      if (!s.nil) complete = false;
      for (TreeId b : s.allowed) {
        const Encoded& aux = encoded_[b];
        const std::size_t f = foot_pos_[b];
        Encoded next(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
        next.insert(next.end(), aux.begin(), aux.begin() + static_cast<std::ptrdiff_t>(f));
        // The foot stays as a unary node above the excised subtree, whose
        // root has used up its adjunction.
        next.push_back((aux[f] & ~Code{0xFF}) | 1u);
        next.push_back(c & ~kAdjoinable);
        next.insert(next.end(), e.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                    e.begin() + static_cast<std::ptrdiff_t>(end[k]));
        next.insert(next.end(), aux.begin() + static_cast<std::ptrdiff_t>(f) + 1, aux.end());
        next.insert(next.end(), e.begin() + static_cast<std::ptrdiff_t>(end[k]), e.end());
        push(std::move(next), queue);
      }
    }

    if (complete) {
      std::vector<std::string> yield;
      for (Code c : e) {
        const auto& s = sigs_[sig_of(c)];
        if (s.role == NodeRole::Terminal) yield.push_back(s.label);
      }
      if (!yield.empty() && yield.size() <= max_len_) out.insert(std::move(yield));
    }
  }

  const Grammar& g_;
  std::size_t max_len_;
  std::size_t cap_;
  std::vector<Signature> sigs_;
  std::map<std::tuple<NodeRole, std::string, std::vector<TreeId>, bool, std::vector<TreeId>>,
           std::uint32_t>
      sig_index_;
  std::vector<std::uint32_t> node_sig_;
  std::vector<Encoded> encoded_;
  std::vector<std::size_t> foot_pos_;
  std::vector<std::size_t> min_len_;
  std::unordered_set<Encoded, EncodedHash> seen_;
};

}  // namespace

std::set<std::vector<std::string>> enumerate_yields(const Grammar& grammar, std::size_t max_len,
                                                    std::optional<std::size_t> frontier_cap) {
  if (max_len > kMaxEnumerationLength) {
    throw Error("enumeration length " + std::to_string(max_len) + " exceeds the limit of " +
                std::to_string(kMaxEnumerationLength));
  }
  Enumerator e(grammar, max_len, frontier_cap.value_or(frontier_cap_from_env()));
  return e.run();
}

}  // namespace tag5
