#include "tag5/recognizer.hpp"

#include <algorithm>
#include <cassert>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "tag5/normalize.hpp"

namespace tag5 {

const char* to_string(State s) {
  switch (s) {
    case State::B: return "B";
    case State::M: return "M";
    case State::T: return "T";
  }
  return "?";
}

const char* to_string(WrapTag t) {
  switch (t) {
    case WrapTag::LD: return "LD";
    case WrapTag::RD: return "RD";
    case WrapTag::RU: return "RU";
    case WrapTag::Full: return "full";
  }
  return "?";
}

std::uint64_t RecognitionStats::total_items() const {
  std::uint64_t total = 0;
  for (const auto& [_, c] : items_by_kind) total += c;
  return total;
}

std::uint64_t RecognitionStats::total_rule_applications() const {
  std::uint64_t total = 0;
  for (const auto& [_, c] : rule_applications) total += c;
  return total;
}

namespace {

constexpr std::uint32_t kMaxLength = 1023;
constexpr std::uint32_t kMaxTrees = 1u << 14;

enum Rule : std::size_t { R1a, R1b, R1c, R1d, R1e, R2a, R2b, R2c, R2d, R2e, R3a, R3b, R3c, R3d };

}  // namespace

struct Recognizer::Program {
  struct Node {
    NodeRole role = NodeRole::Internal;
    std::string label;
    NodeId source = 0;
    std::uint32_t tree = 0;
    std::int64_t parent = -1;
    std::uint8_t child_index = 0;
    std::vector<GlobalNode> children;
    std::vector<GlobalNode> left_roots;
    std::vector<GlobalNode> right_roots;
    std::vector<TreeId> wrapping;
    bool nil = true;

    // Set when this node is the root of some tree.
    std::vector<GlobalNode> subst_hosts;
    std::vector<GlobalNode> left_hosts;
    std::vector<GlobalNode> right_hosts;
    std::optional<std::pair<TreeId, SplitKind>> wrap_part;
  };
  struct Tree {
    std::string name;
    GlobalNode first = 0, last = 0;
    GlobalNode root = 0;
    std::optional<GlobalNode> foot;
  };
  struct Wrap {
    GlobalNode lu = 0, ru = 0, ld = 0, rd = 0;
    std::vector<TreeId> allowed;
    bool nil = true;
    std::vector<GlobalNode> hosts;  // nodes that admit this tree
    std::vector<TreeId> users;      // trees whose wrapping node admits this tree
  };

  TransformedGrammar tg;
  std::vector<Node> nodes;
  std::vector<Tree> trees;
  std::vector<std::optional<Wrap>> wraps;  // by base TreeId
  std::unordered_map<std::string, std::vector<GlobalNode>> lexicon;
  std::vector<GlobalNode> feet;
  std::vector<GlobalNode> accept_roots;
  std::set<std::string> terminals;

  explicit Program(TransformedGrammar t) : tg(std::move(t)) {
    const Grammar& g = tg.base;
    if (g.trees.size() >= kMaxTrees) throw Error("grammar has too many trees");
    terminals = g.terminals();
    wraps.resize(g.trees.size());

    std::vector<const CompiledTree*> compiled;
    for (const auto& t : tg.initials) compiled.push_back(&t);
    for (const auto& st : tg.split_trees) compiled.push_back(&st.tree);

    for (std::uint32_t t = 0; t < compiled.size(); ++t) {
      const CompiledTree& ct = *compiled[t];
      Tree tree;
      tree.name = ct.name;
      tree.first = static_cast<GlobalNode>(nodes.size());
      tree.root = tree.first + ct.root;
      if (ct.foot) tree.foot = tree.first + *ct.foot;
      for (const auto& cn : ct.nodes) {
        Node n;
        n.role = cn.role;
        n.label = g.node(cn.source).label;
        n.source = cn.source;
        n.tree = t;
        for (LocalId c : cn.children) n.children.push_back(tree.first + c);
        nodes.push_back(std::move(n));
      }
      tree.last = static_cast<GlobalNode>(nodes.size());
      for (GlobalNode id = tree.first; id < tree.last; ++id) {
        const auto& kids = nodes[id].children;
        for (std::size_t k = 0; k < kids.size(); ++k) {
          nodes[kids[k]].parent = id;
          nodes[kids[k]].child_index = static_cast<std::uint8_t>(k);
        }
      }
      trees.push_back(std::move(tree));
    }

    auto split_root = [&](TreeId source, SplitKind kind) {
      return trees[tg.initials.size() + *tg.find(source, kind)].root;
    };

    for (const auto& st : tg.split_trees) {
      if (st.kind == SplitKind::LU) {
        Wrap w;
        w.lu = split_root(st.source, SplitKind::LU);
        w.ru = split_root(st.source, SplitKind::RU);
        w.ld = split_root(st.source, SplitKind::LD);
        w.rd = split_root(st.source, SplitKind::RD);
        const auto& entry = tg.wrap_table.at(st.source);
        w.allowed = entry.allowed;
        w.nil = entry.nil;
        wraps[st.source] = std::move(w);
      }
    }
    for (const auto& st : tg.split_trees) {
      if (st.kind == SplitKind::L || st.kind == SplitKind::R) continue;
      nodes[split_root(st.source, st.kind)].wrap_part = std::make_pair(st.source, st.kind);
    }
    for (TreeId t = 0; t < wraps.size(); ++t) {
      if (!wraps[t]) continue;
      for (TreeId a : wraps[t]->allowed) wraps[a]->users.push_back(t);
    }

    for (std::uint32_t t = 0; t < compiled.size(); ++t) {
      const CompiledTree& ct = *compiled[t];
      for (LocalId l = 0; l < ct.nodes.size(); ++l) {
        const auto& cn = ct.nodes[l];
        const GlobalNode id = trees[t].first + l;
        Node& n = nodes[id];
        n.nil = cn.adj.nil;
        if (cn.role == NodeRole::Terminal || cn.role == NodeRole::Substitution) continue;
        for (TreeId a : cn.adj.left) {
          GlobalNode r = split_root(a, SplitKind::L);
          n.left_roots.push_back(r);
          nodes[r].left_hosts.push_back(id);
        }
        for (TreeId a : cn.adj.right) {
          GlobalNode r = split_root(a, SplitKind::R);
          n.right_roots.push_back(r);
          nodes[r].right_hosts.push_back(id);
        }
        for (TreeId a : cn.adj.wrapping) {
          n.wrapping.push_back(a);
          wraps[a]->hosts.push_back(id);
        }
      }
      for (LocalId l = 0; l < ct.nodes.size(); ++l) {
        const GlobalNode id = trees[t].first + l;
        const auto& cn = ct.nodes[l];
        if (cn.role == NodeRole::Terminal) lexicon[nodes[id].label].push_back(id);
        if (cn.role == NodeRole::Substitution) {
          for (TreeId a : g.node(cn.source).subst) {
            for (std::uint32_t k = 0; k < tg.initials.size(); ++k) {
              if (tg.initials[k].source == a) nodes[trees[k].root].subst_hosts.push_back(id);
            }
          }
        }
      }
      if (t >= tg.initials.size()) {
        feet.push_back(*trees[t].foot);
      } else if (g.root_label(ct.source) == g.start) {
        accept_roots.push_back(trees[t].root);
      }
    }
  }
};

struct Chart::Impl {
  using Pos = std::uint16_t;

  const Recognizer::Program& P;
  std::vector<std::string> tokens;
  std::uint32_t n;
  AgendaOrder order;
  std::size_t stride;  // n + 1

  std::vector<std::uint64_t> closed_bits;
  std::vector<std::uint64_t> done_bits;
  // Processed items, as flat per-slot lists of capacity n + 1:
  // (node, state, i) -> ends and (node, state, j) -> starts.
  std::vector<Pos> start_data, end_data;
  std::vector<Pos> start_len, end_len;

  std::unordered_set<std::uint64_t> wrap_closed;
  std::unordered_map<std::uint64_t, std::vector<std::array<Pos, 3>>> full_by_p;    // (i, q, j)
  std::unordered_map<std::uint64_t, std::vector<std::array<Pos, 2>>> full_by_pq;   // (i, j)
  std::unordered_map<std::uint64_t, std::vector<std::array<Pos, 3>>> ld_by_q;      // (i, p, j)
  std::unordered_map<std::uint64_t, std::vector<std::array<Pos, 3>>> rd_by_j;      // (i, p, q)
  std::unordered_map<std::uint64_t, std::vector<std::array<Pos, 3>>> ru_by_i;      // (p, q, j)

  std::vector<Item> agenda;
  std::size_t agenda_head = 0;  // FIFO read position
  bool seeded = false;
  std::array<std::uint64_t, 14> rules{};
  std::array<std::uint64_t, 3> node_counts{};
  std::array<std::uint64_t, 4> wrap_counts{};
  std::size_t total = 0;

  Impl(const Recognizer::Program& p, std::vector<std::string> toks, AgendaOrder o)
      : P(p), tokens(std::move(toks)), order(o) {
    if (tokens.size() > kMaxLength) {
      throw Error("input longer than " + std::to_string(kMaxLength) + " tokens");
    }
    n = static_cast<std::uint32_t>(tokens.size());
    stride = n + 1;
    const std::size_t cells = P.nodes.size() * 3 * stride * stride;
    closed_bits.assign((cells + 63) / 64, 0);
    done_bits.assign((cells + 63) / 64, 0);
    const std::size_t slots = P.nodes.size() * 3 * stride;
    start_data.resize(slots * stride);
    end_data.resize(slots * stride);
    start_len.assign(slots, 0);
    end_len.assign(slots, 0);
  }

  std::span<const Pos> ends_from(GlobalNode u, State x, std::uint32_t i) const {
    const std::size_t k = slot(u, x, i);
    return {start_data.data() + k * stride, start_len[k]};
  }
  std::span<const Pos> starts_to(GlobalNode u, State x, std::uint32_t j) const {
    const std::size_t k = slot(u, x, j);
    return {end_data.data() + k * stride, end_len[k]};
  }

  std::size_t slot(GlobalNode u, State x, std::uint32_t pos) const {
    return (static_cast<std::size_t>(u) * 3 + static_cast<std::size_t>(x)) * stride + pos;
  }
  std::size_t cell(GlobalNode u, State x, std::uint32_t i, std::uint32_t j) const {
    return slot(u, x, i) * stride + j;
  }
  static bool test(const std::vector<std::uint64_t>& bits, std::size_t c) {
    return (bits[c >> 6] >> (c & 63)) & 1u;
  }
  static void set(std::vector<std::uint64_t>& bits, std::size_t c) {
    bits[c >> 6] |= std::uint64_t{1} << (c & 63);
  }

  static std::uint64_t wrap_key(const WrapItem& w) {
    return (static_cast<std::uint64_t>(w.tag) << 62) | (static_cast<std::uint64_t>(w.tree) << 48) |
           (static_cast<std::uint64_t>(w.i) << 36) | (static_cast<std::uint64_t>(w.p) << 24) |
           (static_cast<std::uint64_t>(w.q) << 12) | w.j;
  }
  static std::uint64_t key2(TreeId t, std::uint32_t a, std::uint32_t b = 0) {
    return (static_cast<std::uint64_t>(t) << 32) | (static_cast<std::uint64_t>(a) << 16) | b;
  }
  template <class Map>
  static const typename Map::mapped_type* lookup(const Map& m, std::uint64_t k) {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  }

  void add(GlobalNode u, State x, std::uint32_t i, std::uint32_t j) {
    assert(i <= j && j <= n);
    const std::size_t c = cell(u, x, i, j);
    if (test(closed_bits, c)) return;
    set(closed_bits, c);
    ++node_counts[static_cast<std::size_t>(x)];
    ++total;
    agenda.push_back(NodeItem{u, x, i, j});
  }

  void add(const WrapItem& w) {
    assert(w.i <= w.p && w.p < w.q && w.q <= w.j && w.j <= n);
    if (!wrap_closed.insert(wrap_key(w)).second) return;
    ++wrap_counts[static_cast<std::size_t>(w.tag)];
    ++total;
    agenda.push_back(w);
  }

  bool done(GlobalNode u, State x, std::uint32_t i, std::uint32_t j) const {
    return test(done_bits, cell(u, x, i, j));
  }

  void seed() {
    if (seeded) return;
    seeded = true;
    for (std::uint32_t k = 0; k < n; ++k) {
      auto it = P.lexicon.find(tokens[k]);
      if (it == P.lexicon.end()) {
        if (!P.terminals.count(tokens[k])) throw UnknownToken(tokens[k]);
        continue;
      }
      for (GlobalNode u : it->second) {
        ++rules[R1a];
        add(u, State::T, k, k + 1);
      }
    }
    for (GlobalNode f : P.feet) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        ++rules[R1b];
        add(f, State::B, i, i);
      }
    }
  }

  bool pending() const { return agenda_head < agenda.size(); }

  bool step() {
    if (!pending()) return false;
    Item it;
    if (order == AgendaOrder::Fifo) {
      it = agenda[agenda_head++];
      if (agenda_head == agenda.size()) {
        agenda.clear();
        agenda_head = 0;
      }
    } else {
      it = agenda.back();
      agenda.pop_back();
    }
    if (auto* ni = std::get_if<NodeItem>(&it)) {
      process(*ni);
    } else {
      process(std::get<WrapItem>(it));
    }
    return true;
  }

  void process(const NodeItem& it) {
    const GlobalNode u = it.node;
    const State x = it.state;
    const std::uint32_t i = it.i, j = it.j;
    const auto& N = P.nodes[u];

    if (x == State::T) {
      if (N.parent >= 0) {
        const GlobalNode par = static_cast<GlobalNode>(N.parent);
        const auto& kids = P.nodes[par].children;
        if (kids.size() == 1) {
          ++rules[R1e];
          add(par, State::B, i, j);
        } else if (N.child_index == 0) {
          for (Pos e : ends_from(kids[1], State::T, j)) {
            ++rules[R1d];
            add(par, State::B, i, e);
          }
        } else {
          for (Pos s : starts_to(kids[0], State::T, i)) {
            ++rules[R1d];
            add(par, State::B, s, j);
          }
        }
      }
      for (GlobalNode h : N.subst_hosts) {
        ++rules[R1c];
        add(h, State::T, i, j);
      }
      for (GlobalNode h : N.left_hosts) {
        for (Pos e : ends_from(h, State::B, j)) {
          ++rules[R3a];
          add(h, State::M, i, e);
          add(h, State::T, i, e);
        }
      }
      for (GlobalNode h : N.right_hosts) {
        for (State hx : {State::B, State::M}) {
          for (Pos s : starts_to(h, hx, i)) {
            ++rules[R3b];
            add(h, State::T, s, j);
          }
        }
      }
    }

    if (x == State::B) {
      if (N.nil) {
        ++rules[R3c];
        add(u, State::T, i, j);
      }
      for (GlobalNode l : N.left_roots) {
        for (Pos s : starts_to(l, State::T, i)) {
          ++rules[R3a];
          add(u, State::M, s, j);
          add(u, State::T, s, j);
        }
      }
      for (TreeId b : N.wrapping) {
        if (const auto* v = lookup(full_by_pq, key2(b, i, j))) {
          for (const auto& [i2, j2] : *v) {
            assert(i < j);
            ++rules[R3d];
            add(u, State::T, i2, j2);
          }
        }
      }
    }
    if (x == State::B || x == State::M) {
      for (GlobalNode r : N.right_roots) {
        for (Pos e : ends_from(r, State::T, j)) {
          ++rules[R3b];
          add(u, State::T, i, e);
        }
      }
    }

    if (N.wrap_part) {
      const auto [b, kind] = *N.wrap_part;
      const auto& W = *P.wraps[b];
      if (kind == SplitKind::LD && x == State::B) {
        for (TreeId inner : W.allowed) {
          if (const auto* v = lookup(full_by_p, key2(inner, i))) {
            for (const auto& [i2, q, j2] : *v) {
              if (j < q) {
                ++rules[R2a];
                add(WrapItem{WrapTag::LD, b, i2, j, q, j2});
              }
            }
          }
        }
      } else if (kind == SplitKind::LD && x == State::T && W.nil) {
        for (std::uint32_t q = j + 1; q <= n; ++q) {
          for (Pos e : ends_from(W.rd, State::T, q)) {
            ++rules[R2e];
            add(WrapItem{WrapTag::RD, b, i, j, q, e});
          }
        }
      } else if (kind == SplitKind::RD && x == State::B) {
        if (const auto* v = lookup(ld_by_q, key2(b, j))) {
          for (const auto& [i2, p, j2] : *v) {
            if (p < i) {
              ++rules[R2b];
              add(WrapItem{WrapTag::RD, b, i2, p, i, j2});
            }
          }
        }
      } else if (kind == SplitKind::RD && x == State::T && W.nil) {
        for (std::uint32_t p = 0; p < i; ++p) {
          for (Pos s : starts_to(W.ld, State::T, p)) {
            ++rules[R2e];
            add(WrapItem{WrapTag::RD, b, s, p, i, j});
          }
        }
      } else if (kind == SplitKind::RU && x == State::T) {
        if (const auto* v = lookup(rd_by_j, key2(b, i))) {
          for (const auto& [i2, p, q] : *v) {
            ++rules[R2c];
            add(WrapItem{WrapTag::RU, b, i2, p, q, j});
          }
        }
      } else if (kind == SplitKind::LU && x == State::T) {
        if (const auto* v = lookup(ru_by_i, key2(b, j))) {
          for (const auto& [p, q, j2] : *v) {
            ++rules[R2d];
            add(WrapItem{WrapTag::Full, b, i, p, q, j2});
          }
        }
      }
    }

    set(done_bits, cell(u, x, i, j));
    const std::size_t ks = slot(u, x, i), ke = slot(u, x, j);
    start_data[ks * stride + start_len[ks]++] = static_cast<Pos>(j);
    end_data[ke * stride + end_len[ke]++] = static_cast<Pos>(i);
  }

  void process(const WrapItem& w) {
    const auto& W = *P.wraps[w.tree];
    const auto cast = [](std::uint32_t v) { return static_cast<Pos>(v); };
    switch (w.tag) {
      case WrapTag::LD:
        for (Pos s : starts_to(W.rd, State::B, w.q)) {
          if (s > w.p) {
            ++rules[R2b];
            add(WrapItem{WrapTag::RD, w.tree, w.i, w.p, s, w.j});
          }
        }
        ld_by_q[key2(w.tree, w.q)].push_back({cast(w.i), cast(w.p), cast(w.j)});
        break;
      case WrapTag::RD:
        for (Pos e : ends_from(W.ru, State::T, w.j)) {
          ++rules[R2c];
          add(WrapItem{WrapTag::RU, w.tree, w.i, w.p, w.q, e});
        }
        rd_by_j[key2(w.tree, w.j)].push_back({cast(w.i), cast(w.p), cast(w.q)});
        break;
      case WrapTag::RU:
        for (Pos s : starts_to(W.lu, State::T, w.i)) {
          ++rules[R2d];
          add(WrapItem{WrapTag::Full, w.tree, s, w.p, w.q, w.j});
        }
        ru_by_i[key2(w.tree, w.i)].push_back({cast(w.p), cast(w.q), cast(w.j)});
        break;
      case WrapTag::Full:
        for (TreeId user : W.users) {
          for (Pos e : ends_from(P.wraps[user]->ld, State::B, w.p)) {
            if (e < w.q) {
              ++rules[R2a];
              add(WrapItem{WrapTag::LD, user, w.i, e, w.q, w.j});
            }
          }
        }
        for (GlobalNode h : W.hosts) {
          if (done(h, State::B, w.p, w.q)) {
            ++rules[R3d];
            add(h, State::T, w.i, w.j);
          }
        }
        full_by_p[key2(w.tree, w.p)].push_back({cast(w.i), cast(w.q), cast(w.j)});
        full_by_pq[key2(w.tree, w.p, w.q)].push_back({cast(w.i), cast(w.j)});
        break;
    }
  }

  bool accepted() const {
    if (n == 0) return false;
    return std::any_of(P.accept_roots.begin(), P.accept_roots.end(), [&](GlobalNode r) {
      return test(closed_bits, cell(r, State::T, 0, n));
    });
  }

  bool contains(const Item& item) const {
    if (const auto* ni = std::get_if<NodeItem>(&item)) {
      if (ni->node >= P.nodes.size() || ni->i > ni->j || ni->j > n) return false;
      return test(closed_bits, cell(ni->node, ni->state, ni->i, ni->j));
    }
    const auto& w = std::get<WrapItem>(item);
    if (w.tree >= kMaxTrees || w.j > n || !(w.i <= w.p && w.p < w.q && w.q <= w.j)) return false;
    return wrap_closed.count(wrap_key(w)) > 0;
  }

  std::vector<Item> items() const {
    std::vector<Item> out;
    out.reserve(total);
    for (GlobalNode u = 0; u < P.nodes.size(); ++u) {
      for (State x : {State::B, State::M, State::T}) {
        for (std::uint32_t i = 0; i <= n; ++i) {
          for (std::uint32_t j = i; j <= n; ++j) {
            if (test(closed_bits, cell(u, x, i, j))) out.push_back(NodeItem{u, x, i, j});
          }
        }
      }
    }
    for (std::uint64_t k : wrap_closed) {
      WrapItem w;
      w.tag = static_cast<WrapTag>(k >> 62);
      w.tree = static_cast<TreeId>((k >> 48) & 0x3FFF);
      w.i = (k >> 36) & 0xFFF;
      w.p = (k >> 24) & 0xFFF;
      w.q = (k >> 12) & 0xFFF;
      w.j = k & 0xFFF;
      out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  RecognitionStats stats() const {
    RecognitionStats s;
    for (State x : {State::B, State::M, State::T}) {
      s.items_by_kind[std::string("node.") + to_string(x)] = node_counts[static_cast<std::size_t>(x)];
    }
    for (WrapTag t : {WrapTag::LD, WrapTag::RD, WrapTag::RU, WrapTag::Full}) {
      s.items_by_kind[std::string("wrap.") + to_string(t)] = wrap_counts[static_cast<std::size_t>(t)];
    }
    for (std::size_t r = 0; r < kRuleIds.size(); ++r) s.rule_applications[kRuleIds[r]] = rules[r];
    s.accepted = accepted();
    return s;
  }
};

Chart::Chart(const Recognizer& recognizer, std::vector<std::string> tokens, AgendaOrder order)
    : impl_(std::make_unique<Impl>(recognizer.program(), std::move(tokens), order)) {}
Chart::~Chart() = default;
Chart::Chart(Chart&&) noexcept = default;
Chart& Chart::operator=(Chart&&) noexcept = default;

void Chart::seed_axioms() { impl_->seed(); }
bool Chart::step() { return impl_->step(); }
void Chart::run() {
  impl_->seed();
  while (impl_->step()) {
  }
}
bool Chart::contains(const Item& item) const { return impl_->contains(item); }
bool Chart::closed() const { return impl_->seeded && !impl_->pending(); }
std::size_t Chart::size() const { return impl_->total; }
std::vector<Item> Chart::items() const { return impl_->items(); }
bool Chart::accepted() const { return impl_->accepted(); }
RecognitionStats Chart::stats() const { return impl_->stats(); }
std::size_t Chart::length() const { return impl_->n; }

Recognizer::Recognizer(TransformedGrammar tg) : program_(std::make_unique<Program>(std::move(tg))) {}
Recognizer::~Recognizer() = default;
Recognizer::Recognizer(Recognizer&&) noexcept = default;
Recognizer& Recognizer::operator=(Recognizer&&) noexcept = default;

const TransformedGrammar& Recognizer::grammar() const { return program_->tg; }

GlobalNode Recognizer::node(std::string_view tree_name, NodeId source) const {
  for (const auto& t : program_->trees) {
    if (t.name != tree_name) continue;
    for (GlobalNode id = t.first; id < t.last; ++id) {
      if (program_->nodes[id].source == source) return id;
    }
    throw Error("tree '" + std::string(tree_name) + "' has no copy of node " +
                std::to_string(source));
  }
  throw Error("no tree named '" + std::string(tree_name) + "'");
}

GlobalNode Recognizer::root(std::string_view tree_name) const {
  for (const auto& t : program_->trees) {
    if (t.name == tree_name) return t.root;
  }
  throw Error("no tree named '" + std::string(tree_name) + "'");
}

std::size_t Recognizer::node_count() const { return program_->nodes.size(); }

Chart Recognizer::chart(const std::vector<std::string>& tokens, AgendaOrder order) const {
  return Chart(*this, tokens, order);
}

RecognitionStats Recognizer::recognize(const std::vector<std::string>& tokens,
                                       AgendaOrder order) const {
  const auto start = std::chrono::steady_clock::now();
  Chart c(*this, tokens, order);
  c.run();
  RecognitionStats s = c.stats();
  s.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return s;
}

bool Recognizer::accepts(const std::vector<std::string>& tokens) const {
  Chart c(*this, tokens);
  c.run();
  return c.accepted();
}

std::string Recognizer::describe(const Item& item) const {
  if (const auto* ni = std::get_if<NodeItem>(&item)) {
    const auto& node = program_->nodes.at(ni->node);
    return "<" + node.label + "@" + program_->trees[node.tree].name + "#" +
           std::to_string(node.source) + "^" + to_string(ni->state) + ", " +
           std::to_string(ni->i) + ", " + std::to_string(ni->j) + ">";
  }
  const auto& w = std::get<WrapItem>(item);
  const std::string& name = program_->tg.base.tree(w.tree).name;
  const std::string head = w.tag == WrapTag::Full ? name : "[" + name + "," + to_string(w.tag) + "]";
  return "<" + head + ", " + std::to_string(w.i) + ", " + std::to_string(w.p) + ", " +
         std::to_string(w.q) + ", " + std::to_string(w.j) + ">";
}

Recognizer make_recognizer(const Grammar& grammar) {
  return Recognizer(build_transformed_grammar(normalize(grammar)));
}

bool closure_order_independent(const Recognizer& recognizer,
                               const std::vector<std::string>& tokens) {
  Chart fifo = recognizer.chart(tokens, AgendaOrder::Fifo);
  Chart lifo = recognizer.chart(tokens, AgendaOrder::Lifo);
  fifo.run();
  lifo.run();
  return fifo.items() == lifo.items();
}

}  // namespace tag5
