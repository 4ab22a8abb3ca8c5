#include "tag5/transform.hpp"

#include <algorithm>

#include "json.hpp"
#include "tag5/restriction.hpp"

namespace tag5 {

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::L: return "L";
    case SplitKind::R: return "R";
    case SplitKind::LU: return "LU";
    case SplitKind::RU: return "RU";
    case SplitKind::LD: return "LD";
    case SplitKind::RD: return "RD";
  }
  return "?";
}

Side side_of(SplitKind kind) {
  switch (kind) {
    case SplitKind::L:
    case SplitKind::LU:
    case SplitKind::LD:
      return Side::Left;
    default:
      return Side::Right;
  }
}

std::vector<std::string> CompiledTree::yield(const Grammar& base) const {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, LocalId id) -> void {
    const auto& n = nodes[id];
    if (foot && id == *foot) {
      out.push_back("*");
      return;
    }
    if (n.role == NodeRole::Terminal) out.push_back(base.node(n.source).label);
    if (n.role == NodeRole::Substitution) out.push_back(base.node(n.source).label + "\xE2\x86\x93");
    for (LocalId c : n.children) self(self, c);
  };
  walk(walk, root);
  return out;
}

std::vector<LocalId> CompiledTree::spine() const {
  std::vector<LocalId> out;
  if (!foot) return out;
  LocalId id = root;
  out.push_back(id);
  while (id != *foot) {
    const auto& kids = nodes[id].children;
    auto it = std::find_if(kids.begin(), kids.end(),
                           [&](LocalId c) { return nodes[c].on_spine; });
    id = *it;
    out.push_back(id);
  }
  return out;
}

std::optional<std::size_t> TransformedGrammar::find(TreeId source, SplitKind kind) const {
  for (std::size_t i = 0; i < split_trees.size(); ++i) {
    if (split_trees[i].source == source && split_trees[i].kind == kind) return i;
  }
  return std::nullopt;
}

const SplitTree& TransformedGrammar::part(TreeId source, SplitKind kind) const {
  auto idx = find(source, kind);
  if (!idx) {
    throw Error("no part " + std::string(to_string(kind)) + " for tree '" +
                base.tree(source).name + "'");
  }
  return split_trees[*idx];
}

namespace {

EffectiveAdj partition(const AdjConstraint& adj,
                       const std::vector<std::optional<TreeClass>>& classes) {
  EffectiveAdj out;
  out.nil = adj.allows_nil;
  for (TreeId t : adj.allowed) {
    switch (*classes[t]) {
      case TreeClass::Left: out.left.push_back(t); break;
      case TreeClass::Right: out.right.push_back(t); break;
      case TreeClass::Wrapping: out.wrapping.push_back(t); break;
    }
  }
  return out;
}

struct CopySpec {
  std::vector<NodeId> spine;       // spine of the source tree
  std::optional<NodeId> cut;       // becomes the foot; its descendants are dropped
  std::optional<Side> keep_side;   // on spine nodes, keep only this side of the spine child
};

class Copier {
 public:
  Copier(const Grammar& g, const std::vector<std::optional<TreeClass>>& classes,
         const CopySpec& spec)
      : g_(g), classes_(classes), spec_(spec) {}

  LocalId copy(CompiledTree& out, NodeId id) const {
    const auto& src = g_.node(id);
    const bool on_spine = std::find(spec_.spine.begin(), spec_.spine.end(), id) != spec_.spine.end();
    const LocalId local = static_cast<LocalId>(out.nodes.size());
    out.nodes.emplace_back();
    CompiledNode node;
    node.source = id;
    node.role = src.role;
    node.adj = partition(src.adj, classes_);
    node.on_spine = on_spine;

    if (spec_.cut && id == *spec_.cut) {
      node.role = NodeRole::Foot;
      out.foot = local;
    } else {
      if (src.role == NodeRole::Foot) out.foot = local;
      std::vector<NodeId> kids = src.children;
      if (on_spine && spec_.keep_side && !kids.empty()) {
        auto s = std::find_if(kids.begin(), kids.end(), [&](NodeId c) {
          return std::find(spec_.spine.begin(), spec_.spine.end(), c) != spec_.spine.end();
        });
        if (s != kids.end()) {
          if (*spec_.keep_side == Side::Left) {
            kids.erase(s + 1, kids.end());
          } else {
            kids.erase(kids.begin(), s);
          }
        }
      }
      for (NodeId c : kids) {
        LocalId lc = copy(out, c);
        node.children.push_back(lc);
      }
    }
    out.nodes[local] = std::move(node);
    return local;
  }

 private:
  const Grammar& g_;
  const std::vector<std::optional<TreeClass>>& classes_;
  const CopySpec& spec_;
};

CompiledTree compile(const Grammar& g, const std::vector<std::optional<TreeClass>>& classes,
                     TreeId source, NodeId start, const CopySpec& spec, std::string name) {
  CompiledTree out;
  out.name = std::move(name);
  out.source = source;
  Copier copier(g, classes, spec);
  out.root = copier.copy(out, start);
  return out;
}

void restrict_spine(CompiledTree& tree, Side side) {
  for (auto& n : tree.nodes) {
    if (!n.on_spine) continue;
    n.adj.wrapping.clear();
    if (side == Side::Left) {
      n.adj.right.clear();
    } else {
      n.adj.left.clear();
    }
  }
}

}  // namespace

std::array<SplitTree, 4> split_wrapping_tree(const Grammar& g, TreeId t, NodeId wrap_node) {
  const auto classes = classify_all(g);
  const auto& tree = g.tree(t);
  if (classes.at(t) != TreeClass::Wrapping) {
    throw GrammarError("'" + tree.name + "' is not a wrapping tree");
  }
  const auto spine = compute_spine(g, t);
  if (wrap_node == tree.root || wrap_node == *tree.foot ||
      std::find(spine.begin(), spine.end(), wrap_node) == spine.end()) {
    throw GrammarError("wrapping node of '" + tree.name + "' must be an internal spine node");
  }
  for (NodeId id : spine) {
    if (g.node(id).children.size() > 2) {
      throw GrammarError("'" + tree.name + "' is not binary");
    }
  }

  auto make = [&](SplitKind kind, NodeId start, std::optional<NodeId> cut, Side side) {
    CopySpec spec{spine, cut, side};
    return SplitTree{t, kind,
                     compile(g, classes, t, start, spec, tree.name + "." + to_string(kind))};
  };
  return {make(SplitKind::LU, tree.root, wrap_node, Side::Left),
          make(SplitKind::RU, tree.root, wrap_node, Side::Right),
          make(SplitKind::LD, wrap_node, std::nullopt, Side::Left),
          make(SplitKind::RD, wrap_node, std::nullopt, Side::Right)};
}

TransformedGrammar build_transformed_grammar(const Grammar& grammar) {
  const auto violations = validate_restriction(grammar);
  if (has_errors(violations)) {
    std::string msg = "grammar violates the adjunction restriction:";
    for (const auto& v : violations) {
      if (v.severity == Severity::Error) msg += "\n  " + describe(v);
    }
    throw RestrictionViolation(msg);
  }

  TransformedGrammar tg;
  tg.base = grammar;
  tg.classes = classify_all(grammar);
  const auto& g = tg.base;

  for (const auto& n : g.nodes) {
    if (n.children.size() > 2) {
      throw GrammarError("grammar is not normalized: tree '" + g.tree(n.tree).name +
                         "' has a node with more than two children");
    }
  }

  for (TreeId t : g.initial_trees()) {
    tg.initials.push_back(compile(g, tg.classes, t, g.tree(t).root, CopySpec{}, g.tree(t).name));
  }

  for (TreeId t : g.auxiliary_trees()) {
    const auto& tree = g.tree(t);
    const TreeClass cls = *tg.classes[t];
    if (cls != TreeClass::Wrapping) {
      const SplitKind kind = cls == TreeClass::Left ? SplitKind::L : SplitKind::R;
      CopySpec spec{compute_spine(g, t), std::nullopt, std::nullopt};
      SplitTree st{t, kind, compile(g, tg.classes, t, tree.root, spec,
                                    tree.name + "." + to_string(kind))};
      restrict_spine(st.tree, st.side());
      tg.split_trees.push_back(std::move(st));
      continue;
    }

    if (!tree.wrapping_node) {
      throw GrammarError("grammar is not normalized: wrapping tree '" + tree.name +
                         "' has no wrapping node");
    }
    const NodeId w = *tree.wrapping_node;
    for (auto& part : split_wrapping_tree(g, t, w)) {
      restrict_spine(part.tree, part.side());
      if (part.kind == SplitKind::LU || part.kind == SplitKind::RU) {
        auto& foot = part.tree.nodes[*part.tree.foot];
        foot.adj = EffectiveAdj{};
      }
      tg.split_trees.push_back(std::move(part));
    }
    const EffectiveAdj at_w = partition(g.node(w).adj, tg.classes);
    tg.wrap_table[t] = WrapEntry{at_w.wrapping, at_w.nil};
  }
  return tg;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string part_name(const TransformedGrammar& tg, TreeId t) {
  const auto& name = tg.base.tree(t).name;
  switch (*tg.classes[t]) {
    case TreeClass::Left: return name + ".L";
    case TreeClass::Right: return name + ".R";
    case TreeClass::Wrapping: return name;
  }
  return name;
}

ordered_json node_json(const TransformedGrammar& tg, const CompiledTree& tree, LocalId id) {
  const auto& n = tree.nodes[id];
  const auto& src = tg.base.node(n.source);
  ordered_json j;
  j["label"] = src.label;
  if (n.role == NodeRole::Terminal) {
    j["terminal"] = true;
    return j;
  }
  if (n.role == NodeRole::Substitution) {
    ordered_json names = ordered_json::array();
    for (TreeId t : src.subst) names.push_back(tg.base.tree(t).name);
    j["subst"] = names;
    return j;
  }
  if (tree.foot && id == *tree.foot) j["foot"] = true;
  ordered_json allowed = ordered_json::array();
  for (const auto* group : {&n.adj.left, &n.adj.right, &n.adj.wrapping}) {
    for (TreeId t : *group) allowed.push_back(part_name(tg, t));
  }
  j["adj"] = ordered_json{{"allowed", allowed}, {"nil", n.adj.nil}};
  if (!n.children.empty()) {
    ordered_json kids = ordered_json::array();
    for (LocalId c : n.children) kids.push_back(node_json(tg, tree, c));
    j["children"] = kids;
  }
  return j;
}

}  // namespace

std::string dump_transformed(const TransformedGrammar& tg) {
  ordered_json doc;
  doc["start"] = tg.base.start;
  ordered_json trees = ordered_json::array();
  for (const auto& tree : tg.initials) {
    trees.push_back(ordered_json{
        {"name", tree.name}, {"kind", "initial"}, {"root", node_json(tg, tree, tree.root)}});
  }
  for (const auto& st : tg.split_trees) {
    trees.push_back(ordered_json{{"name", st.tree.name},
                                 {"kind", "auxiliary"},
                                 {"source", tg.base.tree(st.source).name},
                                 {"part", to_string(st.kind)},
                                 {"root", node_json(tg, st.tree, st.tree.root)}});
  }
  doc["trees"] = trees;
  ordered_json wrap = ordered_json::object();
  for (const auto& [t, entry] : tg.wrap_table) {
    ordered_json allowed = ordered_json::array();
    for (TreeId a : entry.allowed) allowed.push_back(tg.base.tree(a).name);
    wrap[tg.base.tree(t).name] = ordered_json{{"allowed", allowed}, {"nil", entry.nil}};
  }
  doc["wrap_table"] = wrap;
  return doc.dump(2) + "\n";
}

}  // namespace tag5
