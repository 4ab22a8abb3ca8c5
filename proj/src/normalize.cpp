#include "tag5/normalize.hpp"

#include <algorithm>
#include <functional>

#include "tag5/restriction.hpp"

namespace tag5 {

bool is_epsilon_label(const std::string& label) {
  return label.empty() || label == "\xCE\xB5" || label == "<eps>";
}

namespace {

NodeId add_node(Grammar& g, TreeNode node) {
  g.nodes.push_back(std::move(node));
  return static_cast<NodeId>(g.nodes.size() - 1);
}

TreeNode synthetic_node(const std::string& label, TreeId tree, std::vector<NodeId> children) {
  TreeNode n;
  n.label = label;
  n.role = NodeRole::Internal;
  n.children = std::move(children);
  n.adj = AdjConstraint::null();
  n.tree = tree;
  n.synthetic = true;
  return n;
}

bool contains(const Grammar& g, NodeId root, NodeId target) {
  if (root == target) return true;
  for (NodeId c : g.node(root).children) {
    if (contains(g, c, target)) return true;
  }
  return false;
}

void binarize_node(Grammar& g, NodeId id, std::optional<NodeId> foot) {
  const std::string label = g.nodes[id].label;
  const TreeId tree = g.nodes[id].tree;
  auto group = [&](std::vector<NodeId> members) -> NodeId {
    if (members.size() == 1) return members.front();
    return add_node(g, synthetic_node(label, tree, std::move(members)));
  };

  std::vector<NodeId> kids = g.nodes[id].children;
  if (kids.size() > 2) {
    std::optional<std::size_t> spine;
    if (foot) {
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (contains(g, kids[i], *foot)) spine = i;
      }
    }
    const std::size_t k = kids.size();
    std::vector<NodeId> folded;
    if (!spine || *spine == 0) {
      folded = {kids[0], group({kids.begin() + 1, kids.end()})};
    } else if (*spine == k - 1) {
      folded = {group({kids.begin(), kids.end() - 1}), kids[k - 1]};
    } else {
      const std::size_t s = *spine;
      NodeId left = group({kids.begin(), kids.begin() + s});
      NodeId right = group({kids.begin() + s + 1, kids.end()});
      NodeId carrier = add_node(g, synthetic_node(label, tree, {kids[s], right}));
      folded = {left, carrier};
    }
    g.nodes[id].children = folded;
  }
  // Copy: recursion may reallocate the node table.
  const std::vector<NodeId> now = g.nodes[id].children;
  for (NodeId c : now) binarize_node(g, c, foot);
}

Grammar renumber(const Grammar& g) {
  Grammar out;
  out.start = g.start;
  out.trees = g.trees;
  std::vector<NodeId> remap(g.nodes.size(), 0);
  for (TreeId t = 0; t < g.trees.size(); ++t) {
    for (NodeId old : g.preorder(t)) {
      remap[old] = static_cast<NodeId>(out.nodes.size());
      out.nodes.push_back(g.nodes[old]);
    }
  }
  for (auto& n : out.nodes) {
    for (auto& c : n.children) c = remap[c];
  }
  for (auto& tree : out.trees) {
    tree.root = remap[tree.root];
    if (tree.foot) tree.foot = remap[*tree.foot];
    if (tree.wrapping_node) tree.wrapping_node = remap[*tree.wrapping_node];
  }
  return out;
}

bool valid_designation(const Grammar& g, TreeId t, NodeId w) {
  const auto& tree = g.tree(t);
  if (w == tree.root || w == *tree.foot) return false;
  if (g.node(w).role != NodeRole::Internal) return false;
  const auto spine = compute_spine(g, t);
  return std::find(spine.begin(), spine.end(), w) != spine.end();
}

}  // namespace

Grammar binarize(const Grammar& grammar) {
  for (const auto& n : grammar.nodes) {
    if (n.role == NodeRole::Terminal && is_epsilon_label(n.label)) {
      throw EpsilonLeaf("tree '" + grammar.tree(n.tree).name +
                        "' has an empty leaf; empty leaves are not supported");
    }
  }
  Grammar g = grammar;
  for (TreeId t = 0; t < g.trees.size(); ++t) {
    binarize_node(g, g.trees[t].root, g.trees[t].foot);
  }
  return renumber(g);
}

Grammar normalize(const Grammar& grammar) {
  Grammar g = binarize(grammar);
  const auto classes = classify_all(g);
  const auto parents = g.parents();

  for (TreeId t = 0; t < g.trees.size(); ++t) {
    if (classes[t] != TreeClass::Wrapping) continue;
    auto& tree = g.trees[t];
    const auto eligible = find_wrapping_node(g, t);

    if (tree.wrapping_node) {
      if (!valid_designation(g, t, *tree.wrapping_node)) {
        throw GrammarError("designated wrapping node of '" + tree.name +
                           "' is not an internal spine node");
      }
      if (eligible && *eligible != *tree.wrapping_node) {
        throw GrammarError("designated wrapping node of '" + tree.name +
                           "' differs from the node that admits wrapping trees");
      }
      continue;
    }

    const NodeId foot = *tree.foot;
    if (!eligible) {
      const NodeId parent = *parents[foot];
      NodeId carrier = add_node(g, synthetic_node(g.nodes[foot].label, t, {foot}));
      for (auto& c : g.nodes[parent].children) {
        if (c == foot) c = carrier;
      }
      tree.wrapping_node = carrier;
    } else if (*eligible == tree.root) {
      const NodeId old_root = tree.root;
      tree.root = add_node(g, synthetic_node(g.nodes[old_root].label, t, {old_root}));
      tree.wrapping_node = old_root;
    } else if (*eligible == foot) {
      TreeNode new_foot = synthetic_node(g.nodes[foot].label, t, {});
      new_foot.role = NodeRole::Foot;
      const NodeId nf = add_node(g, std::move(new_foot));
      g.nodes[foot].role = NodeRole::Internal;
      g.nodes[foot].children = {nf};
      tree.foot = nf;
      tree.wrapping_node = foot;
    } else {
      tree.wrapping_node = *eligible;
    }
  }
  return renumber(g);
}

}  // namespace tag5
