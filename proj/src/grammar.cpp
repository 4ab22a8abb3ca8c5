#include "tag5/grammar.hpp"

#include <algorithm>

namespace tag5 {

const char* to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Internal: return "internal";
    case NodeRole::Terminal: return "terminal";
    case NodeRole::Foot: return "foot";
    case NodeRole::Substitution: return "substitution";
  }
  return "?";
}

const char* to_string(TreeKind kind) {
  return kind == TreeKind::Initial ? "initial" : "auxiliary";
}

const char* to_string(TreeClass cls) {
  switch (cls) {
    case TreeClass::Left: return "left";
    case TreeClass::Right: return "right";
    case TreeClass::Wrapping: return "wrapping";
  }
  return "?";
}

bool AdjConstraint::allows(TreeId tree) const {
  return std::binary_search(allowed.begin(), allowed.end(), tree);
}

std::optional<TreeId> Grammar::find_tree(std::string_view name) const {
  for (TreeId t = 0; t < trees.size(); ++t) {
    if (trees[t].name == name) return t;
  }
  return std::nullopt;
}

TreeId Grammar::tree_id(std::string_view name) const {
  if (auto id = find_tree(name)) return *id;
  throw GrammarError("unresolved tree name '" + std::string(name) + "'");
}

std::vector<TreeId> Grammar::initial_trees() const {
  std::vector<TreeId> out;
  for (TreeId t = 0; t < trees.size(); ++t) {
    if (!trees[t].is_auxiliary()) out.push_back(t);
  }
  return out;
}

std::vector<TreeId> Grammar::auxiliary_trees() const {
  std::vector<TreeId> out;
  for (TreeId t = 0; t < trees.size(); ++t) {
    if (trees[t].is_auxiliary()) out.push_back(t);
  }
  return out;
}

std::set<std::string> Grammar::terminals() const {
  std::set<std::string> out;
  for (const auto& n : nodes) {
    if (n.role == NodeRole::Terminal) out.insert(n.label);
  }
  return out;
}

std::set<std::string> Grammar::nonterminals() const {
  std::set<std::string> out;
  for (const auto& n : nodes) {
    if (n.role != NodeRole::Terminal) out.insert(n.label);
  }
  return out;
}

std::vector<NodeId> Grammar::preorder(TreeId t) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{tree(t).root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& kids = node(id).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<std::optional<NodeId>> Grammar::parents() const {
  std::vector<std::optional<NodeId>> out(nodes.size());
  for (NodeId id = 0; id < nodes.size(); ++id) {
    for (NodeId c : nodes[id].children) out[c] = id;
  }
  return out;
}

GrammarSize grammar_size(const Grammar& grammar) {
  GrammarSize size;
  for (const auto& n : grammar.nodes) {
    // Terminal and substitution leaves carry no adjunction constraint.
    const bool adjoinable = n.role == NodeRole::Internal || n.role == NodeRole::Foot;
    size.value += 1 + (adjoinable ? n.adj.size() : 0);
  }
  return size;
}

std::vector<NodeId> compute_spine(const Grammar& grammar, TreeId t) {
  const auto& tree = grammar.tree(t);
  if (!tree.is_auxiliary() || !tree.foot) {
    throw GrammarError("spine requested for initial tree '" + tree.name + "'");
  }
  // Depth-first search for the foot, keeping the current path.
  std::vector<NodeId> path;
  auto search = [&](auto&& self, NodeId id) -> bool {
    path.push_back(id);
    if (id == *tree.foot) return true;
    for (NodeId c : grammar.node(id).children) {
      if (self(self, c)) return true;
    }
    path.pop_back();
    return false;
  };
  if (!search(search, tree.root)) {
    throw GrammarError("foot of '" + tree.name + "' is not reachable from its root");
  }
  return path;
}

TreeClass classify_tree(const Grammar& grammar, TreeId t) {
  const auto& tree = grammar.tree(t);
  const auto spine = compute_spine(grammar, t);
  if (spine.size() != 2) return TreeClass::Wrapping;

  NodeId leftmost = tree.root;
  while (!grammar.node(leftmost).is_leaf()) leftmost = grammar.node(leftmost).children.front();
  NodeId rightmost = tree.root;
  while (!grammar.node(rightmost).is_leaf()) rightmost = grammar.node(rightmost).children.back();

  if (leftmost == *tree.foot) return TreeClass::Right;
  if (rightmost == *tree.foot) return TreeClass::Left;
  return TreeClass::Wrapping;
}

NodeId node_at_path(const Grammar& grammar, TreeId t, const std::vector<std::size_t>& path) {
  NodeId id = grammar.tree(t).root;
  for (std::size_t step : path) {
    const auto& kids = grammar.node(id).children;
    if (step >= kids.size()) throw GrammarError("path leaves tree '" + grammar.tree(t).name + "'");
    id = kids[step];
  }
  return id;
}

namespace {

void render_node(const Grammar& g, NodeId id, std::string& out) {
  const auto& n = g.node(id);
  out += n.label;
  if (n.role == NodeRole::Foot) out += '*';
  if (n.role == NodeRole::Substitution) out += "\xE2\x86\x93";  // down arrow
  if (n.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ',';
    render_node(g, n.children[i], out);
  }
  out += ')';
}

}  // namespace

std::string render_tree(const Grammar& grammar, TreeId tree) {
  std::string out;
  render_node(grammar, grammar.tree(tree).root, out);
  return out;
}

}  // namespace tag5
