#include "tag5/restriction.hpp"

#include <algorithm>

namespace tag5 {

std::vector<std::optional<TreeClass>> classify_all(const Grammar& grammar) {
  std::vector<std::optional<TreeClass>> out(grammar.trees.size());
  for (TreeId t : grammar.auxiliary_trees()) out[t] = classify_tree(grammar, t);
  return out;
}

namespace {

bool admits_wrapping(const AdjConstraint& adj,
                     const std::vector<std::optional<TreeClass>>& classes) {
  return std::any_of(adj.allowed.begin(), adj.allowed.end(),
                     [&](TreeId t) { return classes[t] == TreeClass::Wrapping; });
}

std::vector<NodeId> wrapping_eligible(const Grammar& grammar, TreeId tree,
                                      const std::vector<std::optional<TreeClass>>& classes) {
  std::vector<NodeId> out;
  for (NodeId id : compute_spine(grammar, tree)) {
    if (admits_wrapping(grammar.node(id).adj, classes)) out.push_back(id);
  }
  return out;
}

}  // namespace

std::optional<NodeId> find_wrapping_node(const Grammar& grammar, TreeId tree) {
  const auto classes = classify_all(grammar);
  if (classes.at(tree) != TreeClass::Wrapping) {
    throw GrammarError("'" + grammar.tree(tree).name + "' is not a wrapping tree");
  }
  const auto eligible = wrapping_eligible(grammar, tree, classes);
  if (eligible.size() > 1) {
    throw RestrictionViolation("wrapping tree '" + grammar.tree(tree).name + "' has " +
                               std::to_string(eligible.size()) +
                               " spine nodes that admit wrapping trees");
  }
  if (eligible.empty()) return std::nullopt;
  return eligible.front();
}

std::vector<Violation> validate_restriction(const Grammar& grammar) {
  std::vector<Violation> out;
  const auto classes = classify_all(grammar);

  for (TreeId t : grammar.auxiliary_trees()) {
    const auto& tree = grammar.tree(t);
    const auto spine = compute_spine(grammar, t);
    const TreeClass cls = *classes[t];

    if (cls == TreeClass::Wrapping) {
      const auto eligible = wrapping_eligible(grammar, t, classes);
      if (eligible.size() > 1) {
        for (NodeId id : eligible) {
          out.push_back({Severity::Error, 1, tree.name, id,
                         "spine node '" + grammar.node(id).label +
                             "' admits wrapping trees; " + std::to_string(eligible.size()) +
                             " such nodes on this spine"});
        }
      }
    } else {
      const TreeClass other = cls == TreeClass::Left ? TreeClass::Right : TreeClass::Left;
      for (NodeId id : spine) {
        const auto& node = grammar.node(id);
        for (TreeId a : node.adj.allowed) {
          if (classes[a] == TreeClass::Wrapping) {
            out.push_back({Severity::Error, 2, tree.name, id,
                           "spine of a " + std::string(to_string(cls)) +
                               " tree admits wrapping tree '" + grammar.tree(a).name + "'"});
          }
        }
        std::vector<std::string> missing;
        bool names_other_side = false;
        for (TreeId a : grammar.auxiliary_trees()) {
          if (classes[a] != other || grammar.root_label(a) != node.label) continue;
          if (node.adj.allows(a)) {
            names_other_side = true;
          } else {
            missing.push_back(grammar.tree(a).name);
          }
        }
        if (!missing.empty() || !node.adj.allows_nil) {
          std::string msg = "spine of a " + std::string(to_string(cls)) + " tree constrains " +
                            to_string(other) + " trees:";
          for (const auto& m : missing) msg += " '" + m + "' not allowed;";
          if (!node.adj.allows_nil) msg += " nil not allowed;";
          if (!names_other_side && node.adj.allows_nil) {
            msg += " (no " + std::string(to_string(other)) +
                   " tree is named here, which the weaker reading of this condition accepts)";
          }
          out.push_back({Severity::Error, 2, tree.name, id, msg});
        }
      }
    }

    if (tree.foot && admits_wrapping(grammar.node(*tree.foot).adj, classes)) {
      out.push_back({Severity::Warning, 0, tree.name, *tree.foot,
                     "foot node admits a wrapping tree; normalization must move the "
                     "wrapping node off the foot"});
    }
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::Error; });
}

std::string describe(const Violation& v) {
  std::string out = v.severity == Severity::Error ? "error" : "warning";
  if (v.condition) out += " (condition " + std::to_string(v.condition) + ")";
  out += ": tree '" + v.tree + "', node " + std::to_string(v.node) + ": " + v.message;
  return out;
}

}  // namespace tag5
