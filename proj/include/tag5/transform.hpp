#ifndef TAG5_TRANSFORM_HPP
#define TAG5_TRANSFORM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tag5/grammar.hpp"

namespace tag5 {

enum class SplitKind { L, R, LU, RU, LD, RD };
enum class Side { Left, Right };

const char* to_string(SplitKind kind);
Side side_of(SplitKind kind);

/// Adjunction constraint of a node in a derived tree, with the allowed
/// auxiliary trees (ids of the original grammar) partitioned by class.
struct EffectiveAdj {
  std::vector<TreeId> left;
  std::vector<TreeId> right;
  std::vector<TreeId> wrapping;
  bool nil = true;

  bool empty() const { return left.empty() && right.empty() && wrapping.empty(); }
  friend bool operator==(const EffectiveAdj&, const EffectiveAdj&) = default;
};

using LocalId = std::uint32_t;

struct CompiledNode {
  NodeId source = 0;  // node of the normalized grammar
  NodeRole role = NodeRole::Internal;
  std::vector<LocalId> children;
  EffectiveAdj adj;
  bool on_spine = false;

  friend bool operator==(const CompiledNode&, const CompiledNode&) = default;
};

/// A tree handed to the recognizer: an initial tree, a left/right copy, or
/// one quarter of a wrapping tree. Nodes keep the identity of the source node
/// they were copied from.
struct CompiledTree {
  std::string name;
  TreeId source = 0;
  std::vector<CompiledNode> nodes;
  LocalId root = 0;
  std::optional<LocalId> foot;

  /// Terminal labels of the leaves, left to right, with the foot as "*".
  std::vector<std::string> yield(const Grammar& base) const;
  /// Local ids on the root-to-foot path.
  std::vector<LocalId> spine() const;

  friend bool operator==(const CompiledTree&, const CompiledTree&) = default;
};

struct SplitTree {
  TreeId source = 0;
  SplitKind kind = SplitKind::L;
  CompiledTree tree;

  Side side() const { return side_of(kind); }
  friend bool operator==(const SplitTree&, const SplitTree&) = default;
};

/// Trees admitted at the wrapping node of a wrapping tree.
struct WrapEntry {
  std::vector<TreeId> allowed;
  bool nil = true;
  friend bool operator==(const WrapEntry&, const WrapEntry&) = default;
};

struct TransformedGrammar {
  Grammar base;  // normalized
  std::vector<std::optional<TreeClass>> classes;
  std::vector<CompiledTree> initials;
  std::vector<SplitTree> split_trees;
  std::map<TreeId, WrapEntry> wrap_table;

  /// Index into split_trees of the given part of an auxiliary tree.
  std::optional<std::size_t> find(TreeId source, SplitKind kind) const;
  const SplitTree& part(TreeId source, SplitKind kind) const;

  friend bool operator==(const TransformedGrammar&, const TransformedGrammar&) = default;
};

/// Splits a normalized wrapping tree at its wrapping node. Returned in the
/// order LU, RU, LD, RD. Constraints are inherited unfiltered.
std::array<SplitTree, 4> split_wrapping_tree(const Grammar& grammar, TreeId tree, NodeId wrap_node);

/// Builds the auxiliary set A' from a normalized, restriction-valid grammar:
/// left and right trees are copied, wrapping trees are split in four. On the
/// spine of a left-side tree only left trees (and nil) stay admissible, on the
/// spine of a right-side tree only right trees; the feet of LU/RU admit
/// nothing. Throws RestrictionViolation on invalid grammars.
TransformedGrammar build_transformed_grammar(const Grammar& grammar);

/// Dumps A' (and the initial trees) in the grammar file layout, for inspection.
std::string dump_transformed(const TransformedGrammar& tg);

}  // namespace tag5

#endif  // TAG5_TRANSFORM_HPP
