#ifndef TAG5_GRAMMAR_HPP
#define TAG5_GRAMMAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tag5 {

using NodeId = std::uint32_t;
using TreeId = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed grammar text or a structurally invalid grammar.
class GrammarError : public Error {
 public:
  using Error::Error;
};

/// A grammar outside the restricted class (more than one wrapping node, ...).
class RestrictionViolation : public Error {
 public:
  using Error::Error;
};

/// A leaf labeled with the empty string.
class EpsilonLeaf : public GrammarError {
 public:
  using GrammarError::GrammarError;
};

/// Input token that is not a terminal symbol of the grammar.
class UnknownToken : public Error {
 public:
  explicit UnknownToken(const std::string& token)
      : Error("unknown token '" + token + "'"), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

enum class NodeRole { Internal, Terminal, Foot, Substitution };
enum class TreeKind { Initial, Auxiliary };
enum class TreeClass { Left, Right, Wrapping };

const char* to_string(NodeRole role);
const char* to_string(TreeKind kind);
const char* to_string(TreeClass cls);

/// Selective adjunction constraint: the auxiliary trees allowed at a node,
/// plus whether adjunction is optional there.
struct AdjConstraint {
  std::vector<TreeId> allowed;  // sorted, unique
  bool allows_nil = true;

  /// No adjunction possible, nothing required.
  static AdjConstraint null() { return AdjConstraint{{}, true}; }

  bool allows(TreeId tree) const;
  bool is_null() const { return allowed.empty() && allows_nil; }
  /// |Adj(N)|: allowed trees plus one for nil.
  std::size_t size() const { return allowed.size() + (allows_nil ? 1 : 0); }

  friend bool operator==(const AdjConstraint&, const AdjConstraint&) = default;
};

struct TreeNode {
  std::string label;
  NodeRole role = NodeRole::Internal;
  std::vector<NodeId> children;
  AdjConstraint adj;
  std::vector<TreeId> subst;  // initial trees substitutable here (role == Substitution)
  TreeId tree = 0;            // owning elementary tree
  bool synthetic = false;     // introduced by normalization

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct ElementaryTree {
  std::string name;
  TreeKind kind = TreeKind::Initial;
  NodeId root = 0;
  std::optional<NodeId> foot;
  // Set by normalization on wrapping trees.
  std::optional<NodeId> wrapping_node;

  bool is_auxiliary() const { return kind == TreeKind::Auxiliary; }

  friend bool operator==(const ElementaryTree&, const ElementaryTree&) = default;
};

/// A TAG (N, Sigma, I, A, S). Nodes of all trees live in one table; node ids
/// are unique within the grammar. Immutable once built.
struct Grammar {
  std::string start;
  std::vector<TreeNode> nodes;
  std::vector<ElementaryTree> trees;

  const TreeNode& node(NodeId id) const { return nodes.at(id); }
  const ElementaryTree& tree(TreeId id) const { return trees.at(id); }
  const std::string& root_label(TreeId id) const { return node(tree(id).root).label; }

  std::optional<TreeId> find_tree(std::string_view name) const;
  /// Throws GrammarError when the name does not resolve.
  TreeId tree_id(std::string_view name) const;

  std::vector<TreeId> initial_trees() const;
  std::vector<TreeId> auxiliary_trees() const;

  std::set<std::string> terminals() const;
  std::set<std::string> nonterminals() const;

  /// Nodes of one tree, parents before children, children left to right.
  std::vector<NodeId> preorder(TreeId tree) const;
  /// Parent of every node of the grammar (nullopt for roots).
  std::vector<std::optional<NodeId>> parents() const;

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

/// |G| = sum over all nodes of (1 + |Adj(N)|).
struct GrammarSize {
  std::size_t value = 0;
  friend auto operator<=>(const GrammarSize&, const GrammarSize&) = default;
};

GrammarSize grammar_size(const Grammar& grammar);

/// Root-to-foot path of an auxiliary tree, both ends included.
std::vector<NodeId> compute_spine(const Grammar& grammar, TreeId tree);

TreeClass classify_tree(const Grammar& grammar, TreeId tree);

/// Node reached by following child indices from the root of a tree.
NodeId node_at_path(const Grammar& grammar, TreeId tree, const std::vector<std::size_t>& path);

/// Bracketed rendering such as S(a,S(b,S*,c),d); handy in tests and messages.
std::string render_tree(const Grammar& grammar, TreeId tree);

}  // namespace tag5

#endif  // TAG5_GRAMMAR_HPP
