#ifndef TAG5_RESTRICTION_HPP
#define TAG5_RESTRICTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tag5/grammar.hpp"

namespace tag5 {

/// Class of every auxiliary tree, indexed by TreeId (nullopt for initial trees).
std::vector<std::optional<TreeClass>> classify_all(const Grammar& grammar);

/// The unique spine node of a wrapping tree that admits some wrapping tree.
/// Throws RestrictionViolation when two or more spine nodes do.
std::optional<NodeId> find_wrapping_node(const Grammar& grammar, TreeId tree);

enum class Severity { Error, Warning };

struct Violation {
  Severity severity = Severity::Error;
  int condition = 0;  // 1 or 2; 0 for warnings not tied to a condition
  std::string tree;
  NodeId node = 0;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the restricted-TAG conditions:
///  1. a wrapping tree has at most one spine node that admits wrapping trees;
///  2. a spine node of a left (right) tree admits no wrapping tree, and admits
///     every right (left) tree with a matching label plus nil.
/// Also warns when a foot node admits a wrapping tree.
std::vector<Violation> validate_restriction(const Grammar& grammar);

bool has_errors(const std::vector<Violation>& violations);

std::string describe(const Violation& v);

}  // namespace tag5

#endif  // TAG5_RESTRICTION_HPP
