#ifndef TAG5_NORMALIZE_HPP
#define TAG5_NORMALIZE_HPP

#include "tag5/grammar.hpp"

namespace tag5 {

/// Folds nodes with more than two children under fresh nil-only nodes that
/// carry the parent's label. The spine child of an auxiliary tree is kept
/// directly below its parent whenever it is the first or last child, so left
/// and right trees keep their class. Throws EpsilonLeaf on empty leaves.
Grammar binarize(const Grammar& grammar);

/// binarize, then give every wrapping tree an internal spine wrapping node
/// distinct from its root and foot, inserting a nil-only unary node where
/// needed. Node ids are renumbered in preorder. Idempotent.
Grammar normalize(const Grammar& grammar);

bool is_epsilon_label(const std::string& label);

}  // namespace tag5

#endif  // TAG5_NORMALIZE_HPP
