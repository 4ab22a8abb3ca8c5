#ifndef TAG5_GRAMMAR_IO_HPP
#define TAG5_GRAMMAR_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "tag5/grammar.hpp"

namespace tag5 {

/// Parses the JSON grammar format:
///
///   { "start": "S",
///     "trees": [ { "name": "alpha1", "kind": "initial", "root": {...} }, ... ] }
///
/// Node attributes: "label" (required), "terminal": true, "foot": true,
/// "subst": [initial tree names], "adj": {"allowed": [names], "nil": bool},
/// "children": [...]. Nodes without an "adj" clause allow every auxiliary
/// tree whose root label matches, and allow nil. The attributes "synthetic"
/// and "wrapping" are written by the serializer for normalized grammars.
///
/// Cross references are resolved and structural invariants checked; the
/// adjunction restriction is not (see validate_restriction).
Grammar parse_grammar(std::string_view text);

Grammar load_grammar(const std::filesystem::path& path);

struct SerializeOptions {
  /// Drop nodes introduced by normalization, restoring the original trees.
  bool strip_synthetic = false;
};

std::string serialize_grammar(const Grammar& grammar, SerializeOptions options = {});

}  // namespace tag5

#endif  // TAG5_GRAMMAR_IO_HPP
