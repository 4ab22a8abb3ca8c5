#ifndef TAG5_DIFFERENTIAL_HPP
#define TAG5_DIFFERENTIAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tag5/grammar.hpp"

namespace tag5 {

using Tokens = std::vector<std::string>;
using MembershipFn = std::function<bool(const Tokens&)>;

/// The three membership tests being compared. Tests swap in deliberately
/// broken engines through this struct.
struct Engines {
  MembershipFn restricted;
  MembershipFn baseline;
  std::set<Tokens> enumerated;  // complete up to the compared length
};

/// Restricted recognizer, baseline and enumerated language for a grammar.
Engines default_engines(const Grammar& grammar, std::size_t max_len);

struct CompareOptions {
  std::size_t max_len = 8;
  /// Check this many random strings instead of all of them.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
  /// Exhaustive runs refuse to go beyond this many strings.
  std::size_t exhaustive_cap = 3000000;
};

inline constexpr std::size_t kMaxCompareLength = 12;

struct Disagreement {
  Tokens input;
  bool restricted = false;
  bool baseline = false;
  bool enumerated = false;
};

struct CompareReport {
  std::size_t checked = 0;
  std::size_t accepted = 0;  // strings all three engines accept
  bool sampled = false;
  std::vector<Disagreement> disagreements;

  bool agree() const { return disagreements.empty(); }
};

/// Number of strings of length 1..max_len over an alphabet of the given size.
std::size_t count_strings(std::size_t alphabet, std::size_t max_len);

/// Calls f on every string of length 1..max_len over the alphabet, shortest
/// first, lexicographic within a length.
void for_each_string(const std::vector<std::string>& alphabet, std::size_t max_len,
                     const std::function<void(const Tokens&)>& f);

/// Checks the three engines against each other on strings over the
/// grammar's terminals. Throws Error for max_len above the limit, or when
/// the exhaustive run is over the cap and no sample was requested.
CompareReport compare_engines(const Engines& engines, const std::vector<std::string>& alphabet,
                              const CompareOptions& options);

CompareReport compare(const Grammar& grammar, const CompareOptions& options);

std::string describe(const Disagreement& d);

}  // namespace tag5

#endif  // TAG5_DIFFERENTIAL_HPP
