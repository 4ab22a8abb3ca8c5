#ifndef TAG5_ORACLE_HPP
#define TAG5_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tag5/grammar.hpp"
#include "tag5/recognizer.hpp"

namespace tag5 {

/// Bottom-up tabular recognizer for unrestricted TAG with four-index items
/// for nodes that dominate a foot. Runs in O(n^6). Works directly on the
/// grammar (binarized internally); no transformation is involved.
///
/// Rule applications are counted per evaluated index tuple, hits and misses
/// alike, so they track running time.
class BaselineRecognizer {
 public:
  explicit BaselineRecognizer(const Grammar& grammar);
  ~BaselineRecognizer();
  BaselineRecognizer(BaselineRecognizer&&) noexcept;
  BaselineRecognizer& operator=(BaselineRecognizer&&) noexcept;

  RecognitionStats recognize(const std::vector<std::string>& tokens) const;
  bool accepts(const std::vector<std::string>& tokens) const;

  struct Program;

 private:
  std::unique_ptr<Program> program_;
};

RecognitionStats baseline_recognize(const Grammar& grammar, const std::vector<std::string>& tokens);

/// The enumerator's frontier grew past its cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kMaxEnumerationLength = 16;
inline constexpr std::size_t kDefaultFrontierCap = 1000000;

/// TAG5_FRONTIER_CAP if set to a positive integer, else the default.
std::size_t frontier_cap_from_env();

/// Every yield of length <= max_len of a complete derived tree, found by
/// breadth-first closure over single substitutions and adjunctions starting
/// from the initial trees with root label S. Throws BudgetExceeded when more
/// than frontier_cap distinct partial trees are generated.
std::set<std::vector<std::string>> enumerate_yields(
    const Grammar& grammar, std::size_t max_len,
    std::optional<std::size_t> frontier_cap = std::nullopt);

}  // namespace tag5

#endif  // TAG5_ORACLE_HPP
