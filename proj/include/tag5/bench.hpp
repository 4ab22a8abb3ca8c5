#ifndef TAG5_BENCH_HPP
#define TAG5_BENCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tag5/grammar.hpp"

namespace tag5 {

inline constexpr const char* kRestrictedEngine = "restricted";
inline constexpr const char* kBaselineEngine = "baseline";

struct ScalingRow {
  std::string engine;
  std::size_t n = 0;
  std::uint64_t rule_applications = 0;
  std::uint64_t items = 0;
  std::uint64_t wall_time_us = 0;
  friend bool operator==(const ScalingRow&, const ScalingRow&) = default;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;  // sorted by (engine, n)
  /// Least-squares slope of log2(rule applications) against log2(n); empty
  /// with fewer than three lengths.
  std::map<std::string, std::optional<double>> slopes;
  friend bool operator==(const ScalingReport&, const ScalingReport&) = default;
};

/// Produces the input of a given length. Throws Error when the length does
/// not fit the scheme.
using StringBuilder = std::function<std::vector<std::string>(std::size_t n)>;

/// Builder schemes:
///   blocks[:t1,...,tk]  t1^m ... tk^m with n = k*m; default tokens are the
///                       grammar's terminals in sorted order
///   wrap:l,c,r          l^a c r^b with a = (n-1)/2, b = n-1-a
///   repeat:t            t^n
StringBuilder make_builder(std::string_view scheme, const Grammar& grammar);

/// Slope of the least-squares line through (xs, ys).
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Runs the given engines ("restricted", "baseline") on builder(n) for every n.
ScalingReport run_scaling(const Grammar& grammar, const std::vector<std::size_t>& lengths,
                          const StringBuilder& builder,
                          const std::vector<std::string>& engines = {kRestrictedEngine,
                                                                     kBaselineEngine});

struct SizeRow {
  std::size_t k = 0;
  std::size_t grammar_size = 0;
  std::uint64_t rule_applications = 0;
  double ratio = 0;  // rule_applications / grammar_size
};

/// Restricted-engine rule applications on a fixed input across a family of
/// grammars.
std::vector<SizeRow> run_grammar_size_scaling(const std::function<Grammar(std::size_t)>& family,
                                              const std::vector<std::size_t>& ks,
                                              const std::vector<std::string>& input);

/// The grammar with k interchangeable copies of one auxiliary tree: every
/// node that admits the tree admits all copies.
Grammar k_copies(const Grammar& grammar, std::string_view tree, std::size_t k);

/// CSV: header "engine,n,rule_applications,items,wall_time_us", one row per
/// measurement, then one "# slope,<engine>,<value or n/a>" line per engine.
std::string emit_csv(const ScalingReport& report);
ScalingReport parse_csv(std::string_view text);

}  // namespace tag5

#endif  // TAG5_BENCH_HPP
