#ifndef TAG5_RECOGNIZER_HPP
#define TAG5_RECOGNIZER_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tag5/transform.hpp"

namespace tag5 {

/// B: children combined, adjunction not yet processed. M: a left tree has
/// been adjoined. T: fully processed.
enum class State : std::uint8_t { B, M, T };
const char* to_string(State s);

/// Index into the recognizer's flat node table, which covers every node of
/// every initial tree and every tree of A'.
using GlobalNode = std::uint32_t;

struct NodeItem {
  GlobalNode node = 0;
  State state = State::B;
  std::uint32_t i = 0, j = 0;
  friend auto operator<=>(const NodeItem&, const NodeItem&) = default;
};

/// LD, RD, RU: partial wrapping adjunction at the wrapping node of tree.
/// Full: the wrapping tree completely recognized, foot spanning (p, q).
enum class WrapTag : std::uint8_t { LD, RD, RU, Full };
const char* to_string(WrapTag t);

struct WrapItem {
  WrapTag tag = WrapTag::Full;
  TreeId tree = 0;  // wrapping tree of the base grammar
  std::uint32_t i = 0, p = 0, q = 0, j = 0;
  friend auto operator<=>(const WrapItem&, const WrapItem&) = default;
};

using Item = std::variant<NodeItem, WrapItem>;

/// Rule ids of the restricted recognizer, in display order.
inline constexpr std::array<const char*, 14> kRuleIds = {
    "1a", "1b", "1c", "1d", "1e", "2a", "2b", "2c", "2d", "2e", "3a", "3b", "3c", "3d"};

struct RecognitionStats {
  std::map<std::string, std::uint64_t> items_by_kind;
  std::map<std::string, std::uint64_t> rule_applications;
  std::chrono::microseconds wall_time{0};
  bool accepted = false;

  std::uint64_t total_items() const;
  std::uint64_t total_rule_applications() const;
};

enum class AgendaOrder { Fifo, Lifo };

class Recognizer;

/// Closed item set plus agenda for one input. Partner lookups only see items
/// that have already been processed, so each pair of antecedents combines
/// exactly once.
class Chart {
 public:
  Chart(const Recognizer& recognizer, std::vector<std::string> tokens,
        AgendaOrder order = AgendaOrder::Fifo);
  ~Chart();
  Chart(Chart&&) noexcept;
  Chart& operator=(Chart&&) noexcept;

  /// Lexical and foot axioms. Throws UnknownToken.
  void seed_axioms();
  /// Processes one agenda item; false once the agenda is empty.
  bool step();
  /// seed_axioms (if not yet done), then step to fixpoint.
  void run();

  bool contains(const Item& item) const;
  bool closed() const;
  std::size_t size() const;
  /// Every derived item, sorted.
  std::vector<Item> items() const;
  bool accepted() const;
  RecognitionStats stats() const;

  std::size_t length() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// The restricted recognizer, compiled once per transformed grammar and then
/// run on any number of inputs. Inputs are limited to 1023 tokens.
class Recognizer {
 public:
  explicit Recognizer(TransformedGrammar tg);
  ~Recognizer();
  Recognizer(Recognizer&&) noexcept;
  Recognizer& operator=(Recognizer&&) noexcept;

  const TransformedGrammar& grammar() const;

  /// Node of the initial tree or A' tree with the given name, copied from
  /// the given node of the base grammar. Throws Error when absent.
  GlobalNode node(std::string_view tree_name, NodeId source) const;
  /// Root of the named initial tree or A' tree.
  GlobalNode root(std::string_view tree_name) const;
  std::size_t node_count() const;

  Chart chart(const std::vector<std::string>& tokens, AgendaOrder order = AgendaOrder::Fifo) const;
  RecognitionStats recognize(const std::vector<std::string>& tokens,
                             AgendaOrder order = AgendaOrder::Fifo) const;
  bool accepts(const std::vector<std::string>& tokens) const;

  std::string describe(const Item& item) const;

  struct Program;
  const Program& program() const { return *program_; }

 private:
  std::unique_ptr<Program> program_;
};

/// Normalizes, transforms and compiles a grammar. Throws RestrictionViolation
/// when the grammar is outside the restricted class.
Recognizer make_recognizer(const Grammar& grammar);

/// Runs the chart to fixpoint with FIFO and with LIFO agenda order and
/// compares the closed item sets.
bool closure_order_independent(const Recognizer& recognizer,
                               const std::vector<std::string>& tokens);

}  // namespace tag5

#endif  // TAG5_RECOGNIZER_HPP
