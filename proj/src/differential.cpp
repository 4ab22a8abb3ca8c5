#include "tag5/differential.hpp"

#include <memory>
#include <cmath>
#include <random>

#include "tag5/oracle.hpp"
#include "tag5/recognizer.hpp"
#include "tag5/tokens.hpp"

namespace tag5 {

Engines default_engines(const Grammar& grammar, std::size_t max_len) {
  auto restricted = std::make_shared<Recognizer>(make_recognizer(grammar));
  auto baseline = std::make_shared<BaselineRecognizer>(grammar);
  Engines e;
  e.restricted = [restricted](const Tokens& t) { return restricted->accepts(t); };
  e.baseline = [baseline](const Tokens& t) { return baseline->accepts(t); };
  e.enumerated = enumerate_yields(grammar, max_len);
  return e;
}

std::size_t count_strings(std::size_t alphabet, std::size_t max_len) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    layer *= alphabet;
    total += layer;
  }
  return total;
}

void for_each_string(const std::vector<std::string>& alphabet, std::size_t max_len,
                     const std::function<void(const Tokens&)>& f) {
  if (alphabet.empty()) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    Tokens s(len, alphabet[0]);
    while (true) {
      f(s);
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (++digits[k] < alphabet.size()) {
          s[k] = alphabet[digits[k]];
          break;
        }
        digits[k] = 0;
        s[k] = alphabet[0];
        if (k == 0) goto next_length;
      }
    }
  next_length:;
  }
}

CompareReport compare_engines(const Engines& engines, const std::vector<std::string>& alphabet,
                              const CompareOptions& options) {
  if (options.max_len > kMaxCompareLength) {
    throw Error("compare length " + std::to_string(options.max_len) + " exceeds the limit of " +
                std::to_string(kMaxCompareLength));
  }
  CompareReport report;
  auto check = [&](const Tokens& s) {
    ++report.checked;
    const bool r = engines.restricted(s);
    const bool b = engines.baseline(s);
    const bool e = engines.enumerated.count(s) > 0;
    if (r != b || b != e) {
      report.disagreements.push_back({s, r, b, e});
    } else if (r) {
      ++report.accepted;
    }
  };

  if (options.sample) {
    report.sampled = true;
    if (alphabet.empty() || options.max_len == 0) return report;
    std::mt19937_64 rng(options.seed);
    // Lengths are drawn in proportion to how many strings they have, so the
    // sample is uniform over all strings up to max_len.
    std::vector<double> weights;
    for (std::size_t len = 1; len <= options.max_len; ++len) {
      weights.push_back(std::pow(static_cast<double>(alphabet.size()), static_cast<double>(len)));
    }
    std::discrete_distribution<std::size_t> pick_len(weights.begin(), weights.end());
    std::uniform_int_distribution<std::size_t> pick_sym(0, alphabet.size() - 1);
    for (std::size_t k = 0; k < *options.sample; ++k) {
      Tokens s(pick_len(rng) + 1);
      for (auto& t : s) t = alphabet[pick_sym(rng)];
      check(s);
    }
    // The sample alone would almost never hit the accepted strings.
    for (const auto& s : engines.enumerated) {
      if (s.size() <= options.max_len) check(s);
    }
    return report;
  }

  const std::size_t total = count_strings(alphabet.size(), options.max_len);
  if (total > options.exhaustive_cap) {
    throw Error(std::to_string(total) + " strings up to length " +
                std::to_string(options.max_len) + " exceed the exhaustive cap of " +
                std::to_string(options.exhaustive_cap) + "; use a sample");
  }
  for_each_string(alphabet, options.max_len, check);
  return report;
}

CompareReport compare(const Grammar& grammar, const CompareOptions& options) {
  if (options.max_len > kMaxCompareLength) {
    throw Error("compare length " + std::to_string(options.max_len) + " exceeds the limit of " +
                std::to_string(kMaxCompareLength));
  }
  const auto terms = grammar.terminals();
  const std::vector<std::string> alphabet(terms.begin(), terms.end());
  return compare_engines(default_engines(grammar, options.max_len), alphabet, options);
}

std::string describe(const Disagreement& d) {
  auto verdict = [](bool b) { return b ? "accept" : "reject"; };
  return "\"" + join(d.input, " ") + "\": restricted " + verdict(d.restricted) + ", baseline " +
         verdict(d.baseline) + ", enumerated " + verdict(d.enumerated);
}

}  // namespace tag5
