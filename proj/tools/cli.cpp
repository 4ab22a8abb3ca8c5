#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>

#include "CLI11.hpp"
#include "tag5/bench.hpp"
#include "tag5/differential.hpp"
#include "tag5/grammar_io.hpp"
#include "tag5/normalize.hpp"
#include "tag5/oracle.hpp"
#include "tag5/recognizer.hpp"
#include "tag5/restriction.hpp"
#include "tag5/tokens.hpp"
#include "tag5/transform.hpp"

namespace tag5 {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Raised for bad flags or inputs detected after parsing.
struct UsageError : Error {
  using Error::Error;
};

void require_valid(const Grammar& g) {
  const auto violations = validate_restriction(g);
  if (!has_errors(violations)) return;
  std::string msg =
      "grammar is outside the restricted class; use --engine baseline to recognize it anyway";
  for (const auto& v : violations) {
    if (v.severity == Severity::Error) msg += "\n  " + describe(v);
  }
  throw UsageError(msg);
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& field : split_on(text, ",")) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(field, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != field.size() || v == 0) throw UsageError("bad length '" + field + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no lengths given");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw UsageError("cannot write '" + path + "'");
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Grammar g = load_grammar(path);
  const auto violations = validate_restriction(g);
  for (const auto& v : violations) out << describe(v) << '\n';
  if (has_errors(violations)) return kNegative;
  out << "OK\n";
  return kOk;
}

int cmd_transform(const std::string& path, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const Grammar g = load_grammar(path);
  const auto violations = validate_restriction(g);
  if (has_errors(violations)) {
    for (const auto& v : violations) err << describe(v) << '\n';
    return kNegative;
  }
  const std::string dump = dump_transformed(build_transformed_grammar(normalize(g)));
  if (out_path.empty()) {
    out << dump;
  } else {
    write_file(out_path, dump);
  }
  return kOk;
}

struct RecognizeFlags {
  std::string grammar;
  std::string input;
  bool chars = false;
  std::string separator;
  bool stats = false;
  std::string engine = "restricted";
};

int cmd_recognize(const RecognizeFlags& f, std::ostream& out) {
  const Grammar g = load_grammar(f.grammar);
  std::vector<std::string> tokens;
  if (f.chars) {
    tokens = split_chars(f.input);
  } else if (!f.separator.empty()) {
    tokens = split_on(f.input, f.separator);
  } else {
    tokens = split_whitespace(f.input);
  }
  RecognitionStats s;
  if (f.engine == "baseline") {
    s = baseline_recognize(g, tokens);
  } else {
    require_valid(g);
    s = make_recognizer(g).recognize(tokens);
  }
  out << (s.accepted ? "ACCEPT" : "REJECT") << '\n';
  if (f.stats) {
    out << "engine " << f.engine << '\n';
    out << "tokens " << tokens.size() << '\n';
    out << "items " << s.total_items() << '\n';
    for (const auto& [kind, c] : s.items_by_kind) out << "  " << kind << ' ' << c << '\n';
    out << "rule_applications " << s.total_rule_applications() << '\n';
    for (const auto& [rule, c] : s.rule_applications) out << "  " << rule << ' ' << c << '\n';
    out << "wall_time_us " << s.wall_time.count() << '\n';
  }
  return s.accepted ? kOk : kNegative;
}

int cmd_compare(const std::string& path, const CompareOptions& options, std::ostream& out) {
  if (options.max_len > kMaxCompareLength) {
    throw UsageError("--max-len must be at most " + std::to_string(kMaxCompareLength));
  }
  const Grammar g = load_grammar(path);
  require_valid(g);
  const CompareReport r = compare(g, options);
  out << "checked " << r.checked << " strings up to length " << options.max_len << " ("
      << (r.sampled ? "sampled" : "exhaustive") << "), " << r.accepted << " accepted\n";
  for (const auto& d : r.disagreements) out << describe(d) << '\n';
  if (r.agree()) {
    out << "no differences\n";
    return kOk;
  }
  out << r.disagreements.size() << " differences\n";
  return kNegative;
}

int cmd_bench(const std::string& path, const std::string& lengths, const std::string& csv,
              const std::string& builder, std::ostream& out) {
  const Grammar g = load_grammar(path);
  require_valid(g);
  const auto ns = parse_lengths(lengths);
  const auto build = make_builder(builder, g);
  for (std::size_t n : ns) build(n);  // reject bad lengths before running anything
  const ScalingReport report = run_scaling(g, ns, build);
  const std::string text = emit_csv(report);
  if (csv.empty()) {
    out << text;
  } else {
    write_file(csv, text);
  }
  for (const auto& [engine, slope] : report.slopes) {
    out << "slope " << engine << ": ";
    if (slope) {
      out << std::fixed << std::setprecision(3) << *slope << '\n';
    } else {
      out << "n/a\n";
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognizer for tree adjoining grammars with restricted wrapping adjunction", "tag5"};
  app.require_subcommand(1);

  std::string grammar;
  std::string out_path;

  auto* validate = app.add_subcommand("validate", "Check the adjunction restriction");
  validate->add_option("grammar", grammar, "Grammar file")->required();

  auto* transform = app.add_subcommand("transform", "Dump the split auxiliary trees");
  transform->add_option("grammar", grammar, "Grammar file")->required();
  transform->add_option("-o,--out", out_path, "Output file (default: stdout)");

  RecognizeFlags rf;
  auto* recognize = app.add_subcommand("recognize", "Recognize one input string");
  recognize->add_option("grammar", rf.grammar, "Grammar file")->required();
  recognize->add_option("input", rf.input, "Input string")->required();
  auto* chars = recognize->add_flag("--chars", rf.chars, "One token per character");
  recognize->add_option("--tokens", rf.separator, "Token separator (default: whitespace)")
      ->excludes(chars);
  recognize->add_flag("--stats", rf.stats, "Print item and rule counts");
  recognize->add_option("--engine", rf.engine, "restricted or baseline")
      ->check(CLI::IsMember({"restricted", "baseline"}));

  CompareOptions co;
  std::size_t sample = 0;
  auto* cmp = app.add_subcommand("compare", "Cross-check both recognizers and the enumerator");
  cmp->add_option("grammar", grammar, "Grammar file")->required();
  cmp->add_option("--max-len", co.max_len, "Longest string to check")->required();
  auto* sample_opt = cmp->add_option("--sample", sample, "Check this many random strings");
  cmp->add_option("--seed", co.seed, "Seed for --sample");

  std::string lengths;
  std::string csv;
  std::string builder = "blocks";
  auto* bench = app.add_subcommand("bench", "Measure rule applications against input length");
  bench->add_option("grammar", grammar, "Grammar file")->required();
  bench->add_option("--lengths", lengths, "Comma separated input lengths")->required();
  bench->add_option("--csv", csv, "CSV output file (default: stdout)");
  bench->add_option("--builder", builder, "blocks[:t1,...], wrap:l,c,r or repeat:t");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(grammar, out);
    if (transform->parsed()) return cmd_transform(grammar, out_path, out, err);
    if (recognize->parsed()) return cmd_recognize(rf, out);
    if (cmp->parsed()) {
      if (sample_opt->count() > 0) co.sample = sample;
      return cmd_compare(grammar, co, out);
    }
    if (bench->parsed()) return cmd_bench(grammar, lengths, csv, builder, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tag5
