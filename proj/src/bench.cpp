#include "tag5/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tag5/oracle.hpp"
#include "tag5/recognizer.hpp"
#include "tag5/tokens.hpp"

namespace tag5 {

namespace {

std::vector<std::string> builder_args(std::string_view rest) {
  return split_on(rest, ",");
}

}  // namespace

StringBuilder make_builder(std::string_view scheme, const Grammar& grammar) {
  const auto colon = scheme.find(':');
  const std::string name(scheme.substr(0, colon));
  const auto args =
      colon == std::string_view::npos ? std::vector<std::string>{} : builder_args(scheme.substr(colon + 1));

  if (name == "blocks") {
    std::vector<std::string> blocks = args;
    if (blocks.empty()) {
      const auto terms = grammar.terminals();
      blocks.assign(terms.begin(), terms.end());
    }
    if (blocks.empty()) throw Error("builder 'blocks' needs at least one token");
    return [blocks](std::size_t n) {
      if (n == 0 || n % blocks.size() != 0) {
        throw Error("length " + std::to_string(n) + " is not a positive multiple of " +
                    std::to_string(blocks.size()) + " (builder 'blocks')");
      }
      std::vector<std::string> out;
      for (const auto& t : blocks) out.insert(out.end(), n / blocks.size(), t);
      return out;
    };
  }
  if (name == "wrap") {
    if (args.size() != 3) throw Error("builder 'wrap' takes three tokens: wrap:l,c,r");
    return [args](std::size_t n) {
      if (n == 0) throw Error("length 0 is not supported by builder 'wrap'");
      const std::size_t a = (n - 1) / 2;
      std::vector<std::string> out(a, args[0]);
      out.push_back(args[1]);
      out.insert(out.end(), n - 1 - a, args[2]);
      return out;
    };
  }
  if (name == "repeat") {
    if (args.size() != 1) throw Error("builder 'repeat' takes one token: repeat:t");
    return [t = args[0]](std::size_t n) {
      if (n == 0) throw Error("length 0 is not supported by builder 'repeat'");
      return std::vector<std::string>(n, t);
    };
  }
  throw Error("unknown builder '" + name + "'");
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw Error("slope needs at least two points");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
  }
  const double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    num += (xs[k] - mx) * (ys[k] - my);
    den += (xs[k] - mx) * (xs[k] - mx);
  }
  if (den == 0) throw Error("slope needs at least two distinct x values");
  return num / den;
}

ScalingReport run_scaling(const Grammar& grammar, const std::vector<std::size_t>& lengths,
                          const StringBuilder& builder, const std::vector<std::string>& engines) {
  std::vector<std::size_t> ns = lengths;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<std::vector<std::string>> inputs;
  for (std::size_t n : ns) inputs.push_back(builder(n));

  ScalingReport report;
  std::vector<std::string> names = engines;
  std::sort(names.begin(), names.end());
  for (const auto& engine : names) {
    std::function<RecognitionStats(const std::vector<std::string>&)> run;
    if (engine == kRestrictedEngine) {
      auto rec = std::make_shared<Recognizer>(make_recognizer(grammar));
      run = [rec](const auto& t) { return rec->recognize(t); };
    } else if (engine == kBaselineEngine) {
      auto rec = std::make_shared<BaselineRecognizer>(grammar);
      run = [rec](const auto& t) { return rec->recognize(t); };
    } else {
      throw Error("unknown engine '" + engine + "'");
    }
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const RecognitionStats s = run(inputs[k]);
      ScalingRow row{engine, ns[k], s.total_rule_applications(), s.total_items(),
                     static_cast<std::uint64_t>(s.wall_time.count())};
      report.rows.push_back(row);
      if (row.rule_applications > 0) {
        xs.push_back(std::log2(static_cast<double>(row.n)));
        ys.push_back(std::log2(static_cast<double>(row.rule_applications)));
      }
    }
    report.slopes[engine] =
        xs.size() >= 3 ? std::optional<double>(least_squares_slope(xs, ys)) : std::nullopt;
  }
  return report;
}

std::vector<SizeRow> run_grammar_size_scaling(const std::function<Grammar(std::size_t)>& family,
                                              const std::vector<std::size_t>& ks,
                                              const std::vector<std::string>& input) {
  std::vector<SizeRow> out;
  for (std::size_t k : ks) {
    const Grammar g = family(k);
    const RecognitionStats s = make_recognizer(g).recognize(input);
    SizeRow row;
    row.k = k;
    row.grammar_size = grammar_size(g).value;
    row.rule_applications = s.total_rule_applications();
    row.ratio = static_cast<double>(row.rule_applications) / static_cast<double>(row.grammar_size);
    out.push_back(row);
  }
  return out;
}

Grammar k_copies(const Grammar& grammar, std::string_view tree, std::size_t k) {
  if (k == 0) throw Error("k_copies needs k >= 1");
  const TreeId original = grammar.tree_id(tree);
  if (!grammar.tree(original).is_auxiliary()) throw Error("k_copies needs an auxiliary tree");
  Grammar g = grammar;
  std::vector<TreeId> copies{original};
  for (std::size_t c = 2; c <= k; ++c) {
    const TreeId id = static_cast<TreeId>(g.trees.size());
    ElementaryTree t = grammar.tree(original);
    t.name = std::string(tree) + "_" + std::to_string(c);
    const NodeId offset = static_cast<NodeId>(g.nodes.size());
    const auto nodes = grammar.preorder(original);
    std::map<NodeId, NodeId> remap;
    for (std::size_t i = 0; i < nodes.size(); ++i) remap[nodes[i]] = offset + static_cast<NodeId>(i);
    for (NodeId old : nodes) {
      TreeNode n = grammar.node(old);
      n.tree = id;
      for (auto& ch : n.children) ch = remap.at(ch);
      g.nodes.push_back(std::move(n));
    }
    t.root = remap.at(t.root);
    if (t.foot) t.foot = remap.at(*t.foot);
    if (t.wrapping_node) t.wrapping_node = remap.at(*t.wrapping_node);
    g.trees.push_back(std::move(t));
    copies.push_back(id);
  }
  for (auto& n : g.nodes) {
    if (!n.adj.allows(original)) continue;
    n.adj.allowed.insert(n.adj.allowed.end(), copies.begin() + 1, copies.end());
    std::sort(n.adj.allowed.begin(), n.adj.allowed.end());
    n.adj.allowed.erase(std::unique(n.adj.allowed.begin(), n.adj.allowed.end()),
                        n.adj.allowed.end());
  }
  return g;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_number(std::string_view s, std::size_t line) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error("CSV line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string emit_csv(const ScalingReport& report) {
  std::ostringstream out;
  out << "engine,n,rule_applications,items,wall_time_us\n";
  for (const auto& r : report.rows) {
    out << r.engine << ',' << r.n << ',' << r.rule_applications << ',' << r.items << ','
        << r.wall_time_us << '\n';
  }
  for (const auto& [engine, slope] : report.slopes) {
    out << "# slope," << engine << ',' << (slope ? format_double(*slope) : "n/a") << '\n';
  }
  return out.str();
}

ScalingReport parse_csv(std::string_view text) {
  ScalingReport report;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split_on(line, ",");
    if (!header) {
      if (line != "engine,n,rule_applications,items,wall_time_us") {
        throw Error("CSV line 1: unexpected header");
      }
      header = true;
      continue;
    }
    if (line.rfind("# slope,", 0) == 0) {
      if (fields.size() != 3) throw Error("CSV line " + std::to_string(line_no) + ": bad slope line");
      report.slopes[fields[1]] = fields[2] == "n/a"
                                     ? std::nullopt
                                     : std::optional<double>(parse_number<double>(fields[2], line_no));
      continue;
    }
    if (fields.size() != 5) throw Error("CSV line " + std::to_string(line_no) + ": expected 5 fields");
    report.rows.push_back(ScalingRow{fields[0], parse_number<std::size_t>(fields[1], line_no),
                                     parse_number<std::uint64_t>(fields[2], line_no),
                                     parse_number<std::uint64_t>(fields[3], line_no),
                                     parse_number<std::uint64_t>(fields[4], line_no)});
  }
  if (!header) throw Error("CSV is empty");
  return report;
}

}  // namespace tag5
