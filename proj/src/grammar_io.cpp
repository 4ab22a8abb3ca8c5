#include "tag5/grammar_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tag5 {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw GrammarError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) fail(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

bool flag(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) fail(where, std::string("\"") + key + "\" must be a boolean");
  return it->get<bool>();
}

struct TreeHeader {
  std::string name;
  TreeKind kind;
  std::string root_label;
};

class Builder {
 public:
  Builder(Grammar& g, std::vector<TreeHeader> headers) : g_(g), headers_(std::move(headers)) {}

  NodeId build(const json& j, TreeId tree, const std::string& where, int& feet) {
    static const std::set<std::string> known{"label",    "terminal",  "foot",     "subst",
                                             "adj",      "children",  "synthetic", "wrapping"};
    if (!j.is_object()) fail(where, "node must be an object");
    for (const auto& [key, _] : j.items()) {
      if (!known.count(key)) fail(where, "unknown node attribute \"" + key + "\"");
    }

    const NodeId id = static_cast<NodeId>(g_.nodes.size());
    g_.nodes.emplace_back();
    TreeNode node;
    node.label = string_member(j, "label", where);
    node.tree = tree;
    node.synthetic = flag(j, "synthetic", where);

    const bool terminal = flag(j, "terminal", where);
    const bool foot = flag(j, "foot", where);
    const bool has_subst = j.contains("subst");
    const bool has_children = j.contains("children");
    if (int(terminal) + int(foot) + int(has_subst) > 1) {
      fail(where, "a node is at most one of terminal, foot, substitution");
    }
    if ((terminal || foot || has_subst) && has_children) {
      fail(where, "leaf node must not have children");
    }

    if (terminal) {
      node.role = NodeRole::Terminal;
      if (j.contains("adj")) fail(where, "terminal node carries no adjunction constraint");
      node.adj = AdjConstraint::null();
    } else if (has_subst) {
      node.role = NodeRole::Substitution;
      if (j.contains("adj")) fail(where, "substitution node carries no adjunction constraint");
      node.adj = AdjConstraint::null();
      const json& names = j["subst"];
      if (!names.is_array() || names.empty()) fail(where, "\"subst\" must be a non-empty array");
      for (const auto& n : names) {
        if (!n.is_string()) fail(where, "\"subst\" entries must be strings");
        TreeId target = resolve(n.get<std::string>(), where);
        if (headers_[target].kind != TreeKind::Initial) {
          fail(where, "substitution of auxiliary tree '" + headers_[target].name + "'");
        }
        if (headers_[target].root_label != node.label) {
          fail(where, "substituted tree '" + headers_[target].name + "' has root label '" +
                          headers_[target].root_label + "', expected '" + node.label + "'");
        }
        node.subst.push_back(target);
      }
      std::sort(node.subst.begin(), node.subst.end());
      node.subst.erase(std::unique(node.subst.begin(), node.subst.end()), node.subst.end());
    } else {
      node.role = foot ? NodeRole::Foot : NodeRole::Internal;
      node.adj = parse_adj(j, node.label, where);
    }

    if (foot) {
      if (headers_[tree].kind != TreeKind::Auxiliary) fail(where, "foot node in initial tree");
      ++feet;
      g_.trees[tree].foot = id;
    }
    if (flag(j, "wrapping", where)) {
      if (g_.trees[tree].wrapping_node) fail(where, "more than one designated wrapping node");
      g_.trees[tree].wrapping_node = id;
    }

    if (node.role == NodeRole::Internal) {
      if (!has_children) fail(where, "internal node without children");
      const json& kids = j["children"];
      if (!kids.is_array() || kids.empty()) fail(where, "\"children\" must be a non-empty array");
      for (std::size_t i = 0; i < kids.size(); ++i) {
        node.children.push_back(
            build(kids[i], tree, where + ".children[" + std::to_string(i) + "]", feet));
      }
    }
    g_.nodes[id] = std::move(node);
    return id;
  }

 private:
  TreeId resolve(const std::string& name, const std::string& where) const {
    for (TreeId t = 0; t < headers_.size(); ++t) {
      if (headers_[t].name == name) return t;
    }
    fail(where, "unresolved tree name '" + name + "'");
  }

  AdjConstraint parse_adj(const json& j, const std::string& label, const std::string& where) {
    AdjConstraint adj;
    auto it = j.find("adj");
    if (it == j.end()) {
      for (TreeId t = 0; t < headers_.size(); ++t) {
        if (headers_[t].kind == TreeKind::Auxiliary && headers_[t].root_label == label) {
          adj.allowed.push_back(t);
        }
      }
      adj.allows_nil = true;
      return adj;
    }
    const json& a = *it;
    if (!a.is_object()) fail(where, "\"adj\" must be an object");
    for (const auto& [key, _] : a.items()) {
      if (key != "allowed" && key != "nil") fail(where, "unknown adj attribute \"" + key + "\"");
    }
    if (a.contains("allowed")) {
      const json& names = a["allowed"];
      if (!names.is_array()) fail(where, "\"adj.allowed\" must be an array");
      for (const auto& n : names) {
        if (!n.is_string()) fail(where, "\"adj.allowed\" entries must be strings");
        TreeId target = resolve(n.get<std::string>(), where);
        if (headers_[target].kind != TreeKind::Auxiliary) {
          fail(where, "adjunction of initial tree '" + headers_[target].name + "'");
        }
        if (headers_[target].root_label != label) {
          fail(where, "adjoined tree '" + headers_[target].name + "' has root label '" +
                          headers_[target].root_label + "', expected '" + label + "'");
        }
        adj.allowed.push_back(target);
      }
    }
    adj.allows_nil = a.contains("nil") ? flag(a, "nil", where) : true;
    std::sort(adj.allowed.begin(), adj.allowed.end());
    adj.allowed.erase(std::unique(adj.allowed.begin(), adj.allowed.end()), adj.allowed.end());
    if (adj.allowed.empty() && !adj.allows_nil) {
      fail(where, "dead node: no tree may adjoin and adjunction is obligatory");
    }
    return adj;
  }

  Grammar& g_;
  std::vector<TreeHeader> headers_;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GrammarError("syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                       ": " + e.what());
  }
  if (!doc.is_object()) fail("grammar", "top level must be an object");

  Grammar g;
  g.start = string_member(doc, "start", "grammar");
  const json& trees = member(doc, "trees", "grammar");
  if (!trees.is_array()) fail("grammar", "\"trees\" must be an array");

  std::vector<TreeHeader> headers;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const std::string where = "trees[" + std::to_string(t) + "]";
    const json& tj = trees[t];
    if (!tj.is_object()) fail(where, "tree must be an object");
    TreeHeader h;
    h.name = string_member(tj, "name", where);
    const std::string kind = string_member(tj, "kind", where);
    if (kind == "initial") {
      h.kind = TreeKind::Initial;
    } else if (kind == "auxiliary") {
      h.kind = TreeKind::Auxiliary;
    } else {
      fail(where, "kind must be \"initial\" or \"auxiliary\"");
    }
    const json& root = member(tj, "root", where);
    if (!root.is_object()) fail(where + ".root", "node must be an object");
    h.root_label = string_member(root, "label", where + ".root");
    for (const auto& other : headers) {
      if (other.name == h.name) fail(where, "duplicate tree name '" + h.name + "'");
    }
    headers.push_back(h);
    g.trees.push_back(ElementaryTree{h.name, h.kind, 0, std::nullopt, std::nullopt});
  }

  Builder builder(g, headers);
  for (TreeId t = 0; t < trees.size(); ++t) {
    const std::string where = "trees[" + std::to_string(t) + "].root";
    int feet = 0;
    g.trees[t].root = builder.build(trees[t]["root"], t, where, feet);
    auto& tree = g.trees[t];
    if (tree.kind == TreeKind::Auxiliary) {
      if (feet != 1) {
        fail("tree '" + tree.name + "'",
             "foot-count violation: auxiliary tree needs exactly one foot, found " +
                 std::to_string(feet));
      }
      if (g.node(*tree.foot).label != g.node(tree.root).label) {
        fail("tree '" + tree.name + "'", "foot/root label mismatch ('" +
                                             g.node(*tree.foot).label + "' vs '" +
                                             g.node(tree.root).label + "')");
      }
    } else if (tree.wrapping_node) {
      fail("tree '" + tree.name + "'", "wrapping node designated in an initial tree");
    }
  }

  const auto terms = g.terminals();
  for (const auto& nt : g.nonterminals()) {
    if (terms.count(nt)) fail("grammar", "symbol '" + nt + "' used as terminal and nonterminal");
  }

  bool has_start = false;
  for (TreeId t : g.initial_trees()) has_start |= g.root_label(t) == g.start;
  if (!has_start) fail("grammar", "no initial tree with root label '" + g.start + "'");
  return g;
}

Grammar load_grammar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read grammar file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

namespace {

ordered_json names_json(const Grammar& g, const std::vector<TreeId>& ids) {
  ordered_json arr = ordered_json::array();
  for (TreeId t : ids) arr.push_back(g.tree(t).name);
  return arr;
}

ordered_json adj_json(const Grammar& g, const AdjConstraint& adj) {
  ordered_json a;
  a["allowed"] = names_json(g, adj.allowed);
  a["nil"] = adj.allows_nil;
  return a;
}

class Emitter {
 public:
  Emitter(const Grammar& g, bool strip) : g_(g), strip_(strip) {}

  std::vector<ordered_json> emit(NodeId id) const {
    const TreeNode& n = g_.node(id);
    if (strip_ && n.synthetic) {
      std::vector<ordered_json> out;
      for (NodeId c : n.children) {
        auto part = emit(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }

    ordered_json j;
    j["label"] = n.label;
    const auto& tree = g_.tree(n.tree);
    // A synthetic foot below a real node: the real node was the foot.
    const bool foot_restored = strip_ && n.children.size() == 1 &&
                               g_.node(n.children[0]).synthetic &&
                               g_.node(n.children[0]).role == NodeRole::Foot;
    switch (n.role) {
      case NodeRole::Terminal:
        j["terminal"] = true;
        break;
      case NodeRole::Substitution:
        j["subst"] = names_json(g_, n.subst);
        break;
      case NodeRole::Foot:
        j["foot"] = true;
        j["adj"] = adj_json(g_, n.adj);
        break;
      case NodeRole::Internal:
        if (foot_restored) j["foot"] = true;
        j["adj"] = adj_json(g_, n.adj);
        break;
    }
    if (!strip_) {
      if (n.synthetic) j["synthetic"] = true;
      if (tree.wrapping_node == id) j["wrapping"] = true;
    }
    if (n.role == NodeRole::Internal && !foot_restored) {
      ordered_json kids = ordered_json::array();
      for (NodeId c : n.children) {
        for (auto& k : emit(c)) kids.push_back(std::move(k));
      }
      j["children"] = std::move(kids);
    }
    return {j};
  }

 private:
  const Grammar& g_;
  bool strip_;
};

}  // namespace

std::string serialize_grammar(const Grammar& grammar, SerializeOptions options) {
  Emitter emitter(grammar, options.strip_synthetic);
  ordered_json doc;
  doc["start"] = grammar.start;
  ordered_json trees = ordered_json::array();
  for (const auto& tree : grammar.trees) {
    ordered_json tj;
    tj["name"] = tree.name;
    tj["kind"] = to_string(tree.kind);
    auto roots = emitter.emit(tree.root);
    if (roots.size() != 1) {
      throw GrammarError("tree '" + tree.name + "' has no unique root after stripping");
    }
    tj["root"] = std::move(roots.front());
    trees.push_back(std::move(tj));
  }
  doc["trees"] = std::move(trees);
  return doc.dump(2) + "\n";
}

}  // namespace tag5
