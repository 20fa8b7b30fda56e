#include "qbmg/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace qbmg {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& message) {
  fail(Errc::syntax_error,
       "line " + std::to_string(line) + ": " + message);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-'))
      return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

GraphParse parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::vector<int> declared_colors;  // -1 when omitted
  std::vector<Edge> edges;
  std::unordered_map<std::string, VertexId> index;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 2 && tokens.size() != 3)
        syntax_error(line_no, "expected 'v NAME [COLOR]'");
      const std::string& name = tokens[1];
      if (!valid_name(name)) syntax_error(line_no, "bad vertex name: " + name);
      if (index.contains(name))
        fail(Errc::duplicate_vertex,
             "line " + std::to_string(line_no) + ": duplicate vertex " + name);
      int color = -1;
      if (tokens.size() == 3) {
        if (tokens[2] != "0" && tokens[2] != "1")
          syntax_error(line_no, "color must be 0 or 1");
        color = tokens[2][0] - '0';
      }
      index.emplace(name, static_cast<VertexId>(names.size()));
      names.push_back(name);
      declared_colors.push_back(color);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) syntax_error(line_no, "expected 'e NAME NAME'");
      auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
          fail(Errc::unknown_vertex, "line " + std::to_string(line_no) +
                                         ": unknown vertex " + name);
        return it->second;
      };
      VertexId u = lookup(tokens[1]);
      VertexId v = lookup(tokens[2]);
      if (u == v ||
          (declared_colors[static_cast<std::size_t>(u)] != -1 &&
           declared_colors[static_cast<std::size_t>(u)] ==
               declared_colors[static_cast<std::size_t>(v)]))
        fail(Errc::monochromatic_edge, "line " + std::to_string(line_no) +
                                           ": edge joins same-colored vertices " +
                                           tokens[1] + " " + tokens[2]);
      edges.emplace_back(u, v);
    } else {
      syntax_error(line_no, "unknown declaration '" + tokens[0] + "'");
    }
  }
  if (names.empty()) fail(Errc::empty_graph, "graph file declares no vertices");

  const bool any_declared = std::any_of(declared_colors.begin(),
                                        declared_colors.end(),
                                        [](int c) { return c != -1; });
  const bool all_declared = std::all_of(declared_colors.begin(),
                                        declared_colors.end(),
                                        [](int c) { return c != -1; });
  if (any_declared && !all_declared)
    fail(Errc::mixed_color_declaration,
         "either all vertices declare a color or none do");

  if (!any_declared) {
    auto result = infer_bipartition(names, edges);
    return GraphParse{std::move(names), std::move(result)};
  }
  std::vector<Color> colors;
  colors.reserve(declared_colors.size());
  for (int c : declared_colors) colors.push_back(color_from_int(c));
  BiGraph g = BiGraph::from_edges(names, std::move(colors), edges);
  return GraphParse{std::move(names), std::move(g)};
}

std::string serialize_graph(const BiGraph& g) {
  std::string out;
  for (VertexId v = 0; v < g.size(); ++v) {
    out += "v " + g.name(v) + " " + std::to_string(color_index(g.color(v))) +
           "\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    std::string a = g.name(u), b = g.name(v);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += "e " + a + " " + b + "\n";
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) : text_(text) {}

  PhyloTree parse() {
    skip_ws();
    PhyloTree t;
    if (peek() == '(') {
      NodeId root = t.add_root();
      parse_children(t, root);
    } else {
      auto [name, color, trunc] = parse_leaf_label();
      if (trunc == Trunc::root)
        fail(Errc::single_leaf_root_trunc,
             "a single-leaf tree cannot truncate at the root");
      expect(';');
      skip_ws();
      if (pos_ != text_.size()) error("trailing input after ';'");
      return PhyloTree::single_leaf(std::move(name), color);
    }
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) error("trailing input after ';'");
    t.finalize();  // rejects duplicate leaf names and unary internals
    return t;
  }

 private:
  void parse_children(PhyloTree& t, NodeId parent) {
    std::size_t open = pos_;
    expect('(');
    int count = 0;
    for (;;) {
      parse_node(t, parent);
      ++count;
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (count < 2) {
      pos_ = open;
      fail(Errc::unary_internal_node,
           "position " + std::to_string(open + 1) +
               ": internal node with a single child");
    }
    expect(')');
  }

  void parse_node(PhyloTree& t, NodeId parent) {
    skip_ws();
    if (peek() == '(') {
      NodeId inner = t.add_internal(parent);
      parse_children(t, inner);
    } else {
      auto [name, color, trunc] = parse_leaf_label();
      t.add_leaf(parent, std::move(name), color, trunc);
    }
  }

  std::tuple<std::string, Color, Trunc> parse_leaf_label() {
    skip_ws();
    std::string name = parse_name();
    expect('[');
    expect('c');
    expect('=');
    skip_ws();
    char c = next();
    if (c != '0' && c != '1') error("leaf color must be 0 or 1");
    expect(',');
    expect('u');
    expect('=');
    skip_ws();
    Trunc trunc;
    if (match_word("self"))
      trunc = Trunc::self;
    else if (match_word("root"))
      trunc = Trunc::root;
    else
      error("truncation must be 'self' or 'root'");
    expect(']');
    return {std::move(name), c == '0' ? Color::zero : Color::one, trunc};
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-')
        ++pos_;
      else
        break;
    }
    if (start == pos_) error("expected a leaf name");
    return text_.substr(start, pos_ - start);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char next() {
    if (pos_ >= text_.size()) error("unexpected end of input");
    return text_[pos_++];
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool match_word(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[noreturn]] void error(const std::string& message) {
    fail(Errc::syntax_error,
         "position " + std::to_string(pos_ + 1) + ": " + message);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhyloTree parse_tree(const std::string& text) { return TreeParser(text).parse(); }

namespace {

void serialize_node(const PhyloTree& t, NodeId v, std::string& out) {
  if (t.is_leaf(v)) {
    const auto& node = t.node(v);
    out += node.name;
    out += "[c=";
    out += node.color == Color::zero ? '0' : '1';
    out += ",u=";
    out += node.trunc == Trunc::self ? "self" : "root";
    out += ']';
    return;
  }
  out += '(';
  bool first = true;
  for (NodeId c : t.node(v).children) {
    if (!first) out += ',';
    first = false;
    serialize_node(t, c, out);
  }
  out += ')';
}

}  // namespace

std::string serialize_tree(const PhyloTree& t) {
  std::string out;
  serialize_node(t, t.root(), out);
  out += ';';
  return out;
}

std::string serialize_directed(const DirectedQbmg& d) {
  std::string out;
  for (VertexId v = 0; v < d.size(); ++v)
    out += "v " + d.names[static_cast<std::size_t>(v)] + " " +
           std::to_string(color_index(d.colors[static_cast<std::size_t>(v)])) +
           "\n";
  for (const auto& [u, v] : d.arcs())
    out += "a " + d.names[static_cast<std::size_t>(u)] + " " +
           d.names[static_cast<std::size_t>(v)] + "\n";
  return out;
}

namespace {

std::string dot_color_attrs(Color c) {
  return c == Color::one
             ? " [style=filled, fillcolor=black, fontcolor=white]"
             : " [style=filled, fillcolor=white]";
}

}  // namespace

std::string export_dot(const BiGraph& g) {
  std::string out = "graph G {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.size(); ++v)
    out += "  \"" + g.name(v) + "\"" + dot_color_attrs(g.color(v)) + ";\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    std::string a = g.name(u), b = g.name(v);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges)
    out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const PhyloTree& t) {
  std::string out = "digraph T {\n";
  for (NodeId v : t.preorder()) {
    if (t.is_leaf(v)) {
      const auto& node = t.node(v);
      out += "  n" + std::to_string(v) + " [shape=circle, label=\"" +
             node.name + "\\nu=" +
             (node.trunc == Trunc::self ? "self" : "root") + "\"" +
             (node.color == Color::one ? ", style=filled, fillcolor=gray"
                                       : "") +
             "];\n";
    } else {
      out += "  n" + std::to_string(v) + " [shape=point];\n";
    }
  }
  for (NodeId v : t.preorder())
    for (NodeId c : t.node(v).children)
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const DirectedQbmg& d) {
  std::string out = "digraph Q {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < d.size(); ++v)
    out += "  \"" + d.names[static_cast<std::size_t>(v)] + "\"" +
           dot_color_attrs(d.colors[static_cast<std::size_t>(v)]) + ";\n";
  for (const auto& [u, v] : d.arcs())
    out += "  \"" + d.names[static_cast<std::size_t>(u)] + "\" -> \"" +
           d.names[static_cast<std::size_t>(v)] + "\";\n";
  out += "}\n";
  return out;
}

GraphParse parse_graph6(const std::string& line) {
  if (line.empty()) fail(Errc::syntax_error, "empty graph6 line");
  std::size_t pos = 0;
  if (line[0] == '~')
    fail(Errc::size_cap_exceeded, "graph6 shim handles n <= 62 only");
  int n = line[0] - 63;
  if (n < 1 || n > 62)
    fail(Errc::syntax_error, "bad graph6 vertex count byte");
  ++pos;
  const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes_needed = (bits_needed + 5) / 6;
  if (line.size() - pos < bytes_needed)
    fail(Errc::syntax_error, "graph6 line too short");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      int byte = line[pos + bit / 6] - 63;
      if (byte < 0 || byte > 63) fail(Errc::syntax_error, "bad graph6 byte");
      if (byte & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  auto names = default_names(n);
  auto result = infer_bipartition(names, edges);
  return GraphParse{std::move(names), std::move(result)};
}

std::string format_witness(std::span<const std::string> names,
                           const Witness& w) {
  auto join = [&](const std::vector<VertexId>& ids) {
    std::string out;
    for (VertexId v : ids) {
      if (!out.empty()) out += ' ';
      out += names[static_cast<std::size_t>(v)];
    }
    return out;
  };
  if (const auto* h = std::get_if<HeartlessSubgraph>(&w))
    return "heartless: " + join(h->vertices);
  if (const auto* f = std::get_if<ForbiddenPattern>(&w))
    return std::string(pattern_name(f->pattern)) + ": " + join(f->embedding);
  return "odd-cycle: " + join(std::get<OddCycle>(w).walk);
}

}  // namespace qbmg
