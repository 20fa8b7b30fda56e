#pragma once

#include <span>
#include <string>
#include <variant>

#include "qbmg/bigraph.hpp"
#include "qbmg/phylo.hpp"
#include "qbmg/recognition.hpp"
#include "qbmg/semantics.hpp"

namespace qbmg {

// Graph format, line oriented. '#' starts a comment, blank lines ignored.
//   v NAME [COLOR]   declare a vertex (COLOR is 0 or 1)
//   e NAME NAME      declare an edge between previously declared vertices
// Colors are all-or-none: when every vertex omits its color the bipartition
// is inferred, and a non-bipartite input parses to an odd-cycle witness.
struct GraphParse {
  std::vector<std::string> names;  // declaration order, indexes witness ids
  std::variant<BiGraph, OddCycleWitness> value;

  bool ok() const { return std::holds_alternative<BiGraph>(value); }
  const BiGraph& graph() const { return std::get<BiGraph>(value); }
  const OddCycleWitness& odd_cycle() const {
    return std::get<OddCycleWitness>(value);
  }
};

GraphParse parse_graph(const std::string& text);

// Canonical form: vertices in id order with colors, then edges sorted
// lexicographically by (min name, max name). parse . serialize = identity.
std::string serialize_graph(const BiGraph& g);

// Annotated Newick:
//   tree := node ';'
//   node := leaf | '(' node (',' node)+ ')'
//   leaf := NAME '[' 'c=' ('0'|'1') ',' 'u=' ('self'|'root') ']'
// NAME matches [A-Za-z0-9_.-]+; whitespace between tokens is ignored; the
// attribute order is fixed. Internal nodes carry no labels.
PhyloTree parse_tree(const std::string& text);
std::string serialize_tree(const PhyloTree& t);

// Arc-list form of a directed quasi-best-match graph:
//   v NAME COLOR  per vertex, then  a SRC DST  per arc.
std::string serialize_directed(const DirectedQbmg& d);

// DOT export. Graph vertices are drawn filled for color one and hollow for
// color zero; trees as root-down arcs with leaf truncation annotations.
std::string export_dot(const BiGraph& g);
std::string export_dot(const PhyloTree& t);
std::string export_dot(const DirectedQbmg& d);

// graph6 import shim (single graph, n <= 62); colors are inferred.
GraphParse parse_graph6(const std::string& line);

// One-line witness renderings, e.g. "P6: x1 x2 x3 x4 x5 x6".
std::string format_witness(std::span<const std::string> names,
                           const Witness& w);

}  // namespace qbmg
