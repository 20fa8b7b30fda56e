#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbmg/errors.hpp"

namespace qbmg {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class Color : std::uint8_t { zero = 0, one = 1 };

constexpr Color opposite(Color c) {
  return c == Color::zero ? Color::one : Color::zero;
}
constexpr int color_index(Color c) { return static_cast<int>(c); }
Color color_from_int(int value);

// Which colors occur in a vertex or leaf set.
struct ColorSet {
  bool has_zero = false;
  bool has_one = false;

  void add(Color c) { (c == Color::zero ? has_zero : has_one) = true; }
  bool has(Color c) const { return c == Color::zero ? has_zero : has_one; }
  bool both() const { return has_zero && has_one; }
  bool monochromatic() const { return has_zero != has_one; }
};

// Vertex-colored bipartite graph. Vertices are dense ids 0..n-1 with unique
// nonempty display names; adjacency lists are sorted, symmetric, irreflexive,
// and every edge joins vertices of distinct colors.
class BiGraph {
 public:
  BiGraph() = default;

  // Normalizes edges (duplicates collapse). Names default to "v0".."v{n-1}".
  static BiGraph from_edges(std::vector<Color> colors,
                            std::span<const Edge> edges);
  static BiGraph from_edges(std::vector<std::string> names,
                            std::vector<Color> colors,
                            std::span<const Edge> edges);

  int size() const { return static_cast<int>(colors_.size()); }
  std::size_t edge_count() const;
  bool has_edge(VertexId u, VertexId v) const;
  int degree(VertexId v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }
  Color color(VertexId v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::string& name(VertexId v) const {
    return names_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int count_color(Color c) const;

  // Edges as (u, v) with u < v, sorted by ids.
  std::vector<Edge> edges() const;

  bool operator==(const BiGraph& other) const = default;

  // Checks all representation invariants; throws Error on a breach.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<Color> colors_;
  std::vector<std::vector<VertexId>> adj_;
};

std::vector<std::string> default_names(int n);

// Closed walk v0 v1 ... v{k-1} v0 of odd length k whose steps are all edges
// of the input; certifies that no proper 2-coloring exists.
struct OddCycleWitness {
  std::vector<VertexId> walk;
};

using BipartitionResult = std::variant<BiGraph, OddCycleWitness>;

// Proper 2-coloring by breadth-first traversal, color zero assigned to the
// lowest-index vertex of each component; or an odd closed walk.
BipartitionResult infer_bipartition(int n, std::span<const Edge> edges);
BipartitionResult infer_bipartition(std::vector<std::string> names,
                                    std::span<const Edge> edges);

// Induced subgraph along with the mapping new id -> id in the parent graph.
struct InducedSubgraph {
  BiGraph graph;
  std::vector<VertexId> original;
};

InducedSubgraph induced_subgraph(const BiGraph& g,
                                 std::span<const VertexId> vs);

// Partition of the vertex set into maximal connected subsets; parts are
// sorted ascending and ordered by smallest contained vertex id.
std::vector<std::vector<VertexId>> connected_components(const BiGraph& g);

bool is_connected(const BiGraph& g);

// Vertices adjacent to the whole opposite color class. A vertex whose
// opposite class is empty qualifies vacuously.
std::vector<VertexId> heart_vertices(const BiGraph& g);

// Disjoint union. Names are kept when globally unique across the parts,
// otherwise every vertex of part i is renamed "i.<name>".
BiGraph disjoint_union(std::span<const BiGraph> parts);

}  // namespace qbmg
