#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/phylo.hpp"

namespace qbmg {

// Undirected graph explained by a tree, plus the bijection between graph
// vertices and tree leaves (vertex i <-> leaf_of_vertex[i], in leaf preorder).
struct ExplainedGraph {
  BiGraph graph;
  std::vector<NodeId> leaf_of_vertex;
};

// Directed quasi-best-match graph of a tree. Vertices are the leaves in
// preorder; every arc joins opposite colors and a vertex with the self
// truncation has outdegree zero.
struct DirectedQbmg {
  std::vector<std::string> names;
  std::vector<Color> colors;
  std::vector<std::vector<VertexId>> out;  // sorted target lists

  int size() const { return static_cast<int>(colors.size()); }
  std::size_t arc_count() const;
  std::vector<Edge> arcs() const;  // (src, dst), ordered
};

// Leaves of the opposite color closest to x: walk from x toward the root and
// stop at the first ancestor whose subtree contains an opposite-colored
// leaf; all opposite-colored leaves under it are the best matches.
std::vector<NodeId> best_matches(const PhyloTree& t, NodeId leaf);

// Same set computed straight from the definition by scanning all pairwise
// last common ancestors; quadratic, kept as a differential-testing route.
std::vector<NodeId> best_matches_by_lca(const PhyloTree& t, NodeId leaf);

// Arc x->y iff x carries the root truncation and y is a best match of x.
DirectedQbmg directed_qbmg(const PhyloTree& t);

// The undirected graph explained by the tree: the underlying undirected
// graph of directed_qbmg(t), with vertices named after the leaves.
ExplainedGraph explain(const PhyloTree& t);

// True iff explain(t) is identical to g under the name correspondence
// (equal colors and equal edge sets). Throws name_mismatch when the leaf
// names and vertex names differ as sets.
bool check_explains(const PhyloTree& t, const BiGraph& g);

// True iff no single internal-arc contraction of t yields a tree that still
// explains g. Certifies single-contraction minimality. Requires that t
// explains g (not_explaining otherwise).
bool check_least_resolved(const PhyloTree& t, const BiGraph& g);

// Structural audit of an explaining tree against three properties of
// least-resolved trees of connected graphs:
//   (a) every internal node is the last common ancestor of some edge,
//   (b) no internal subtree is monochromatic,
//   (c) for every edge xy, the parent of x is an ancestor of y and x carries
//       the root truncation, or symmetrically for y.
// For disconnected g the root acts as a union point and is exempt from (a)
// and (b). Passing the audit does not imply least-resolvedness.
struct LrtViolation {
  enum class Kind {
    internal_without_edge_lca,
    monochromatic_internal,
    edge_without_parent_cover,
  };
  Kind kind;
  NodeId node = kNoNode;          // (a), (b)
  Edge edge{kNoNode, kNoNode};    // (c), graph vertex ids
  std::string describe(const PhyloTree& t, const BiGraph& g) const;
};

std::vector<LrtViolation> validate_lrt_structure(const PhyloTree& t,
                                                 const BiGraph& g);

// Joins explaining trees of disjoint graphs under a fresh root; the result
// explains the disjoint union. Multi-leaf inputs must use both colors
// (monochromatic_component otherwise); single-leaf inputs attach as leaves.
// A single input is returned unchanged.
PhyloTree union_explainer(std::span<const PhyloTree> trees);

}  // namespace qbmg
