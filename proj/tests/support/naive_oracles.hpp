// Independent reference implementations used only by tests. These stay
// deliberately literal so they can arbitrate the production code paths.
#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/phylo.hpp"
#include "qbmg/semantics.hpp"

namespace naive {

using qbmg::BiGraph;
using qbmg::Color;
using qbmg::Edge;
using qbmg::NodeId;
using qbmg::PhyloTree;
using qbmg::Trunc;
using qbmg::VertexId;

// Literal transcription of the explained-graph definition: edge xy iff the
// colors differ and one endpoint carries the root truncation while the other
// lies below every lca(x,z) over z of its color.
inline BiGraph naive_explain(const PhyloTree& t) {
  const auto leaves = t.leaves();
  const int n = static_cast<int>(leaves.size());

  auto clause = [&](NodeId x, NodeId y) {
    if (t.node(x).trunc != Trunc::root) return false;
    for (NodeId z : leaves) {
      if (t.node(z).color != t.node(y).color) continue;
      if (!qbmg::is_ancestor(t, qbmg::lca(t, x, z), y)) return false;
    }
    return true;
  };

  std::vector<std::string> names;
  std::vector<Color> colors;
  for (NodeId leaf : leaves) {
    names.push_back(t.node(leaf).name);
    colors.push_back(t.node(leaf).color);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NodeId x = leaves[static_cast<std::size_t>(i)];
      NodeId y = leaves[static_cast<std::size_t>(j)];
      if (t.node(x).color == t.node(y).color) continue;
      if (clause(x, y) || clause(y, x))
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  return BiGraph::from_edges(std::move(names), std::move(colors), edges);
}

// Degree-profile recognizers for the three patterns; together with subset
// enumeration they give a search-free reference for forbidden subgraphs.
inline bool induced_is_p6(const BiGraph& sub) {
  if (sub.size() != 6 || sub.edge_count() != 5) return false;
  if (!qbmg::is_connected(sub)) return false;
  for (VertexId v = 0; v < sub.size(); ++v)
    if (sub.degree(v) > 2) return false;
  return true;  // connected, 5 edges, max degree 2: a path on six vertices
}

inline bool induced_is_c6(const BiGraph& sub) {
  if (sub.size() != 6 || sub.edge_count() != 6) return false;
  if (!qbmg::is_connected(sub)) return false;
  for (VertexId v = 0; v < sub.size(); ++v)
    if (sub.degree(v) != 2) return false;
  return true;  // connected 2-regular on six vertices
}

inline bool induced_is_sunlet4(const BiGraph& sub) {
  if (sub.size() != 8 || sub.edge_count() != 8) return false;
  if (!qbmg::is_connected(sub)) return false;
  std::vector<VertexId> cycle;
  for (VertexId v = 0; v < sub.size(); ++v) {
    if (sub.degree(v) == 3)
      cycle.push_back(v);
    else if (sub.degree(v) != 1)
      return false;
  }
  if (cycle.size() != 4) return false;
  // Each degree-3 vertex must keep degree 2 inside the cycle set, which
  // forces exactly one pendant each and a chordless 4-cycle.
  auto inner = qbmg::induced_subgraph(sub, cycle);
  for (VertexId v = 0; v < inner.graph.size(); ++v)
    if (inner.graph.degree(v) != 2) return false;
  return qbmg::is_connected(inner.graph);
}

// Scans all 6- and 8-vertex subsets directly.
inline bool contains_forbidden_reference(const BiGraph& g) {
  const int n = g.size();
  auto scan = [&](int k, auto&& predicate) {
    if (n < k) return false;
    std::vector<VertexId> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      if (predicate(qbmg::induced_subgraph(g, pick).graph)) return true;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) return false;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] =
            pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  };
  return scan(6, [](const BiGraph& sub) {
           return induced_is_p6(sub) || induced_is_c6(sub);
         }) ||
         scan(8, [](const BiGraph& sub) { return induced_is_sunlet4(sub); });
}

// Validates an odd-cycle witness against the edge list it came from.
inline bool odd_walk_ok(const std::vector<VertexId>& walk,
                        std::span<const Edge> edges) {
  if (walk.empty() || walk.size() % 2 == 0) return false;
  std::set<std::pair<VertexId, VertexId>> edge_set;
  for (const auto& [u, v] : edges) {
    edge_set.emplace(u, v);
    edge_set.emplace(v, u);
  }
  if (walk.size() == 1) return edge_set.contains({walk[0], walk[0]});
  for (std::size_t i = 0; i < walk.size(); ++i) {
    VertexId a = walk[i];
    VertexId b = walk[(i + 1) % walk.size()];
    if (!edge_set.contains({a, b})) return false;
  }
  return true;
}

}  // namespace naive
