#include "qbmg/semantics.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace qbmg {

namespace {

// Per-node color presence over the subtree leaves.
std::vector<ColorSet> subtree_color_table(const PhyloTree& t) {
  std::vector<ColorSet> table(static_cast<std::size_t>(t.node_count()));
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (t.is_leaf(v)) {
      table[static_cast<std::size_t>(v)].add(t.node(v).color);
    } else {
      for (NodeId c : t.node(v).children) {
        const auto& cs = table[static_cast<std::size_t>(c)];
        if (cs.has_zero) table[static_cast<std::size_t>(v)].has_zero = true;
        if (cs.has_one) table[static_cast<std::size_t>(v)].has_one = true;
      }
    }
  }
  return table;
}

std::vector<NodeId> opposite_leaves_below(const PhyloTree& t, NodeId top,
                                          Color color) {
  std::vector<NodeId> result;
  std::vector<NodeId> stack{top};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) {
      if (t.node(v).color != color) result.push_back(v);
    } else {
      for (NodeId c : t.node(v).children) stack.push_back(c);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<NodeId> best_matches_from(const PhyloTree& t, NodeId leaf,
                                      const std::vector<ColorSet>& table) {
  const Color mine = t.node(leaf).color;
  NodeId v = leaf;
  while (v != kNoNode && !table[static_cast<std::size_t>(v)].has(opposite(mine)))
    v = t.node(v).parent;
  if (v == kNoNode) return {};
  return opposite_leaves_below(t, v, mine);
}

}  // namespace

std::size_t DirectedQbmg::arc_count() const {
  std::size_t total = 0;
  for (const auto& list : out) total += list.size();
  return total;
}

std::vector<Edge> DirectedQbmg::arcs() const {
  std::vector<Edge> result;
  result.reserve(arc_count());
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : out[static_cast<std::size_t>(u)]) result.emplace_back(u, v);
  return result;
}

std::vector<NodeId> best_matches(const PhyloTree& t, NodeId leaf) {
  if (leaf < 0 || leaf >= t.node_count() || !t.is_leaf(leaf))
    fail(Errc::not_a_leaf, "best_matches requires a leaf");
  return best_matches_from(t, leaf, subtree_color_table(t));
}

std::vector<NodeId> best_matches_by_lca(const PhyloTree& t, NodeId leaf) {
  if (leaf < 0 || leaf >= t.node_count() || !t.is_leaf(leaf))
    fail(Errc::not_a_leaf, "best_matches requires a leaf");
  const Color mine = t.node(leaf).color;
  std::vector<NodeId> others;
  for (NodeId y : t.leaves())
    if (t.node(y).color != mine) others.push_back(y);
  std::vector<NodeId> result;
  for (NodeId y : others) {
    NodeId meet = lca(t, leaf, y);
    bool minimal = true;
    for (NodeId z : others)
      if (!is_ancestor(t, lca(t, leaf, z), meet)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(y);
  }
  std::sort(result.begin(), result.end());
  return result;
}

DirectedQbmg directed_qbmg(const PhyloTree& t) {
  const auto leaves = t.leaves();
  const auto table = subtree_color_table(t);
  std::unordered_map<NodeId, VertexId> index;
  index.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    index.emplace(leaves[i], static_cast<VertexId>(i));

  DirectedQbmg d;
  d.names.reserve(leaves.size());
  d.colors.reserve(leaves.size());
  d.out.assign(leaves.size(), {});
  for (NodeId leaf : leaves) {
    d.names.push_back(t.node(leaf).name);
    d.colors.push_back(t.node(leaf).color);
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (t.node(leaves[i]).trunc != Trunc::root) continue;
    for (NodeId match : best_matches_from(t, leaves[i], table))
      d.out[i].push_back(index.at(match));
    std::sort(d.out[i].begin(), d.out[i].end());
  }
  return d;
}

ExplainedGraph explain(const PhyloTree& t) {
  const auto d = directed_qbmg(t);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < d.size(); ++u)
    for (VertexId v : d.out[static_cast<std::size_t>(u)])
      edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ExplainedGraph{BiGraph::from_edges(d.names, d.colors, edges),
                        t.leaves()};
}

namespace {

// Maps explained-graph vertices onto g's vertices by name; throws when the
// name sets differ.
std::vector<VertexId> match_names(const BiGraph& explained, const BiGraph& g) {
  if (explained.size() != g.size())
    fail(Errc::name_mismatch, "leaf and vertex name sets differ in size");
  std::unordered_map<std::string, VertexId> by_name;
  by_name.reserve(static_cast<std::size_t>(g.size()));
  for (VertexId v = 0; v < g.size(); ++v) by_name.emplace(g.name(v), v);
  std::vector<VertexId> to_g(static_cast<std::size_t>(explained.size()));
  for (VertexId v = 0; v < explained.size(); ++v) {
    auto it = by_name.find(explained.name(v));
    if (it == by_name.end())
      fail(Errc::name_mismatch, "no vertex named " + explained.name(v));
    to_g[static_cast<std::size_t>(v)] = it->second;
  }
  return to_g;
}

bool same_graph_under_names(const BiGraph& explained, const BiGraph& g) {
  const auto to_g = match_names(explained, g);
  for (VertexId v = 0; v < explained.size(); ++v)
    if (explained.color(v) != g.color(to_g[static_cast<std::size_t>(v)]))
      return false;
  if (explained.edge_count() != g.edge_count()) return false;
  for (const auto& [u, v] : explained.edges())
    if (!g.has_edge(to_g[static_cast<std::size_t>(u)],
                    to_g[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

}  // namespace

bool check_explains(const PhyloTree& t, const BiGraph& g) {
  return same_graph_under_names(explain(t).graph, g);
}

bool check_least_resolved(const PhyloTree& t, const BiGraph& g) {
  if (!check_explains(t, g))
    fail(Errc::not_explaining, "tree does not explain the graph");
  for (const auto& [v, w] : internal_arcs(t)) {
    PhyloTree contracted = contract_arc(t, v, w);
    if (check_explains(contracted, g)) return false;
  }
  return true;
}

std::string LrtViolation::describe(const PhyloTree&, const BiGraph& g) const {
  switch (kind) {
    case Kind::internal_without_edge_lca:
      return "internal node " + std::to_string(node) +
             " is the lca of no edge";
    case Kind::monochromatic_internal:
      return "subtree of internal node " + std::to_string(node) +
             " is monochromatic";
    case Kind::edge_without_parent_cover:
      return "edge " + g.name(edge.first) + "-" + g.name(edge.second) +
             " has no endpoint whose parent covers the other";
  }
  return {};
}

std::vector<LrtViolation> validate_lrt_structure(const PhyloTree& t,
                                                 const BiGraph& g) {
  if (!check_explains(t, g))
    fail(Errc::not_explaining, "tree does not explain the graph");

  std::unordered_map<std::string, NodeId> leaf_by_name;
  for (NodeId v : t.leaves()) leaf_by_name.emplace(t.node(v).name, v);
  auto leaf_of = [&](VertexId v) { return leaf_by_name.at(g.name(v)); };

  std::vector<LrtViolation> violations;
  const bool disconnected = connected_components(g).size() > 1;

  std::set<NodeId> edge_lcas;
  for (const auto& [x, y] : g.edges())
    edge_lcas.insert(lca(t, leaf_of(x), leaf_of(y)));

  for (NodeId v : t.preorder()) {
    if (t.is_leaf(v)) continue;
    if (v == t.root() && disconnected) continue;  // union point of components
    if (!edge_lcas.contains(v))
      violations.push_back(
          {LrtViolation::Kind::internal_without_edge_lca, v, {}});
    if (!subtree_colors(t, v).both())
      violations.push_back(
          {LrtViolation::Kind::monochromatic_internal, v, {}});
  }

  for (const auto& [x, y] : g.edges()) {
    NodeId lx = leaf_of(x), ly = leaf_of(y);
    bool covered =
        (t.node(lx).trunc == Trunc::root &&
         is_ancestor(t, t.node(lx).parent, ly)) ||
        (t.node(ly).trunc == Trunc::root &&
         is_ancestor(t, t.node(ly).parent, lx));
    if (!covered)
      violations.push_back({LrtViolation::Kind::edge_without_parent_cover,
                            kNoNode, Edge{x, y}});
  }
  return violations;
}

PhyloTree union_explainer(std::span<const PhyloTree> trees) {
  if (trees.empty()) fail(Errc::invalid_config, "union of zero trees");
  if (trees.size() == 1) return trees.front();
  for (const auto& t : trees)
    if (t.leaf_count() > 1 && !subtree_colors(t, t.root()).both())
      fail(Errc::monochromatic_component,
           "multi-leaf component tree is monochromatic");

  PhyloTree out;
  NodeId root = out.add_root();
  for (const auto& t : trees) {
    // Copy each input below the fresh root, preserving child order.
    struct Item {
      NodeId src;
      NodeId dst_parent;
    };
    std::vector<Item> stack{{t.root(), root}};
    while (!stack.empty()) {
      auto [src, dst_parent] = stack.back();
      stack.pop_back();
      const auto& nd = t.node(src);
      if (nd.children.empty()) {
        out.add_leaf(dst_parent, nd.name, nd.color, nd.trunc);
      } else {
        NodeId dst = out.add_internal(dst_parent);
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
          stack.push_back({*it, dst});
      }
    }
  }
  out.finalize();
  return out;
}

}  // namespace qbmg
