// Shared fixtures: the small graphs and explaining trees exercised across
// the test suites, built programmatically so tests do not depend on parsers.
#pragma once

#include <string>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/phylo.hpp"

namespace fixtures {

using qbmg::BiGraph;
using qbmg::Color;
using qbmg::Edge;
using qbmg::NodeId;
using qbmg::PhyloTree;
using qbmg::Trunc;

inline std::vector<std::string> x_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::vector<Color> colors_from(std::initializer_list<int> values) {
  std::vector<Color> colors;
  for (int v : values) colors.push_back(qbmg::color_from_int(v));
  return colors;
}

// --- graphs ---------------------------------------------------------------

inline BiGraph k2() {
  return BiGraph::from_edges(x_names(2), colors_from({0, 1}),
                             std::vector<Edge>{{0, 1}});
}

// Path x1-x2-x3-x4, colored to match p4_tree().
inline BiGraph p4() {
  return BiGraph::from_edges(x_names(4), colors_from({1, 0, 1, 0}),
                             std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

inline BiGraph p5() {
  return BiGraph::from_edges(
      x_names(5), colors_from({1, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

inline BiGraph p6() {
  return BiGraph::from_edges(
      x_names(6), colors_from({0, 1, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

inline BiGraph c6() {
  return BiGraph::from_edges(
      x_names(6), colors_from({0, 1, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

inline BiGraph k23() {
  return BiGraph::from_edges(
      x_names(5), colors_from({0, 0, 1, 1, 1}),
      std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// 4-cycle v1..v4 with one pendant u_i per cycle vertex.
inline BiGraph sunlet4() {
  std::vector<std::string> names;
  for (int i = 1; i <= 4; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) names.push_back("u" + std::to_string(i));
  return BiGraph::from_edges(
      std::move(names), colors_from({1, 0, 1, 0, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Two disjoint edges x1-x2 and x3-x4 (the graph two_cherries_tree explains).
inline BiGraph two_edges() {
  return BiGraph::from_edges(x_names(4), colors_from({0, 1, 0, 1}),
                             std::vector<Edge>{{0, 1}, {2, 3}});
}

// Path x-y-z with endpoints of one color.
inline BiGraph path3_xyz() {
  return BiGraph::from_edges({"x", "y", "z"}, colors_from({1, 0, 1}),
                             std::vector<Edge>{{0, 1}, {1, 2}});
}

// Five vertices, edges {x1x4, x2x3, x3x4, x4x5}: a star at x4 plus the
// cherry x2-x3 hanging off it.
inline BiGraph tail5() {
  return BiGraph::from_edges(
      x_names(5), colors_from({1, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}, {3, 4}});
}

// Five vertices, edges {x1x2, x1x4, x2x3, x3x4, x4x5}: 4-cycle plus pendant.
inline BiGraph c4_pendant() {
  return BiGraph::from_edges(
      x_names(5), colors_from({1, 0, 1, 0, 1}),
      std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4}});
}

// --- trees ----------------------------------------------------------------

// ((x1,x2),(x3,x4)) with u(x2)=self and u=root elsewhere; explains
// two_edges() with arcs x1->x2, x3->x4, x4->x3.
inline PhyloTree two_cherries_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  NodeId left = t.add_internal(root);
  t.add_leaf(left, "x1", Color::zero, Trunc::root);
  t.add_leaf(left, "x2", Color::one, Trunc::self);
  NodeId right = t.add_internal(root);
  t.add_leaf(right, "x3", Color::zero, Trunc::root);
  t.add_leaf(right, "x4", Color::one, Trunc::root);
  t.finalize();
  return t;
}

// (x1,x2,(x3,x4)) with u(x1)=self; explains p4().
inline PhyloTree p4_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  t.add_leaf(root, "x1", Color::one, Trunc::self);
  t.add_leaf(root, "x2", Color::zero, Trunc::root);
  NodeId cherry = t.add_internal(root);
  t.add_leaf(cherry, "x3", Color::one, Trunc::root);
  t.add_leaf(cherry, "x4", Color::zero, Trunc::root);
  t.finalize();
  return t;
}

// ((x1,x2),x3,(x4,x5)) all u=root; explains p5().
inline PhyloTree p5_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  NodeId left = t.add_internal(root);
  t.add_leaf(left, "x1", Color::one, Trunc::root);
  t.add_leaf(left, "x2", Color::zero, Trunc::root);
  t.add_leaf(root, "x3", Color::one, Trunc::root);
  NodeId right = t.add_internal(root);
  t.add_leaf(right, "x4", Color::zero, Trunc::root);
  t.add_leaf(right, "x5", Color::one, Trunc::root);
  t.finalize();
  return t;
}

// (x1,(x2,x3),x4,x5) with u(x1)=u(x5)=self; explains tail5().
inline PhyloTree tail5_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  t.add_leaf(root, "x1", Color::one, Trunc::self);
  NodeId cherry = t.add_internal(root);
  t.add_leaf(cherry, "x2", Color::zero, Trunc::root);
  t.add_leaf(cherry, "x3", Color::one, Trunc::root);
  t.add_leaf(root, "x4", Color::zero, Trunc::root);
  t.add_leaf(root, "x5", Color::one, Trunc::self);
  t.finalize();
  return t;
}

// ((x1,x2,x3),x4,x5) with u(x5)=self; explains c4_pendant().
inline PhyloTree c4_pendant_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  NodeId triple = t.add_internal(root);
  t.add_leaf(triple, "x1", Color::one, Trunc::root);
  t.add_leaf(triple, "x2", Color::zero, Trunc::root);
  t.add_leaf(triple, "x3", Color::one, Trunc::root);
  t.add_leaf(root, "x4", Color::zero, Trunc::root);
  t.add_leaf(root, "x5", Color::one, Trunc::self);
  t.finalize();
  return t;
}

// ((x,y),z) all u=root: explains path3_xyz() but is not least-resolved,
// although every internal subtree is non-monochromatic.
inline PhyloTree nested_path3_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  NodeId inner = t.add_internal(root);
  t.add_leaf(inner, "x", Color::one, Trunc::root);
  t.add_leaf(inner, "y", Color::zero, Trunc::root);
  t.add_leaf(root, "z", Color::one, Trunc::root);
  t.finalize();
  return t;
}

// (x,y,z) all u=root: the contraction of nested_path3_tree, still explains
// path3_xyz().
inline PhyloTree star_path3_tree() {
  PhyloTree t;
  NodeId root = t.add_root();
  t.add_leaf(root, "x", Color::one, Trunc::root);
  t.add_leaf(root, "y", Color::zero, Trunc::root);
  t.add_leaf(root, "z", Color::one, Trunc::root);
  t.finalize();
  return t;
}

inline PhyloTree star_tree(const std::vector<std::string>& names,
                           const std::vector<Color>& colors, Trunc trunc) {
  PhyloTree t;
  NodeId root = t.add_root();
  for (std::size_t i = 0; i < names.size(); ++i)
    t.add_leaf(root, names[i], colors[i], trunc);
  t.finalize();
  return t;
}

// Rebuilds a tree with every leaf name prefixed; keeps structure, colors and
// truncation choices.
inline PhyloTree prefix_leaves(const PhyloTree& t, const std::string& prefix) {
  if (t.node_count() == 1)
    return PhyloTree::single_leaf(prefix + t.node(t.root()).name,
                                  t.node(t.root()).color);
  PhyloTree out;
  struct Item {
    NodeId src, dst_parent;
  };
  NodeId root = out.add_root();
  std::vector<Item> stack;
  const auto& kids = t.node(t.root()).children;
  for (auto it = kids.rbegin(); it != kids.rend(); ++it)
    stack.push_back({*it, root});
  while (!stack.empty()) {
    auto [src, dst_parent] = stack.back();
    stack.pop_back();
    const auto& nd = t.node(src);
    if (nd.children.empty()) {
      out.add_leaf(dst_parent, prefix + nd.name, nd.color, nd.trunc);
    } else {
      NodeId dst = out.add_internal(dst_parent);
      for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
        stack.push_back({*it, dst});
    }
  }
  out.finalize();
  return out;
}

inline NodeId leaf_named(const PhyloTree& t, const std::string& name) {
  for (NodeId v : t.leaves())
    if (t.node(v).name == name) return v;
  return qbmg::kNoNode;
}

}  // namespace fixtures
