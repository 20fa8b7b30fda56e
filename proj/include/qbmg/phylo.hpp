#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/errors.hpp"

namespace qbmg {

using NodeId = std::int32_t;
constexpr NodeId kNoNode = -1;

// Per-leaf truncation choice: `self` stops the best-match search at the leaf
// itself (no outgoing arcs), `root` lets it run to the root.
enum class Trunc : std::uint8_t { self, root };

// Rooted phylogenetic tree with a binary leaf coloring and per-leaf
// truncation choice. Every internal node has at least two children; the only
// exception is the degenerate single-node tree whose root is itself a leaf.
// Children are ordered and all traversals follow that order.
//
// Build incrementally (add_root / add_internal / add_leaf), then finalize().
// Finalized trees are immutable; operations that change structure return a
// new tree.
class PhyloTree {
 public:
  struct Node {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    std::string name;           // leaves only
    Color color = Color::zero;  // leaves only
    Trunc trunc = Trunc::self;  // leaves only
  };

  PhyloTree() = default;

  static PhyloTree single_leaf(std::string name, Color color);

  NodeId add_root();
  NodeId add_internal(NodeId parent);
  NodeId add_leaf(NodeId parent, std::string name, Color color, Trunc trunc);
  void finalize();  // computes depths and validates

  NodeId root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(NodeId v) const { return nodes_[static_cast<std::size_t>(v)]; }
  bool is_leaf(NodeId v) const { return node(v).children.empty(); }
  int depth(NodeId v) const { return depth_[static_cast<std::size_t>(v)]; }

  std::vector<NodeId> preorder() const;
  std::vector<NodeId> leaves() const;  // preorder
  int leaf_count() const;
  int internal_count() const;

  void validate() const;

 private:
  std::vector<Node> nodes_;
  std::vector<int> depth_;
  NodeId root_ = kNoNode;
  bool finalized_ = false;
};

// Deepest common ancestor of two leaves (a node is an ancestor of itself).
NodeId lca(const PhyloTree& t, NodeId a, NodeId b);

// True iff w lies in the subtree rooted at v (reflexive).
bool is_ancestor(const PhyloTree& t, NodeId v, NodeId w);

// Contracts the internal arc v->w: w's children replace w in v's child list,
// preserving order. Leaf payloads are unchanged. Returns a fresh tree.
PhyloTree contract_arc(const PhyloTree& t, NodeId v, NodeId w);

// All parent->child arcs whose child is internal, in preorder.
std::vector<std::pair<NodeId, NodeId>> internal_arcs(const PhyloTree& t);

// Colors of the leaves below (and including) v.
ColorSet subtree_colors(const PhyloTree& t, NodeId v);

}  // namespace qbmg
