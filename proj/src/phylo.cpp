#include "qbmg/phylo.hpp"

#include <algorithm>
#include <unordered_set>

namespace qbmg {

PhyloTree PhyloTree::single_leaf(std::string name, Color color) {
  PhyloTree t;
  Node node;
  node.name = std::move(name);
  node.color = color;
  node.trunc = Trunc::self;
  t.nodes_.push_back(std::move(node));
  t.root_ = 0;
  t.finalize();
  return t;
}

NodeId PhyloTree::add_root() {
  if (root_ != kNoNode) fail(Errc::invalid_config, "tree already has a root");
  nodes_.emplace_back();
  root_ = 0;
  return root_;
}

NodeId PhyloTree::add_internal(NodeId parent) {
  NodeId id = static_cast<NodeId>(nodes_.size());
  Node node;
  node.parent = parent;
  nodes_.push_back(std::move(node));
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

NodeId PhyloTree::add_leaf(NodeId parent, std::string name, Color color,
                           Trunc trunc) {
  NodeId id = static_cast<NodeId>(nodes_.size());
  Node node;
  node.parent = parent;
  node.name = std::move(name);
  node.color = color;
  node.trunc = trunc;
  nodes_.push_back(std::move(node));
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

void PhyloTree::finalize() {
  depth_.assign(nodes_.size(), 0);
  for (NodeId v : preorder())
    if (node(v).parent != kNoNode)
      depth_[static_cast<std::size_t>(v)] =
          depth_[static_cast<std::size_t>(node(v).parent)] + 1;
  finalized_ = true;
  validate();
}

std::vector<NodeId> PhyloTree::preorder() const {
  std::vector<NodeId> order;
  if (root_ == kNoNode) return order;
  order.reserve(nodes_.size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& kids = node(v).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<NodeId> PhyloTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v : preorder())
    if (is_leaf(v)) out.push_back(v);
  return out;
}

int PhyloTree::leaf_count() const {
  int count = 0;
  for (const auto& node : nodes_)
    if (node.children.empty()) ++count;
  return count;
}

int PhyloTree::internal_count() const {
  return node_count() - leaf_count();
}

void PhyloTree::validate() const {
  if (root_ == kNoNode || nodes_.empty())
    fail(Errc::invalid_config, "tree has no root");
  if (node(root_).parent != kNoNode)
    fail(Errc::invalid_config, "root has a parent");
  const auto order = preorder();
  if (order.size() != nodes_.size())
    fail(Errc::invalid_config, "unreachable nodes in arena");
  std::unordered_set<std::string> names;
  for (NodeId v = 0; v < node_count(); ++v) {
    const Node& nd = node(v);
    for (NodeId c : nd.children)
      if (node(c).parent != v)
        fail(Errc::invalid_config, "child/parent link mismatch");
    if (nd.children.size() == 1)
      fail(Errc::unary_internal_node,
           "internal node with a single child is not phylogenetic");
    if (nd.children.empty()) {
      if (nd.name.empty()) fail(Errc::invalid_config, "leaf without a name");
      if (!names.insert(nd.name).second)
        fail(Errc::duplicate_leaf_name, "duplicate leaf name: " + nd.name);
    }
  }
  if (node_count() == 1 && node(root_).trunc != Trunc::self)
    fail(Errc::single_leaf_root_trunc,
         "single-node tree must carry the self truncation");
}

NodeId lca(const PhyloTree& t, NodeId a, NodeId b) {
  if (!t.is_leaf(a) || !t.is_leaf(b))
    fail(Errc::not_a_leaf, "lca arguments must be leaves");
  while (a != b) {
    if (t.depth(a) < t.depth(b))
      b = t.node(b).parent;
    else
      a = t.node(a).parent;
  }
  return a;
}

bool is_ancestor(const PhyloTree& t, NodeId v, NodeId w) {
  while (t.depth(w) > t.depth(v)) w = t.node(w).parent;
  return v == w;
}

PhyloTree contract_arc(const PhyloTree& t, NodeId v, NodeId w) {
  if (v < 0 || v >= t.node_count() || w < 0 || w >= t.node_count())
    fail(Errc::out_of_range, "node id out of range");
  if (t.is_leaf(w) || t.node(w).parent != v)
    fail(Errc::not_internal_arc, "not an internal arc");

  PhyloTree out;
  struct Item {
    NodeId src;
    NodeId dst_parent;
  };
  out.add_root();
  std::vector<Item> stack;
  // Children of src get copied under dst_parent; w is transparent.
  auto push_children = [&](NodeId src, NodeId dst_parent,
                           std::vector<Item>& stk) {
    const auto& kids = t.node(src).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      stk.push_back(Item{*it, dst_parent});
  };
  push_children(t.root(), 0, stack);
  while (!stack.empty()) {
    auto [src, dst_parent] = stack.back();
    stack.pop_back();
    if (src == w) {
      // Splice w's children in place. They were pushed after w's siblings,
      // so re-push them now to keep the original order.
      push_children(w, dst_parent, stack);
      continue;
    }
    const auto& nd = t.node(src);
    if (nd.children.empty()) {
      out.add_leaf(dst_parent, nd.name, nd.color, nd.trunc);
    } else {
      NodeId dst = out.add_internal(dst_parent);
      push_children(src, dst, stack);
    }
  }
  out.finalize();
  return out;
}

std::vector<std::pair<NodeId, NodeId>> internal_arcs(const PhyloTree& t) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId v : t.preorder())
    if (!t.is_leaf(v) && t.node(v).parent != kNoNode)
      arcs.emplace_back(t.node(v).parent, v);
  return arcs;
}

ColorSet subtree_colors(const PhyloTree& t, NodeId v) {
  ColorSet set;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (t.is_leaf(u))
      set.add(t.node(u).color);
    else
      for (NodeId c : t.node(u).children) stack.push_back(c);
  }
  return set;
}

}  // namespace qbmg
