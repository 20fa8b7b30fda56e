#include "qbmg/recognition.hpp"

#include <deque>
#include <numeric>
#include <utility>

namespace qbmg {

const char* pattern_name(PatternId id) {
  switch (id) {
    case PatternId::p6: return "P6";
    case PatternId::c6: return "C6";
    case PatternId::sunlet4: return "Sunlet4";
  }
  return "?";
}

Verdict heart_tree(const BiGraph& g) {
  if (g.size() == 0) fail(Errc::empty_graph, "cannot recognize the empty graph");
  if (g.size() == 1)
    return Verdict{PhyloTree::single_leaf(g.name(0), g.color(0))};

  PhyloTree t;
  NodeId root = t.add_root();
  std::deque<std::pair<NodeId, std::vector<VertexId>>> pending;
  std::vector<VertexId> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  pending.emplace_back(root, std::move(all));

  while (!pending.empty()) {
    auto [v, frontier] = std::move(pending.front());
    pending.pop_front();

    auto sub = induced_subgraph(g, frontier);
    auto hearts = heart_vertices(sub.graph);
    if (hearts.empty() && is_connected(sub.graph))
      return Verdict{Witness{HeartlessSubgraph{std::move(frontier)}}};

    std::vector<bool> is_heart(static_cast<std::size_t>(sub.graph.size()), false);
    for (VertexId h : hearts) {
      is_heart[static_cast<std::size_t>(h)] = true;
      VertexId orig = sub.original[static_cast<std::size_t>(h)];
      t.add_leaf(v, g.name(orig), g.color(orig), Trunc::root);
    }

    std::vector<VertexId> rest;
    for (VertexId x = 0; x < sub.graph.size(); ++x)
      if (!is_heart[static_cast<std::size_t>(x)]) rest.push_back(x);
    if (rest.empty()) continue;

    auto peeled = induced_subgraph(sub.graph, rest);
    for (const auto& component : connected_components(peeled.graph)) {
      if (component.size() == 1) {
        VertexId orig = sub.original[static_cast<std::size_t>(
            peeled.original[static_cast<std::size_t>(component[0])])];
        t.add_leaf(v, g.name(orig), g.color(orig), Trunc::self);
      } else {
        NodeId w = t.add_internal(v);
        std::vector<VertexId> originals;
        originals.reserve(component.size());
        for (VertexId x : component)
          originals.push_back(sub.original[static_cast<std::size_t>(
              peeled.original[static_cast<std::size_t>(x)])]);
        pending.emplace_back(w, std::move(originals));
      }
    }
  }

  t.finalize();
  return Verdict{std::move(t)};
}

Verdict recognize_with_colors(int n, std::span<const Edge> edges) {
  return recognize_with_colors(default_names(n), edges);
}

Verdict recognize_with_colors(std::vector<std::string> names,
                              std::span<const Edge> edges) {
  if (names.empty()) fail(Errc::empty_graph, "cannot recognize the empty graph");
  auto result = infer_bipartition(std::move(names), edges);
  if (auto* odd = std::get_if<OddCycleWitness>(&result))
    return Verdict{Witness{OddCycle{std::move(odd->walk)}}};
  return heart_tree(std::get<BiGraph>(result));
}

}  // namespace qbmg
