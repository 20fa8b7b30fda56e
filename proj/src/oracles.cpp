#include "qbmg/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace qbmg {

namespace {

BiGraph make_path6() {
  std::vector<Color> colors;
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i) {
    colors.push_back(i % 2 == 0 ? Color::zero : Color::one);
    names.push_back("p" + std::to_string(i + 1));
  }
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  return BiGraph::from_edges(std::move(names), std::move(colors), edges);
}

BiGraph make_cycle6() {
  std::vector<Color> colors;
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i) {
    colors.push_back(i % 2 == 0 ? Color::zero : Color::one);
    names.push_back("c" + std::to_string(i + 1));
  }
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  return BiGraph::from_edges(std::move(names), std::move(colors), edges);
}

BiGraph make_sunlet4() {
  std::vector<Color> colors;
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) {
    colors.push_back(i % 2 == 0 ? Color::one : Color::zero);
    names.push_back("v" + std::to_string(i + 1));
  }
  for (int i = 0; i < 4; ++i) {
    colors.push_back(i % 2 == 0 ? Color::zero : Color::one);
    names.push_back("u" + std::to_string(i + 1));
  }
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                          {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return BiGraph::from_edges(std::move(names), std::move(colors), edges);
}

bool induced_embedding_ok(const BiGraph& pat, const BiGraph& g,
                          const std::vector<VertexId>& map) {
  for (VertexId a = 0; a < pat.size(); ++a)
    for (VertexId b = a + 1; b < pat.size(); ++b)
      if (pat.has_edge(a, b) != g.has_edge(map[static_cast<std::size_t>(a)],
                                           map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

// Backtracking search for an induced embedding. Pattern vertices are
// assigned in id order; the templates list each vertex adjacent to an
// earlier one, so partial maps stay connected and prune early.
std::optional<std::vector<VertexId>> find_induced(const BiGraph& pat,
                                                  const BiGraph& g) {
  const int pn = pat.size();
  const int gn = g.size();
  if (gn < pn) return std::nullopt;

  std::vector<VertexId> map(static_cast<std::size_t>(pn), -1);
  std::vector<bool> used(static_cast<std::size_t>(gn), false);

  for (int flip = 0; flip < 2; ++flip) {
    auto want_color = [&](VertexId u) {
      Color c = pat.color(u);
      return flip ? opposite(c) : c;
    };
    auto consistent = [&](VertexId u, VertexId v) {
      if (g.color(v) != want_color(u)) return false;
      if (g.degree(v) < pat.degree(u)) return false;
      for (VertexId w = 0; w < u; ++w)
        if (pat.has_edge(u, w) != g.has_edge(v, map[static_cast<std::size_t>(w)]))
          return false;
      return true;
    };
    // Depth-first over assignments, candidates ascending.
    int depth = 0;
    std::vector<VertexId> cursor(static_cast<std::size_t>(pn), 0);
    while (depth >= 0) {
      if (depth == pn) {
        if (induced_embedding_ok(pat, g, map)) return map;
        --depth;  // soundness recheck failed: keep searching
        if (depth >= 0) {
          used[static_cast<std::size_t>(map[static_cast<std::size_t>(depth)])] = false;
          ++cursor[static_cast<std::size_t>(depth)];
        }
        continue;
      }
      VertexId& v = cursor[static_cast<std::size_t>(depth)];
      bool advanced = false;
      for (; v < gn; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (!consistent(depth, v)) continue;
        map[static_cast<std::size_t>(depth)] = v;
        used[static_cast<std::size_t>(v)] = true;
        ++depth;
        if (depth < pn) cursor[static_cast<std::size_t>(depth)] = 0;
        advanced = true;
        break;
      }
      if (!advanced) {
        --depth;
        if (depth >= 0) {
          used[static_cast<std::size_t>(map[static_cast<std::size_t>(depth)])] = false;
          ++cursor[static_cast<std::size_t>(depth)];
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const BiGraph& pattern_graph(PatternId id) {
  static const BiGraph p6 = make_path6();
  static const BiGraph c6 = make_cycle6();
  static const BiGraph sunlet4 = make_sunlet4();
  switch (id) {
    case PatternId::p6: return p6;
    case PatternId::c6: return c6;
    case PatternId::sunlet4: return sunlet4;
  }
  return p6;
}

std::optional<Embedding> find_forbidden(const BiGraph& g, int cap) {
  if (g.size() > cap)
    fail(Errc::size_cap_exceeded,
         "pattern search capped at " + std::to_string(cap) + " vertices");
  for (PatternId id : {PatternId::p6, PatternId::c6, PatternId::sunlet4})
    if (auto map = find_induced(pattern_graph(id), g))
      return Embedding{id, std::move(*map)};
  return std::nullopt;
}

HereditaryCheck hereditary_heart_check(const BiGraph& g, int cap) {
  const int n = g.size();
  if (cap > 30) cap = 30;
  if (n > cap)
    fail(Errc::size_cap_exceeded,
         "hereditary check capped at " + std::to_string(cap) + " vertices");

  // Bitmask scan: subsets in increasing size, lexicographic within a size,
  // so the first violation found has minimum cardinality.
  std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(n), 0);
  std::uint32_t one_mask = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v))
      adj_mask[static_cast<std::size_t>(v)] |= (1u << w);
    if (g.color(v) == Color::one) one_mask |= (1u << v);
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  auto connected = [&](std::uint32_t subset) {
    std::uint32_t seen = subset & (~subset + 1);  // lowest bit
    for (;;) {
      std::uint32_t grow = seen;
      for (std::uint32_t rest = seen; rest;) {
        std::uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        int v = std::countr_zero(bit);
        grow |= adj_mask[static_cast<std::size_t>(v)] & subset;
      }
      if (grow == seen) break;
      seen = grow;
    }
    return seen == subset;
  };
  auto has_heart = [&](std::uint32_t subset) {
    for (std::uint32_t rest = subset; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      std::uint32_t opp = (g.color(v) == Color::zero ? one_mask : ~one_mask) & subset;
      if ((adj_mask[static_cast<std::size_t>(v)] & subset) == opp) return true;
    }
    return false;
  };

  for (int k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing numeric order.
    std::uint32_t subset = (1u << k) - 1;
    while (subset <= full) {
      if (connected(subset) && !has_heart(subset)) {
        std::vector<VertexId> vs;
        for (int v = 0; v < n; ++v)
          if (subset & (1u << v)) vs.push_back(v);
        return HereditaryCheck{false, std::move(vs)};
      }
      std::uint32_t c = subset & (~subset + 1);
      std::uint32_t r = subset + c;
      if (r == 0) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return HereditaryCheck{true, std::nullopt};
}

Witness refine_witness(const BiGraph& g, const Witness& w) {
  const auto* heartless = std::get_if<HeartlessSubgraph>(&w);
  if (heartless == nullptr)
    fail(Errc::invalid_config, "refine_witness expects a heartless witness");
  auto sub = induced_subgraph(g, heartless->vertices);
  auto found = find_forbidden(sub.graph, std::max(sub.graph.size(), 512));
  if (!found)
    fail(Errc::internal_inconsistency,
         "heartless subgraph contains no forbidden pattern");
  std::vector<VertexId> mapped;
  mapped.reserve(found->map.size());
  for (VertexId local : found->map)
    mapped.push_back(sub.original[static_cast<std::size_t>(local)]);
  return Witness{ForbiddenPattern{found->pattern, std::move(mapped)}};
}

bool naive_explain_equivalence(const BiGraph& g, int cap) {
  if (g.size() > cap)
    fail(Errc::size_cap_exceeded,
         "equivalence check capped at " + std::to_string(cap) + " vertices");
  const bool via_tree = heart_tree(g).accepted();
  const bool via_patterns = !find_forbidden(g).has_value();
  const bool via_hereditary = hereditary_heart_check(g, cap).all_contain_heart;
  return via_tree == via_patterns && via_patterns == via_hereditary;
}

}  // namespace qbmg
