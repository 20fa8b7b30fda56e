#include "qbmg/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace qbmg {

Color color_from_int(int value) {
  if (value != 0 && value != 1)
    fail(Errc::out_of_range, "color must be 0 or 1, got " + std::to_string(value));
  return value == 0 ? Color::zero : Color::one;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

BiGraph BiGraph::from_edges(std::vector<Color> colors,
                            std::span<const Edge> edges) {
  const int n = static_cast<int>(colors.size());
  return from_edges(default_names(n), std::move(colors), edges);
}

BiGraph BiGraph::from_edges(std::vector<std::string> names,
                            std::vector<Color> colors,
                            std::span<const Edge> edges) {
  if (names.size() != colors.size())
    fail(Errc::invalid_config, "name/color tables differ in length");
  const int n = static_cast<int>(colors.size());
  BiGraph g;
  g.names_ = std::move(names);
  g.colors_ = std::move(colors);
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::out_of_range, "edge endpoint out of range: (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")");
    if (g.colors_[static_cast<std::size_t>(u)] ==
        g.colors_[static_cast<std::size_t>(v)])
      fail(Errc::monochromatic_edge,
           "edge joins same-colored vertices: " + g.names_[static_cast<std::size_t>(u)] +
               " " + g.names_[static_cast<std::size_t>(v)]);
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  g.validate();
  return g;
}

std::size_t BiGraph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& list : adj_) deg_sum += list.size();
  return deg_sum / 2;
}

bool BiGraph::has_edge(VertexId u, VertexId v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int BiGraph::count_color(Color c) const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

std::vector<Edge> BiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void BiGraph::validate() const {
  const int n = size();
  if (names_.size() != colors_.size() || adj_.size() != colors_.size())
    fail(Errc::invalid_config, "inconsistent table sizes");
  std::unordered_set<std::string> seen;
  for (int v = 0; v < n; ++v) {
    const auto& nm = names_[static_cast<std::size_t>(v)];
    if (nm.empty()) fail(Errc::invalid_config, "empty vertex name");
    if (!seen.insert(nm).second)
      fail(Errc::duplicate_vertex, "duplicate vertex name: " + nm);
  }
  for (VertexId u = 0; u < n; ++u) {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    if (!std::is_sorted(list.begin(), list.end()))
      fail(Errc::invalid_config, "adjacency list not sorted");
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      fail(Errc::invalid_config, "duplicate edge in adjacency list");
    for (VertexId v : list) {
      if (v < 0 || v >= n) fail(Errc::out_of_range, "neighbor out of range");
      if (v == u) fail(Errc::invalid_config, "self-loop");
      if (colors_[static_cast<std::size_t>(u)] ==
          colors_[static_cast<std::size_t>(v)])
        fail(Errc::monochromatic_edge,
             "edge joins same-colored vertices: " +
                 names_[static_cast<std::size_t>(u)] + " " +
                 names_[static_cast<std::size_t>(v)]);
      if (!has_edge(v, u)) fail(Errc::invalid_config, "asymmetric adjacency");
    }
  }
}

BipartitionResult infer_bipartition(int n, std::span<const Edge> edges) {
  return infer_bipartition(default_names(n), edges);
}

BipartitionResult infer_bipartition(std::vector<std::string> names,
                                    std::span<const Edge> edges) {
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::out_of_range, "edge endpoint out of range");
    if (u == v) return OddCycleWitness{{u}};  // self-loop: odd closed walk of length 1
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  for (VertexId start = 0; start < n; ++start) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId v : adj[static_cast<std::size_t>(u)]) {
        if (side[static_cast<std::size_t>(v)] == -1) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (side[static_cast<std::size_t>(v)] ==
                   side[static_cast<std::size_t>(u)]) {
          // Conflict edge uv closes an odd walk through the BFS forest:
          // climb both endpoints to their meeting point.
          std::vector<VertexId> up_u{u}, up_v{v};
          VertexId a = u, b = v;
          auto depth = [&](VertexId x) {
            int d = 0;
            for (VertexId y = x; parent[static_cast<std::size_t>(y)] != -1;
                 y = parent[static_cast<std::size_t>(y)])
              ++d;
            return d;
          };
          int da = depth(a), db = depth(b);
          while (da > db) { a = parent[static_cast<std::size_t>(a)]; up_u.push_back(a); --da; }
          while (db > da) { b = parent[static_cast<std::size_t>(b)]; up_v.push_back(b); --db; }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            up_u.push_back(a);
            up_v.push_back(b);
          }
          // up_u ends at the meet, up_v too; walk = u..meet..v (v adjacent to u).
          std::vector<VertexId> walk(up_u.begin(), up_u.end());
          walk.insert(walk.end(), up_v.rbegin() + 1, up_v.rend());
          return OddCycleWitness{std::move(walk)};
        }
      }
    }
  }

  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    colors[static_cast<std::size_t>(v)] =
        side[static_cast<std::size_t>(v)] == 0 ? Color::zero : Color::one;
  std::vector<Edge> unique_edges;
  unique_edges.reserve(edges.size());
  for (const auto& e : edges) unique_edges.push_back(e);
  return BiGraph::from_edges(std::move(names), std::move(colors), unique_edges);
}

InducedSubgraph induced_subgraph(const BiGraph& g,
                                 std::span<const VertexId> vs) {
  std::vector<VertexId> subset(vs.begin(), vs.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<VertexId> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    VertexId v = subset[i];
    if (v < 0 || v >= g.size())
      fail(Errc::out_of_range, "subset vertex out of range");
    local[static_cast<std::size_t>(v)] = static_cast<VertexId>(i);
  }
  std::vector<std::string> names;
  std::vector<Color> colors;
  names.reserve(subset.size());
  colors.reserve(subset.size());
  for (VertexId v : subset) {
    names.push_back(g.name(v));
    colors.push_back(g.color(v));
  }
  std::vector<Edge> edges;
  for (VertexId v : subset)
    for (VertexId w : g.neighbors(v))
      if (v < w && local[static_cast<std::size_t>(w)] != -1)
        edges.emplace_back(local[static_cast<std::size_t>(v)],
                           local[static_cast<std::size_t>(w)]);
  return InducedSubgraph{
      BiGraph::from_edges(std::move(names), std::move(colors), edges),
      std::move(subset)};
}

std::vector<std::vector<VertexId>> connected_components(const BiGraph& g) {
  std::vector<std::vector<VertexId>> parts;
  std::vector<bool> visited(static_cast<std::size_t>(g.size()), false);
  for (VertexId start = 0; start < g.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<VertexId> part;
    std::deque<VertexId> queue{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      part.push_back(u);
      for (VertexId v : g.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;  // discovery by ascending start id orders parts by smallest member
}

bool is_connected(const BiGraph& g) {
  return connected_components(g).size() == 1;
}

std::vector<VertexId> heart_vertices(const BiGraph& g) {
  const int opposite_count[2] = {g.count_color(Color::one),
                                 g.count_color(Color::zero)};
  std::vector<VertexId> hearts;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) == opposite_count[color_index(g.color(v))])
      hearts.push_back(v);
  return hearts;
}

BiGraph disjoint_union(std::span<const BiGraph> parts) {
  if (parts.empty()) fail(Errc::invalid_config, "union of zero graphs");
  std::unordered_set<std::string> seen;
  bool unique = true;
  for (const auto& part : parts)
    for (VertexId v = 0; v < part.size(); ++v)
      if (!seen.insert(part.name(v)).second) unique = false;

  std::vector<std::string> names;
  std::vector<Color> colors;
  std::vector<Edge> edges;
  VertexId offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const BiGraph& part = parts[i];
    for (VertexId v = 0; v < part.size(); ++v) {
      names.push_back(unique ? part.name(v)
                             : std::to_string(i) + "." + part.name(v));
      colors.push_back(part.color(v));
    }
    for (const auto& [u, v] : part.edges())
      edges.emplace_back(u + offset, v + offset);
    offset += part.size();
  }
  return BiGraph::from_edges(std::move(names), std::move(colors), edges);
}

}  // namespace qbmg
