#include "qbmg/genlab.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qbmg/formats.hpp"

namespace qbmg {

namespace {

void check_prob(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::invalid_config, std::string(what) + " must lie in [0,1]");
}

}  // namespace

PhyloTree random_tree(const TreeGenConfig& cfg) {
  if (cfg.leaf_count < 1)
    fail(Errc::invalid_config, "leaf_count must be positive");
  check_prob(cfg.internal_bias, "internal_bias");
  check_prob(cfg.trunc_self_prob, "trunc_self_prob");
  check_prob(cfg.color_prob, "color_prob");

  SplitMix64 rng{cfg.seed};
  auto draw_color = [&] {
    return rng.next_unit() < cfg.color_prob ? Color::one : Color::zero;
  };
  if (cfg.leaf_count == 1) return PhyloTree::single_leaf("v0", draw_color());

  auto draw_trunc = [&] {
    return rng.next_unit() < cfg.trunc_self_prob ? Trunc::self : Trunc::root;
  };

  PhyloTree t;
  NodeId root = t.add_root();
  int next_name = 0;
  struct Item {
    NodeId node;
    int leaves;
  };
  // Preorder construction: draws happen left to right, so output depends
  // only on the seed.
  std::vector<Item> stack{{root, cfg.leaf_count}};
  while (!stack.empty()) {
    auto [node, m] = stack.back();
    stack.pop_back();
    int k;
    if (m == 2)
      k = 2;
    else if (rng.next_unit() < cfg.internal_bias)
      k = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - 1)));
    else
      k = m;  // flat split: a star at bias zero
    std::vector<int> parts(static_cast<std::size_t>(k), 1);
    for (int extra = 0; extra < m - k; ++extra)
      ++parts[rng.next_below(static_cast<std::uint64_t>(k))];
    // Children are created left to right; recursion items are pushed in
    // reverse so the stack pops them in order.
    std::vector<Item> queued;
    for (int part : parts) {
      if (part == 1) {
        t.add_leaf(node, "v" + std::to_string(next_name++), draw_color(),
                   draw_trunc());
      } else {
        queued.push_back(Item{t.add_internal(node), part});
      }
    }
    for (auto it = queued.rbegin(); it != queued.rend(); ++it)
      stack.push_back(*it);
  }
  t.finalize();
  return t;
}

BiGraph random_bipartite(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) fail(Errc::invalid_config, "vertex count must be positive");
  check_prob(edge_prob, "edge_prob");
  SplitMix64 rng{seed};
  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = rng.next_unit() < 0.5 ? Color::one : Color::zero;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (colors[static_cast<std::size_t>(u)] !=
              colors[static_cast<std::size_t>(v)] &&
          rng.next_unit() < edge_prob)
        edges.emplace_back(u, v);
  return BiGraph::from_edges(std::move(colors), edges);
}

namespace {

// Lexicographically minimal color-string + upper-triangle adjacency string
// over vertex relabelings; positions are filled class-by-class, so only
// orientations placing the larger class first compete.
std::string canonical_candidate(const BiGraph& g, bool swap_colors) {
  const int n = g.size();
  std::vector<VertexId> zeros, ones;
  for (VertexId v = 0; v < n; ++v) {
    Color c = swap_colors ? opposite(g.color(v)) : g.color(v);
    (c == Color::zero ? zeros : ones).push_back(v);
  }
  std::string best;
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  auto consider = [&] {
    std::string s;
    s.reserve(static_cast<std::size_t>(n + n * (n - 1) / 2));
    for (std::size_t i = 0; i < zeros.size(); ++i) s.push_back('0');
    for (std::size_t i = 0; i < ones.size(); ++i) s.push_back('1');
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s.push_back(g.has_edge(order[static_cast<std::size_t>(i)],
                               order[static_cast<std::size_t>(j)])
                        ? '1'
                        : '0');
    if (best.empty() || s < best) best = std::move(s);
  };
  std::sort(zeros.begin(), zeros.end());
  std::sort(ones.begin(), ones.end());
  do {
    do {
      std::copy(zeros.begin(), zeros.end(), order.begin());
      std::copy(ones.begin(), ones.end(),
                order.begin() + static_cast<std::ptrdiff_t>(zeros.size()));
      consider();
    } while (std::next_permutation(ones.begin(), ones.end()));
  } while (std::next_permutation(zeros.begin(), zeros.end()));
  return best;
}

}  // namespace

std::string canonical_form(const BiGraph& g) {
  if (g.size() > 8)
    fail(Errc::size_cap_exceeded, "canonical form guarded at 8 vertices");
  const int n0 = g.count_color(Color::zero);
  const int n1 = g.count_color(Color::one);
  if (n0 > n1) return canonical_candidate(g, false);
  if (n1 > n0) return canonical_candidate(g, true);
  return std::min(canonical_candidate(g, false), canonical_candidate(g, true));
}

void enumerate_bipartite(const EnumConfig& cfg,
                         const std::function<bool(const BiGraph&)>& emit) {
  if (cfg.max_n < 1) fail(Errc::invalid_config, "max_n must be positive");
  if (cfg.max_n > 8)
    fail(Errc::size_cap_exceeded, "exhaustive enumeration guarded at 8");

  std::unordered_set<std::string> seen;
  for (int n = 1; n <= cfg.max_n; ++n) {
    const auto names = default_names(n);
    for (int a = 0; a <= n / 2; ++a) {
      // Subsets of size a carry color one; lexicographic combinations.
      std::vector<int> pick(static_cast<std::size_t>(a));
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        std::vector<Color> colors(static_cast<std::size_t>(n), Color::zero);
        for (int v : pick) colors[static_cast<std::size_t>(v)] = Color::one;
        std::vector<Edge> cross;
        for (VertexId u = 0; u < n; ++u)
          for (VertexId v = u + 1; v < n; ++v)
            if (colors[static_cast<std::size_t>(u)] !=
                colors[static_cast<std::size_t>(v)])
              cross.emplace_back(u, v);
        const std::uint64_t masks = 1ULL << cross.size();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          std::vector<Edge> edges;
          for (std::size_t b = 0; b < cross.size(); ++b)
            if (mask & (1ULL << b)) edges.push_back(cross[b]);
          BiGraph g = BiGraph::from_edges(names, colors, edges);
          if (cfg.connected_only && !is_connected(g)) continue;
          if (cfg.dedupe == Dedupe::iso_classes &&
              !seen.insert(canonical_form(g)).second)
            continue;
          if (!emit(g)) return;
        }
        // next combination
        int i = a - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - a + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < a; ++j)
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
}

std::vector<BiGraph> enumerate_bipartite_all(const EnumConfig& cfg) {
  std::vector<BiGraph> out;
  enumerate_bipartite(cfg, [&](const BiGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

CrossVerdicts cross_check_one(const BiGraph& g, const OracleCaps& caps) {
  CrossVerdicts v;
  v.via_heart_tree = heart_tree(g).accepted();
  v.via_forbidden_free = !find_forbidden(g, caps.pattern_cap).has_value();
  v.via_hereditary = hereditary_heart_check(g, caps.hereditary_cap).all_contain_heart;
  return v;
}

std::string CrossChecker::next_id() const {
  std::string digits = std::to_string(report_.total);
  return "g" + std::string(digits.size() < 6 ? 6 - digits.size() : 0, '0') +
         digits;
}

CrossVerdicts CrossChecker::add(const BiGraph& g) {
  const std::string id = next_id();
  auto verdicts = cross_check_one(g, caps_);
  ++report_.total;
  if (verdicts.agree()) {
    ++(verdicts.accepted() ? report_.accepted : report_.rejected);
  } else {
    ++report_.disagreements;
    if (!report_.first_disagreement)
      report_.first_disagreement = {id, serialize_graph(g)};
  }
  return verdicts;
}

CrossCheckReport cross_check(std::span<const BiGraph> corpus,
                             const OracleCaps& caps) {
  CrossChecker checker(caps);
  for (const auto& g : corpus)
    if (!checker.add(g).agree()) break;
  return checker.report();
}

}  // namespace qbmg
