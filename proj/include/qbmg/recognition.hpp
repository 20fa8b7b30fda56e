#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/phylo.hpp"

namespace qbmg {

enum class PatternId : std::uint8_t { p6, c6, sunlet4 };
const char* pattern_name(PatternId id);

// Connected induced subgraph with no heart-vertex; certifies rejection.
struct HeartlessSubgraph {
  std::vector<VertexId> vertices;
};

// Induced embedding of a forbidden pattern: embedding[k] is the graph vertex
// the k-th pattern vertex maps to.
struct ForbiddenPattern {
  PatternId pattern;
  std::vector<VertexId> embedding;
};

// Odd closed walk; certifies non-bipartiteness.
struct OddCycle {
  std::vector<VertexId> walk;
};

using Witness = std::variant<HeartlessSubgraph, ForbiddenPattern, OddCycle>;

// Recognition outcome: an explaining tree, or a refusal witness.
struct Verdict {
  std::variant<PhyloTree, Witness> outcome;

  bool accepted() const { return std::holds_alternative<PhyloTree>(outcome); }
  const PhyloTree& tree() const { return std::get<PhyloTree>(outcome); }
  const Witness& witness() const { return std::get<Witness>(outcome); }
};

// Decides membership by iterated heart-vertex peeling. On acceptance the
// returned tree explains g and is least-resolved; on rejection the witness
// is the connected heartless vertex set of the failing step. Deterministic:
// hearts attach ascending by id, then component subtrees ascending by
// smallest member; pending nodes are processed in creation order.
Verdict heart_tree(const BiGraph& g);

// Infers the bipartition first; a non-bipartite input yields an OddCycle
// witness, otherwise defers to heart_tree.
Verdict recognize_with_colors(int n, std::span<const Edge> edges);
Verdict recognize_with_colors(std::vector<std::string> names,
                              std::span<const Edge> edges);

}  // namespace qbmg
