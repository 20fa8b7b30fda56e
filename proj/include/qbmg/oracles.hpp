#pragma once

#include <optional>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/recognition.hpp"

namespace qbmg {

struct OracleCaps {
  int hereditary_cap = 16;  // subset enumeration is exponential in n
  int pattern_cap = 512;
};

// Fixed pattern templates. P6: path on 6; C6: chordless 6-cycle; Sunlet4:
// 4-cycle v1..v4 with one pendant u_i on each cycle vertex (8 vertices,
// 8 edges), ids 0..3 cycle then 4..7 pendants, colors alternating.
const BiGraph& pattern_graph(PatternId id);

struct Embedding {
  PatternId pattern;
  std::vector<VertexId> map;  // pattern vertex k -> graph vertex map[k]
};

// First induced embedding of P6, C6 or Sunlet4 (searched in that order) by
// backtracking with color and degree pruning; candidates are tried in id
// order, so the result is deterministic. Intended for desk-scale graphs.
std::optional<Embedding> find_forbidden(const BiGraph& g, int cap = 512);

struct HereditaryCheck {
  bool all_contain_heart = false;
  // A smallest connected induced subgraph without a heart-vertex, when any.
  std::optional<std::vector<VertexId>> violation;
};

// Enumerates vertex subsets in increasing size and tests every connected
// induced subgraph for a heart-vertex. Exponential; guarded by cap.
HereditaryCheck hereditary_heart_check(const BiGraph& g, int cap = 16);

// Locates a forbidden pattern inside a heartless witness. Such a pattern
// always exists in a connected heartless bipartite graph; failure to find
// one signals an implementation bug (internal_inconsistency).
Witness refine_witness(const BiGraph& g, const Witness& w);

// True iff the recognition verdict, forbidden-pattern freeness and the
// hereditary heart test agree on membership of g.
bool naive_explain_equivalence(const BiGraph& g, int cap = 16);

}  // namespace qbmg
