#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbmg/bigraph.hpp"
#include "qbmg/oracles.hpp"
#include "qbmg/phylo.hpp"

namespace qbmg {

// splitmix64: 64-bit-state generator with a public reference specification;
// corpora reproduce across implementations from the seed alone.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0,1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0,n) by 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

inline constexpr const char* kPrngId = "splitmix64";

struct TreeGenConfig {
  int leaf_count = 1;
  std::uint64_t seed = 0;
  double internal_bias = 0.5;    // 0: star tree; towards 1: deeper trees
  double trunc_self_prob = 0.25;
  double color_prob = 0.5;       // probability of color one
};

// Valid phylogenetic tree, deterministic per seed. Leaves are named
// "v0".."v{k-1}" left to right; a single-leaf tree forces the self
// truncation.
PhyloTree random_tree(const TreeGenConfig& cfg);

// Random color split (color one with probability 1/2), then each cross-color
// pair becomes an edge with probability edge_prob. Deterministic per seed.
BiGraph random_bipartite(int n, double edge_prob, std::uint64_t seed);

enum class Dedupe : std::uint8_t { labeled, iso_classes };

struct EnumConfig {
  int max_n = 5;
  bool connected_only = false;
  Dedupe dedupe = Dedupe::labeled;
};

// All labeled bipartite graphs with 1..max_n vertices: every coloring whose
// color-one class is the minority (ties included both ways) crossed with
// every subset of the cross-color pairs. Optionally filtered to connected
// graphs and deduplicated to isomorphism classes. The callback returns
// false to stop. Guarded at max_n <= 8.
void enumerate_bipartite(const EnumConfig& cfg,
                         const std::function<bool(const BiGraph&)>& emit);

std::vector<BiGraph> enumerate_bipartite_all(const EnumConfig& cfg);

// Canonical form under color-preserving isomorphism (global color swap
// allowed): minimum color-string + adjacency-matrix string over vertex
// relabelings. Guarded at n <= 8.
std::string canonical_form(const BiGraph& g);

struct CrossVerdicts {
  bool via_heart_tree = false;
  bool via_forbidden_free = false;
  bool via_hereditary = false;

  bool agree() const {
    return via_heart_tree == via_forbidden_free &&
           via_forbidden_free == via_hereditary;
  }
  bool accepted() const { return via_heart_tree; }
};

CrossVerdicts cross_check_one(const BiGraph& g, const OracleCaps& caps = {});

struct CrossCheckReport {
  std::size_t total = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t disagreements = 0;
  // First offending instance: id and serialized graph text.
  std::optional<std::pair<std::string, std::string>> first_disagreement;

  bool all_agree() const { return disagreements == 0; }
};

// Streaming three-way agreement check. add() returns the verdict triple;
// the report captures the first disagreement with the instance serialized.
class CrossChecker {
 public:
  explicit CrossChecker(OracleCaps caps = {}) : caps_(caps) {}

  CrossVerdicts add(const BiGraph& g);
  const CrossCheckReport& report() const { return report_; }
  std::string next_id() const;

 private:
  OracleCaps caps_;
  CrossCheckReport report_;
};

// Runs the checker over a whole corpus, stopping at the first disagreement.
CrossCheckReport cross_check(std::span<const BiGraph> corpus,
                             const OracleCaps& caps = {});

}  // namespace qbmg
