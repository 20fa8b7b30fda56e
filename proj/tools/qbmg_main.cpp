// Command-line driver: recognition, tree semantics, brute-force oracles,
// instance generation and exhaustive cross-checking.
//
// Exit codes: 0 accepted/success, 1 rejected (valid negative verdict with a
// witness), 2 usage or format error, 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qbmg/formats.hpp"
#include "qbmg/genlab.hpp"
#include "qbmg/oracles.hpp"
#include "qbmg/recognition.hpp"
#include "qbmg/semantics.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qbmg::fail(qbmg::Errc::invalid_config, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) qbmg::fail(qbmg::Errc::invalid_config, "cannot write " + path);
  out << content;
}

int default_hereditary_cap() {
  if (const char* env = std::getenv("QBMG_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      qbmg::fail(qbmg::Errc::invalid_config,
                 "QBMG_ORACLE_CAP is not an integer");
    }
  }
  return qbmg::OracleCaps{}.hereditary_cap;
}

int cmd_recognize(const std::string& graph_file, const std::string& witness_kind,
                  const std::string& dot_path) {
  auto parsed = qbmg::parse_graph(read_file(graph_file));
  if (!parsed.ok()) {
    std::cout << qbmg::format_witness(
                     parsed.names, qbmg::Witness{qbmg::OddCycle{
                                       parsed.odd_cycle().walk}})
              << "\n";
    return kExitRejected;
  }
  const qbmg::BiGraph& g = parsed.graph();
  auto verdict = qbmg::heart_tree(g);
  if (verdict.accepted()) {
    std::cout << qbmg::serialize_tree(verdict.tree()) << "\n";
    if (!dot_path.empty()) write_file(dot_path, qbmg::export_dot(verdict.tree()));
    return kExitAccepted;
  }
  qbmg::Witness witness = verdict.witness();
  if (witness_kind == "forbidden")
    witness = qbmg::refine_witness(g, witness);
  std::cout << qbmg::format_witness(g.names(), witness) << "\n";
  if (!dot_path.empty()) write_file(dot_path, qbmg::export_dot(g));
  return kExitRejected;
}

int cmd_explain(const std::string& tree_file, bool directed) {
  auto t = qbmg::parse_tree(read_file(tree_file));
  if (directed)
    std::cout << qbmg::serialize_directed(qbmg::directed_qbmg(t));
  else
    std::cout << qbmg::serialize_graph(qbmg::explain(t).graph);
  return kExitAccepted;
}

int cmd_check_tree(const std::string& tree_file, const std::string& graph_file) {
  auto t = qbmg::parse_tree(read_file(tree_file));
  auto parsed = qbmg::parse_graph(read_file(graph_file));
  if (!parsed.ok())
    qbmg::fail(qbmg::Errc::invalid_config,
               "graph file is not bipartite; nothing to compare against");
  const qbmg::BiGraph& g = parsed.graph();
  const bool explains = qbmg::check_explains(t, g);
  bool least_resolved = false;
  bool structure_clean = false;
  if (explains) {
    least_resolved = qbmg::check_least_resolved(t, g);
    structure_clean = qbmg::validate_lrt_structure(t, g).empty();
  }
  auto word = [](bool b) { return b ? "true" : "false"; };
  std::cout << "explains=" << word(explains)
            << " least_resolved=" << word(least_resolved)
            << " lrt_structure_clean=" << word(structure_clean) << "\n";
  return explains ? kExitAccepted : kExitRejected;
}

int cmd_oracle(const std::string& graph_file, const std::string& method,
               std::optional<int> cap) {
  auto parsed = qbmg::parse_graph(read_file(graph_file));
  if (!parsed.ok()) {
    std::cout << "rejected\n"
              << qbmg::format_witness(
                     parsed.names,
                     qbmg::Witness{qbmg::OddCycle{parsed.odd_cycle().walk}})
              << "\n";
    return kExitRejected;
  }
  const qbmg::BiGraph& g = parsed.graph();
  if (method == "forbidden") {
    auto found = qbmg::find_forbidden(
        g, cap.value_or(qbmg::OracleCaps{}.pattern_cap));
    if (!found) {
      std::cout << "accepted\n";
      return kExitAccepted;
    }
    std::cout << "rejected\n"
              << qbmg::format_witness(g.names(),
                                      qbmg::Witness{qbmg::ForbiddenPattern{
                                          found->pattern, found->map}})
              << "\n";
    return kExitRejected;
  }
  auto check = qbmg::hereditary_heart_check(g, cap.value_or(default_hereditary_cap()));
  if (check.all_contain_heart) {
    std::cout << "accepted\n";
    return kExitAccepted;
  }
  std::cout << "rejected\n"
            << qbmg::format_witness(g.names(),
                                    qbmg::Witness{qbmg::HeartlessSubgraph{
                                        *check.violation}})
            << "\n";
  return kExitRejected;
}

int cmd_gen_tree(int leaves, std::uint64_t seed, double internal_bias,
                 double trunc_self_prob, double color_prob) {
  qbmg::TreeGenConfig cfg;
  cfg.leaf_count = leaves;
  cfg.seed = seed;
  cfg.internal_bias = internal_bias;
  cfg.trunc_self_prob = trunc_self_prob;
  cfg.color_prob = color_prob;
  std::cout << qbmg::serialize_tree(qbmg::random_tree(cfg)) << "\n";
  return kExitAccepted;
}

int cmd_gen_graph(int n, double edge_prob, std::uint64_t seed) {
  std::cout << qbmg::serialize_graph(qbmg::random_bipartite(n, edge_prob, seed));
  return kExitAccepted;
}

int cmd_enumerate(int max_n, bool connected_only, bool cross,
                  const std::string& dedupe) {
  qbmg::EnumConfig cfg;
  cfg.max_n = max_n;
  cfg.connected_only = connected_only;
  cfg.dedupe = dedupe == "iso" ? qbmg::Dedupe::iso_classes
                               : qbmg::Dedupe::labeled;
  if (!cross) {
    std::map<int, std::size_t> by_n;
    std::size_t total = 0;
    qbmg::enumerate_bipartite(cfg, [&](const qbmg::BiGraph& g) {
      ++by_n[g.size()];
      ++total;
      return true;
    });
    for (const auto& [n, count] : by_n)
      std::cout << "n=" << n << " count=" << count << "\n";
    std::cout << "total " << total << "\n";
    return kExitAccepted;
  }

  qbmg::OracleCaps caps;
  caps.hereditary_cap = default_hereditary_cap();
  qbmg::CrossChecker checker(caps);
  std::cout << "# cross-check corpus=enumerate max_n=" << max_n
            << " connected_only=" << (connected_only ? "yes" : "no")
            << " dedupe=" << dedupe << " prng=" << qbmg::kPrngId << "\n";
  std::cout << "# id\tn\theart_tree\tforbidden_free\thereditary_heart\n";
  auto verdict_word = [](bool b) { return b ? "accept" : "reject"; };
  bool ok = true;
  qbmg::enumerate_bipartite(cfg, [&](const qbmg::BiGraph& g) {
    const std::string id = checker.next_id();
    auto v = checker.add(g);
    std::cout << id << "\t" << g.size() << "\t" << verdict_word(v.via_heart_tree)
              << "\t" << verdict_word(v.via_forbidden_free) << "\t"
              << verdict_word(v.via_hereditary) << "\n";
    ok = v.agree();
    return ok;  // halt on the first disagreement
  });
  const auto& report = checker.report();
  std::cout << "# summary\n"
            << "total " << report.total << "\n"
            << "accepted " << report.accepted << "\n"
            << "rejected " << report.rejected << "\n"
            << "disagreements " << report.disagreements << "\n";
  if (!ok && report.first_disagreement) {
    std::cerr << "disagreement on instance " << report.first_disagreement->first
              << ":\n"
              << report.first_disagreement->second;
    return kExitInconsistent;
  }
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition and tree semantics for undirected 2-quasi "
               "best match graphs"};
  app.require_subcommand(1);

  std::string graph_file, tree_file, dot_path;
  std::string witness_kind = "heartless";
  std::string method = "forbidden";
  std::string dedupe = "labeled";
  bool directed = false, connected_only = false, cross = false;
  int leaves = 1, n = 1, max_n = 5;
  std::optional<int> cap;
  double edge_prob = 0.5, internal_bias = 0.5, trunc_self_prob = 0.25,
         color_prob = 0.5;
  std::uint64_t seed = 0;

  auto* recognize = app.add_subcommand(
      "recognize", "Decide membership; print an explaining tree or a witness");
  recognize->add_option("graph", graph_file, "graph file")->required();
  recognize->add_option("--witness", witness_kind, "witness kind on rejection")
      ->check(CLI::IsMember({"heartless", "forbidden"}));
  recognize->add_option("--dot", dot_path, "write a DOT rendering to PATH");

  auto* explain_cmd = app.add_subcommand(
      "explain", "Print the graph explained by a tree");
  explain_cmd->add_option("tree", tree_file, "tree file")->required();
  explain_cmd->add_flag("--directed", directed,
                        "print the directed quasi-best-match arcs");

  auto* check = app.add_subcommand(
      "check-tree", "Check whether a tree explains a graph and is least-resolved");
  check->add_option("tree", tree_file, "tree file")->required();
  check->add_option("graph", graph_file, "graph file")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force membership tests");
  oracle->add_option("graph", graph_file, "graph file")->required();
  oracle->add_option("--method", method, "oracle to run")
      ->check(CLI::IsMember({"forbidden", "hereditary"}));
  oracle->add_option("--cap", cap, "size cap override");

  auto* gen = app.add_subcommand("gen", "Seeded instance generation");
  auto* gen_tree = gen->add_subcommand("tree", "random explaining tree");
  gen_tree->add_option("--leaves", leaves, "leaf count")->required();
  gen_tree->add_option("--seed", seed, "PRNG seed")->required();
  gen_tree->add_option("--internal-bias", internal_bias,
                       "0 yields a star, towards 1 deeper trees");
  gen_tree->add_option("--trunc-self-prob", trunc_self_prob,
                       "probability of the self truncation");
  gen_tree->add_option("--color-prob", color_prob, "probability of color 1");
  auto* gen_graph = gen->add_subcommand("graph", "random bipartite graph");
  gen_graph->add_option("--n", n, "vertex count")->required();
  gen_graph->add_option("--edge-prob", edge_prob, "cross-pair edge probability");
  gen_graph->add_option("--seed", seed, "PRNG seed")->required();
  gen->require_subcommand(1);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive small-graph enumeration and cross-checking");
  enumerate->add_option("--max-n", max_n, "vertex cap (<= 8)")->required();
  enumerate->add_flag("--connected-only", connected_only,
                      "restrict to connected graphs");
  enumerate->add_flag("--cross-check", cross,
                      "run the three-way agreement report");
  enumerate->add_option("--dedupe", dedupe, "labeled or iso")
      ->check(CLI::IsMember({"labeled", "iso"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (recognize->parsed())
      return cmd_recognize(graph_file, witness_kind, dot_path);
    if (explain_cmd->parsed()) return cmd_explain(tree_file, directed);
    if (check->parsed()) return cmd_check_tree(tree_file, graph_file);
    if (oracle->parsed()) return cmd_oracle(graph_file, method, cap);
    if (gen->parsed()) {
      if (gen_tree->parsed())
        return cmd_gen_tree(leaves, seed, internal_bias, trunc_self_prob,
                            color_prob);
      return cmd_gen_graph(n, edge_prob, seed);
    }
    if (enumerate->parsed())
      return cmd_enumerate(max_n, connected_only, cross, dedupe);
  } catch (const qbmg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == qbmg::Errc::internal_inconsistency ? kExitInconsistent
                                                          : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
