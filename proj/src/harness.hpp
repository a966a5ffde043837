#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "cycles.hpp"
#include "graph.hpp"

namespace cyclewidth {

struct WitnessReport {
  Graph graph;  // K_{h-1}
  int h = 0;
  bool minor_found = false;
  int treewidth = 0;
  bool treewidth_exact = false;

  bool ok() const { return !minor_found && treewidth_exact && treewidth == h - 2; }
};

inline constexpr int kMaxWitnessH = 11;

/// K_{h-1} together with an exact check that it has no spec minor and
/// treewidth h - 2. Throws InvalidArgument when h > kMaxWitnessH.
WitnessReport witness_lower_bound(const CycleFamilySpec& spec, Budget& budget);

/// CSV "n,seed,girth,tw_lower_bound,lb_kind" over random cubic graphs.
/// lb_kind is "exact" or "mmw" (minor-min-width heuristic). girth is "none"
/// for acyclic samples. Each row gets its own budget of `budget` nodes.
std::string girth_demo(const std::vector<int>& sizes, const std::vector<std::uint64_t>& seeds, std::uint64_t budget);

/// Corpus grammar, entries joined by ';':
///   connected:N   all connected graphs with 1..N vertices, up to isomorphism
///   all:N         all graphs with 1..N vertices, up to isomorphism
///   g6:STRING     one graph6 graph
///   file:PATH     graph6 lines
///   gen:FAMILY ARGS...   a generator family; random ones use the sweep seed
void for_each_corpus_graph(const std::string& corpus, std::uint64_t seed, const std::function<void(const Graph&)>& fn);

inline constexpr const char* kSweepHeader =
    "graph_id,n,m,ell,nu,tau,ep_bound,treewidth,tw_exact,outcome,width,g_bound,status,"
    "t_pack_ms,t_hit_ms,t_tw_ms,t_decompose_ms";

struct SweepConfig {
  std::string corpus;
  std::vector<int> ells;
  std::optional<CycleFamilySpec> spec;  // default: [ell, ell]
  std::string out_path;                 // certificates go to out_path + ".certs/"
  std::uint64_t budget = kDefaultBudget;  // per row
  std::uint64_t seed = 0;
};

struct SweepSummary {
  int rows = 0;
  int budget_rows = 0;
  int violations = 0;
  std::vector<std::string> messages;  // one per violation
};

/// One CSV row per (graph, ell) in corpus order. Rows that exhaust the
/// budget have status "budget" and NA fields; rows that fail an invariant
/// have status "violation".
SweepSummary run_duality_sweep(const SweepConfig& config);

/// Re-checks every row of a sweep CSV against its certificate file.
SweepSummary verify_sweep(const std::string& csv_path, std::uint64_t budget = kDefaultBudget);

}  // namespace cyclewidth
