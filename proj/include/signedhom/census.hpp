#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "signedhom/canonical.hpp"
#include "signedhom/critical.hpp"
#include "signedhom/graph.hpp"

namespace signedhom {

// Simple graphs on n vertices up to isomorphism, as lex-sorted edge lists of
// canonical representatives, in deterministic order. Cached per n.
const std::vector<std::vector<std::pair<int, int>>>& simple_graphs_up_to_iso(int n);

// One signed graph per switching-isomorphism class with simple underlying
// graph on n vertices and minimum degree at least min_degree, visited in a
// deterministic order. Signature dedup works per underlying graph: signatures
// are forest-normalized and kept only when minimal over the automorphism
// group. Workers split the signature space; output order does not depend on
// the worker count.
void enumerate_signed_graphs(int n, int min_degree,
                             const std::function<void(const SignedGraph&)>& sink,
                             int workers = 1);

std::vector<SignedGraph> enumerate_signed_graphs(int n, int min_degree = 0, int workers = 1);

struct CensusEntry {
  int n = 0;
  SignedGraph graph;
  CanonicalKey key;
  CriticalityReport report;
};

struct CensusStats {
  int n = 0;
  std::uint64_t underlying_graphs = 0;  // after the min-degree filter
  std::uint64_t signed_classes = 0;
  std::uint64_t critical = 0;
  std::uint64_t undecided = 0;
};

struct CensusProgress {
  int n = 0;
  int graph_index = 0;  // just finished, within this n
  int graph_total = 0;
  std::uint64_t classes_so_far = 0;
  std::uint64_t critical_so_far = 0;
};

struct CensusOptions {
  int min_degree = 2;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int workers = 1;
  // Skip everything before (start_n, start_graph_index); used to resume.
  int start_n = 1;
  int start_graph_index = 0;
  std::function<void(const CensusProgress&)> on_progress;
};

struct CensusResult {
  std::vector<CensusEntry> criticals;
  std::vector<CensusStats> stats;
  bool complete = true;  // false when any instance hit the solver budget
};

// Runs the criticality decision against the target over every enumerated
// class with n <= n_max.
CensusResult find_critical_up_to(int n_max, const SignedGraph& target,
                                 const CensusOptions& options = {});

}  // namespace signedhom
