#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "signedhom/girth.hpp"
#include "signedhom/graph.hpp"
#include "signedhom/hom.hpp"

namespace signedhom {

struct GirthDomination {
  bool ok = false;
  GirthTable source;
  GirthTable target;
};

// Entrywise comparison with no-walk above every length.
GirthDomination girth_dominates(const SignedGraph& g, const SignedGraph& h);

enum class Verdict { Critical, Maps, GirthViolation, NonMinimal, Undecided };

const char* verdict_name(Verdict v);

// Machine-checkable criticality certificate: a hom witness per single-edge
// deletion plus the exhausted-search node count for the graph itself.
struct CriticalityReport {
  Verdict verdict = Verdict::Undecided;
  GirthDomination girth;
  std::optional<Homomorphism> hom_witness;            // set when verdict is Maps
  std::optional<int> failing_edge;                    // deletion that still does not map
  std::optional<int> isolated_vertex;                 // isolated vertices break minimality
  std::vector<std::pair<int, Homomorphism>> deletion_witnesses;  // (edge id, witness)
  std::uint64_t refutation_nodes = 0;                 // nodes proving g itself does not map
  std::uint64_t total_nodes = 0;
};

// Girth domination, then hom(g, h), then hom(g - e, h) for every edge; single
// edge deletions suffice because every proper subgraph sits inside some g - e
// unless it only drops isolated vertices, which are checked separately.
CriticalityReport is_critical(const SignedGraph& g, const SignedGraph& h,
                              const SolveOptions& = {});

// 2 e >= 3 v - 1, the density bound satisfied by certified graphs.
bool density_check(const SignedGraph& g);

// potential <= 1; algebraically the same bound as density_check.
bool potential_check(const SignedGraph& g);

}  // namespace signedhom
