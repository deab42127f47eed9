#pragma once

#include <array>
#include <string>
#include <vector>

#include "signedhom/graph.hpp"
#include "signedhom/rational.hpp"

namespace signedhom {

// Findings split by what the source lemma is actually proved about: scans in
// the AllCritical scope hold for every critical graph, the CounterexampleOnly
// ones are properties of a hypothetical minimum counterexample and are
// informational on real inputs.
enum class LemmaScope { AllCritical, CounterexampleOnly };

struct ConfigFinding {
  std::string config;
  LemmaScope scope = LemmaScope::AllCritical;
  std::vector<int> vertices;  // witness vertex ids, sorted
  std::vector<int> edges;     // witness edge ids when meaningful
};

// Loops, parallel bundles (one finding per bundle), and cut edges.
std::vector<ConfigFinding> scan_forbidden_edges(const SignedGraph& g);

// 1-, 2_1-, 3_2-, 4_4-, and 5_5-vertices.
std::vector<ConfigFinding> scan_forbidden_vertices(const SignedGraph& g);

// Subgraph embeddings of the four fixed patterns (K4 minus an edge, K_{2,3},
// the chorded 5-cycle, and the bowtie) on the underlying graph, one finding
// per pattern and witness vertex set.
std::vector<ConfigFinding> scan_theta_and_x(const SignedGraph& g);

// Triangle-degree-profile scans, triangle multiplicity, 3_1 triangle closure,
// and the signs of short cycles through 2-vertices.
std::vector<ConfigFinding> scan_triangle_lemmas(const SignedGraph& g);

// The 4-vertex neighborhood scans (4_2 support, 4_3 hub shape, the 4_3
// adjacency bounds, rich/wealthy neighbor requirements).
std::vector<ConfigFinding> scan_4vertex_lemmas(const SignedGraph& g);

std::vector<ConfigFinding> scan_all(const SignedGraph& g);

enum class WealthClass { Wealthy, RichNotWealthy, Neither };

const char* wealth_name(WealthClass w);

// Wealthy: 4_0, 5_{<=2}, or 6+. Rich additionally admits 4_1 and 5_3.
WealthClass classify_wealth(const SignedGraph& g, int v);
bool is_wealthy(const SignedGraph& g, int v);
bool is_rich(const SignedGraph& g, int v);

struct ChargeTransfer {
  int rule = 0;  // 1..3
  int from = 0;
  int to = 0;   // amount is always 1/2
};

struct ChargeLedger {
  std::vector<Rational> initial;
  std::vector<ChargeTransfer> transfers;
  std::vector<Rational> final_charge;

  Rational total_initial() const;
  Rational total_final() const;
  bool conserved() const { return total_initial() == total_final(); }
};

// Initial charge = degree. Rule 1: every 3+-vertex gives 1/2 along each edge
// to a 2-vertex. Rule 2: every rich vertex gives 1/2 along each edge to a
// 3_1-vertex. Rule 3: every wealthy vertex gives 1/2 along each edge to a
// 4_3-vertex. All classes are read off the input graph (simultaneous rules);
// loops carry no transfers.
ChargeLedger run_discharging(const SignedGraph& g);

// H1..H7, the preconditions under which every final charge is at least 3.
// H1 additionally rejects 0-vertices: an isolated vertex keeps charge 0, and
// the bound is only claimed in the minimum-degree-2 setting.
struct HypothesisReport {
  std::array<bool, 7> passed{};

  bool all() const {
    for (bool b : passed)
      if (!b) return false;
    return true;
  }
};

HypothesisReport scan_hypotheses(const SignedGraph& g);

// Triangles of the underlying graph as sorted vertex triples.
std::vector<std::array<int, 3>> triangles(const SignedGraph& g);

// Whether some choice of connecting edges gives the triple a triangle of the
// requested sign (parallel bundles make several choices possible).
bool triangle_sign_exists(const SignedGraph& g, int a, int b, int c, Sign sign);

}  // namespace signedhom
