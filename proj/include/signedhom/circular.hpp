#pragma once

#include <optional>
#include <vector>

#include "signedhom/graph.hpp"
#include "signedhom/hom.hpp"
#include "signedhom/rational.hpp"

namespace signedhom {

// Circular p/q-coloring: p even, p >= 2q, colors in {0..p-1}. A positive edge
// uv needs q <= |phi(u)-phi(v)| <= p-q; a negative edge needs
// |phi(u)-phi(v)| <= p/2-q or >= p/2+q.
struct CircularColoring {
  int p = 0;
  int q = 0;
  std::vector<int> phi;
};

// True iff both clauses hold on every edge; loops are checked with u == v, so
// a positive loop always fails and a negative loop holds iff q <= p/2.
// Throws on a malformed coloring (size/range/parameter violations).
bool check_circular_coloring(const SignedGraph& g, const CircularColoring& c);

struct ColoringResult {
  SolveStatus status = SolveStatus::Absent;
  std::optional<CircularColoring> coloring;
  std::uint64_t nodes = 0;

  bool found() const { return status == SolveStatus::Found; }
};

// Searches for a circular p/q-coloring as an edge-sign preserving
// homomorphism into the circular clique. The clique is rotation symmetric, so
// one source vertex is pinned to color 0 without losing completeness.
ColoringResult find_circular_coloring(const SignedGraph& g, int p, int q,
                                      const SolveOptions& = {});

struct ChicCandidate {
  Rational value{0};
  int p = 0;  // even representation actually solved
  int q = 0;
  SolveStatus status = SolveStatus::Absent;
  std::uint64_t nodes = 0;
};

struct ChicResult {
  SolveStatus status = SolveStatus::Absent;
  Rational value{0};
  int p = 0;  // representation of the minimum (2/2 for edgeless inputs)
  int q = 0;
  std::optional<CircularColoring> witness;
  std::vector<ChicCandidate> tested;  // every candidate tried, sweep order
  bool degenerate_edgeless = false;
  int qmax = 0;

  bool found() const { return status == SolveStatus::Found; }
};

// Exact circular chromatic number by a bounded rational sweep: candidates are
// reduced a/b with 2 <= a/b, b <= qmax (default v(G)), ordered by value; the
// first colorable candidate is the minimum. Every signed graph without a
// positive loop is colorable at value 4n, so the sweep terminates. Edgeless
// graphs take the documented 2/2 convention.
ChicResult circular_chromatic_number(const SignedGraph& g, int qmax = -1,
                                     const SolveOptions& = {});

}  // namespace signedhom
