#pragma once

#include <cstdint>

#include "signedhom/graph.hpp"

namespace signedhom {

// Signed cycle of length ell with an odd number of positive edges plus a
// negative loop at every vertex. Odd ell: all cycle edges positive. Even ell:
// the single negative cycle edge sits on (ell-1, 0); all placements are
// switching equivalent.
SignedGraph make_cstar(int ell);

// Circular clique on {0..p-1}: ij positive when q <= |i-j| <= p-q, negative
// (loops included) when |i-j| <= p/2-q or |i-j| >= p/2+q. Requires p even,
// p >= 2q, q >= 1.
SignedGraph make_circular_clique(int p, int q);

// Antipode-identified half of the circular clique: switch at {p/2..p-1}, then
// identify every vertex with its antipode. p/2 vertices.
SignedGraph make_switching_core(int p, int q);

// The 5-vertex, 7-edge graph with positive v2v3, v3v1, v1v0, v2v0, v3v0, v2v4
// and negative v1v4.
SignedGraph make_w();

// Negative k-cycle whose every cycle edge lies in a positive triangle with a
// distinct apex; 2k vertices, 3k edges, exactly two negative edges (both in
// one triangle). Vertices 0..k-1 are the cycle, k+i is the apex over cycle
// edge (i, i+1 mod k).
SignedGraph make_sk(int k);

// Petersen graph: outer cycle 0..4 and spokes positive, inner pentagram
// (5+i, 5+((i+2) mod 5)) negative.
SignedGraph make_petersen();

// Deterministic random signed graph: uniform edge selection (distinct
// non-loop pairs when simple, pairs-with-loops drawn independently
// otherwise), then independent fair sign flips. PRNG: mt19937-64.
SignedGraph random_signed_graph(int n, int m, std::uint64_t seed, bool simple = true);

}  // namespace signedhom
