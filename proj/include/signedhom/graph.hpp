#pragma once

#include <vector>

#include "signedhom/sign.hpp"

namespace signedhom {

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.sign == b.sign;
  }
};

constexpr bool is_loop(const Edge& e) { return e.u == e.v; }

constexpr int other_endpoint(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

// A switching set: sorted, duplicate-free vertex ids.
using SwitchSet = std::vector<int>;

// Signed multigraph with stable edge ids. Deleting an edge tombstones its id;
// surviving ids never shift. Parallel edges and loops are first-class. A loop
// appears once in its vertex's incidence list but contributes 2 to degree.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return alive_count_; }
  // Edge ids live in [0, edge_id_limit()); dead ids stay reserved.
  int edge_id_limit() const { return static_cast<int>(edges_.size()); }
  bool edge_alive(int id) const;
  const Edge& edge(int id) const;

  int add_edge(int u, int v, Sign s);

  // Alive incident edge ids in insertion order; a loop is listed once.
  const std::vector<int>& incident_edges(int v) const;
  int degree(int v) const;

  std::vector<int> alive_edge_ids() const;
  std::vector<Edge> alive_edges() const;
  std::vector<Sign> signature() const;  // signs by alive edge order

  // Equal when vertex counts match and the alive edges agree as sequences
  // (endpoints and signs in id order; raw ids themselves don't matter).
  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> alive_;
  int alive_count_ = 0;
  std::vector<std::vector<int>> incident_;

  friend SignedGraph delete_edge(const SignedGraph& g, int edge_id);
};

SignedGraph delete_edge(const SignedGraph& g, int edge_id);

// Removes v and its edges; remaining vertices are relabeled downward and the
// surviving edges get fresh ids (in the old id order).
SignedGraph delete_vertex(const SignedGraph& g, int v);

// Merges v into u. Edges between u and v become loops at the merged vertex;
// parallel duplicates of equal sign collapse to one representative while a
// positive/negative pair is kept as a digon. Fresh ids.
SignedGraph identify_vertices(const SignedGraph& g, int u, int v);

// Degree taxonomy: a k_l-vertex has degree k and exactly l incident non-loop
// edges whose other endpoint has degree 2. Loops add 2 to degree but never
// count as neighbors.
struct DegreeClass {
  int degree = 0;
  int two_neighbors = 0;

  friend bool operator==(const DegreeClass& a, const DegreeClass& b) {
    return a.degree == b.degree && a.two_neighbors == b.two_neighbors;
  }
};

DegreeClass classify_vertex(const SignedGraph& g, int v);

// rho(G) = 3 v(G) - 2 e(G)
int potential(const SignedGraph& g);

// Distinct neighbors of v through alive non-loop edges, ascending.
std::vector<int> neighbors(const SignedGraph& g, int v);

bool adjacent(const SignedGraph& g, int u, int v);

// Rebuilds the incidence index from the edge list and compares.
bool audit_adjacency(const SignedGraph& g);

}  // namespace signedhom
