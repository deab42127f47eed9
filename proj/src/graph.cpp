#include "signedhom/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace signedhom {

SignedGraph::SignedGraph(int n) : n_(n), incident_(n) {
  if (n < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
}

bool SignedGraph::edge_alive(int id) const {
  return id >= 0 && id < edge_id_limit() && alive_[id];
}

const Edge& SignedGraph::edge(int id) const {
  if (id < 0 || id >= edge_id_limit()) throw std::out_of_range("edge id");
  return edges_[id];
}

int SignedGraph::add_edge(int u, int v, Sign s) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("add_edge: endpoint out of range");
  const int id = edge_id_limit();
  edges_.push_back(Edge{u, v, s});
  alive_.push_back(1);
  ++alive_count_;
  incident_[u].push_back(id);
  if (v != u) incident_[v].push_back(id);
  return id;
}

const std::vector<int>& SignedGraph::incident_edges(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id");
  return incident_[v];
}

int SignedGraph::degree(int v) const {
  int d = 0;
  for (int id : incident_edges(v)) d += is_loop(edges_[id]) ? 2 : 1;
  return d;
}

std::vector<int> SignedGraph::alive_edge_ids() const {
  std::vector<int> ids;
  ids.reserve(alive_count_);
  for (int id = 0; id < edge_id_limit(); ++id)
    if (alive_[id]) ids.push_back(id);
  return ids;
}

std::vector<Edge> SignedGraph::alive_edges() const {
  std::vector<Edge> out;
  out.reserve(alive_count_);
  for (int id = 0; id < edge_id_limit(); ++id)
    if (alive_[id]) out.push_back(edges_[id]);
  return out;
}

std::vector<Sign> SignedGraph::signature() const {
  std::vector<Sign> out;
  out.reserve(alive_count_);
  for (int id = 0; id < edge_id_limit(); ++id)
    if (alive_[id]) out.push_back(edges_[id].sign);
  return out;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.alive_edges() == b.alive_edges();
}

SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
  if (!g.edge_alive(edge_id)) throw std::invalid_argument("delete_edge: invalid id");
  SignedGraph out = g;
  const Edge& e = out.edges_[edge_id];
  auto drop = [&](int v) {
    auto& lst = out.incident_[v];
    lst.erase(std::find(lst.begin(), lst.end(), edge_id));
  };
  drop(e.u);
  if (e.v != e.u) drop(e.v);
  out.alive_[edge_id] = 0;
  --out.alive_count_;
  return out;
}

SignedGraph delete_vertex(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("delete_vertex: invalid id");
  SignedGraph out(g.vertex_count() - 1);
  auto relabel = [&](int w) { return w < v ? w : w - 1; };
  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    const Edge& e = g.edge(id);
    if (e.u == v || e.v == v) continue;
    out.add_edge(relabel(e.u), relabel(e.v), e.sign);
  }
  return out;
}

SignedGraph identify_vertices(const SignedGraph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw std::invalid_argument("identify_vertices: invalid ids");
  SignedGraph out(n - 1);
  auto relabel = [&](int w) {
    if (w == v) w = u;
    return w < v ? w : w - 1;
  };
  std::set<std::tuple<int, int, Sign>> seen;
  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    const Edge& e = g.edge(id);
    int a = relabel(e.u), b = relabel(e.v);
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b, e.sign}).second) continue;
    out.add_edge(a, b, e.sign);
  }
  return out;
}

DegreeClass classify_vertex(const SignedGraph& g, int v) {
  DegreeClass c;
  c.degree = g.degree(v);
  for (int id : g.incident_edges(v)) {
    const Edge& e = g.edge(id);
    if (is_loop(e)) continue;
    if (g.degree(other_endpoint(e, v)) == 2) ++c.two_neighbors;
  }
  return c;
}

int potential(const SignedGraph& g) { return 3 * g.vertex_count() - 2 * g.edge_count(); }

std::vector<int> neighbors(const SignedGraph& g, int v) {
  std::vector<int> out;
  for (int id : g.incident_edges(v)) {
    const Edge& e = g.edge(id);
    if (is_loop(e)) continue;
    out.push_back(other_endpoint(e, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent(const SignedGraph& g, int u, int v) {
  if (u == v) return false;
  for (int id : g.incident_edges(u)) {
    const Edge& e = g.edge(id);
    if (!is_loop(e) && other_endpoint(e, u) == v) return true;
  }
  return false;
}

bool audit_adjacency(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> rebuilt(n);
  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    const Edge& e = g.edge(id);
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) return false;
    rebuilt[e.u].push_back(id);
    if (e.v != e.u) rebuilt[e.v].push_back(id);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> have = g.incident_edges(v);
    std::sort(have.begin(), have.end());
    std::sort(rebuilt[v].begin(), rebuilt[v].end());
    if (have != rebuilt[v]) return false;
  }
  return true;
}

}  // namespace signedhom
