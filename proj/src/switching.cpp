#include "signedhom/switching.hpp"

#include <stdexcept>

namespace signedhom {

SignedGraph switched(const SignedGraph& g, const SwitchSet& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("switch set vertex");
    in[v] = 1;
  }
  SignedGraph out(g.vertex_count());
  for (int id = 0; id < g.edge_id_limit(); ++id) {
    if (!g.edge_alive(id)) continue;
    Edge e = g.edge(id);
    if (!is_loop(e) && (in[e.u] ^ in[e.v])) e.sign = flipped(e.sign);
    out.add_edge(e.u, e.v, e.sign);
  }
  return out;
}

std::optional<SwitchSet> is_switching_equivalent(const SignedGraph& g,
                                                 const std::vector<Sign>& sigma2) {
  const auto ids = g.alive_edge_ids();
  if (sigma2.size() != ids.size())
    throw std::invalid_argument("is_switching_equivalent: signature length mismatch");

  // disagree[id] for alive edges; loops must agree outright.
  std::vector<char> disagree(g.edge_id_limit(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Edge& e = g.edge(ids[i]);
    bool d = e.sign != sigma2[i];
    if (d && is_loop(e)) return std::nullopt;
    disagree[ids[i]] = d;
  }

  const int n = g.vertex_count();
  std::vector<int> bit(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (bit[root] != -1) continue;
    bit[root] = 0;
    stack.assign(1, root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : g.incident_edges(u)) {
        const Edge& e = g.edge(id);
        if (is_loop(e)) continue;
        int w = other_endpoint(e, u);
        int want = bit[u] ^ (disagree[id] ? 1 : 0);
        if (bit[w] == -1) {
          bit[w] = want;
          stack.push_back(w);
        } else if (bit[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  SwitchSet s;
  for (int v = 0; v < n; ++v)
    if (bit[v] == 1) s.push_back(v);
  return s;
}

}  // namespace signedhom
