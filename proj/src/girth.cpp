#include "signedhom/girth.hpp"

#include <algorithm>
#include <queue>

namespace signedhom {

GirthTable signed_girths(const SignedGraph& g) {
  GirthTable table;
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * 4);

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    auto state = [](int v, int par, int neg) { return (v * 2 + par) * 2 + neg; };
    std::queue<int> q;
    dist[state(s, 0, 0)] = 0;
    q.push(state(s, 0, 0));
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      int neg = cur & 1, par = (cur >> 1) & 1, v = cur >> 2;
      int d = dist[cur];
      for (int id : g.incident_edges(v)) {
        const Edge& e = g.edge(id);
        int w = other_endpoint(e, v);
        int nxt = state(w, par ^ 1, neg ^ (is_negative(e.sign) ? 1 : 0));
        if (dist[nxt] == -1) {
          dist[nxt] = d + 1;
          q.push(nxt);
        }
        // Walks must use at least one edge, so the return to the base vertex
        // is relaxed by hand instead of reading dist at the start state.
        if (w == s) {
          int& best = table.len[GirthTable::index(
              static_cast<WalkParity>(par ^ 1),
              (neg ^ (is_negative(e.sign) ? 1 : 0)) ? Sign::Negative : Sign::Positive)];
          best = std::min(best, d + 1);
        }
      }
    }
  }
  return table;
}

}  // namespace signedhom
