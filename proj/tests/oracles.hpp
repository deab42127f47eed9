#pragma once

// Brute-force reference implementations used only by tests. Deliberately
// naive and independent of the library's search paths.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "signedhom/girth.hpp"
#include "signedhom/graph.hpp"
#include "signedhom/switching.hpp"

namespace oracles {

using namespace signedhom;

// Shortest closed walks per type by dynamic programming over walk length.
// Walks longer than max_len count as absent.
inline GirthTable brute_girths(const SignedGraph& g, int max_len) {
  GirthTable table;
  const int n = g.vertex_count();
  for (int s = 0; s < n; ++s) {
    // reach[v][neg] after exactly L steps from s
    std::vector<std::array<char, 2>> reach(n, {0, 0}), next(n, {0, 0});
    reach[s][0] = 1;
    for (int len = 1; len <= max_len; ++len) {
      for (auto& row : next) row = {0, 0};
      for (int v = 0; v < n; ++v)
        for (int neg = 0; neg < 2; ++neg) {
          if (!reach[v][neg]) continue;
          for (int id : g.incident_edges(v)) {
            const Edge& e = g.edge(id);
            int w = other_endpoint(e, v);
            next[w][neg ^ (is_negative(e.sign) ? 1 : 0)] = 1;
          }
        }
      reach.swap(next);
      for (int neg = 0; neg < 2; ++neg) {
        if (!reach[s][neg]) continue;
        int idx = GirthTable::index(len % 2 ? WalkParity::Odd : WalkParity::Even,
                                    neg ? Sign::Negative : Sign::Positive);
        table.len[idx] = std::min(table.len[idx], len);
      }
    }
  }
  return table;
}

// Per-pair sign multiset fingerprint, for equality up to nothing at all.
inline std::map<std::tuple<int, int, int>, int> edge_fingerprint(const SignedGraph& g) {
  std::map<std::tuple<int, int, int>, int> out;
  for (const Edge& e : g.alive_edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    ++out[{a, b, is_negative(e.sign) ? 1 : 0}];
  }
  return out;
}

// Switching isomorphism by trying every permutation and every switch subset.
inline bool brute_switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto target = edge_fingerprint(g2);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::map<std::tuple<int, int, int>, int> img;
      for (const Edge& e : g1.alive_edges()) {
        Sign s = e.sign;
        if (!is_loop(e) && (((mask >> e.u) & 1) ^ ((mask >> e.v) & 1))) s = flipped(s);
        int a = perm[e.u], b = perm[e.v];
        if (a > b) std::swap(a, b);
        ++img[{a, b, is_negative(s) ? 1 : 0}];
      }
      if (img == target) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Naive containment scan: every vertex subset of pattern size, every
// bijection, pattern edges must be present.
inline std::set<std::vector<int>> brute_pattern_witnesses(
    const SignedGraph& g, int k, const std::vector<std::pair<int, int>>& pattern_edges) {
  std::set<std::vector<int>> hits;
  const int n = g.vertex_count();
  std::vector<int> pick;
  std::vector<int> idx(k);
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<int> perm = pick;
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (auto [a, b] : pattern_edges)
          if (!adjacent(g, perm[a], perm[b])) {
            ok = false;
            break;
          }
        if (ok) {
          hits.insert(pick);
          return;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return hits;
}

// Exhaustive circular coloring search by odometer over all p^n assignments.
inline bool brute_colorable(const SignedGraph& g, int p, int q) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  auto edges = g.alive_edges();
  std::vector<int> phi(n, 0);
  for (;;) {
    bool ok = true;
    for (const Edge& e : edges) {
      int d = std::abs(phi[e.u] - phi[e.v]);
      bool good = e.sign == Sign::Positive ? (q <= d && d <= p - q)
                                           : (d <= p / 2 - q || d >= p / 2 + q);
      if (!good) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = n - 1;
    while (i >= 0 && phi[i] == p - 1) phi[i--] = 0;
    if (i < 0) return false;
    ++phi[i];
  }
}

}  // namespace oracles
