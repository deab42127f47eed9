#include "signedhom/census.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace signedhom {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Adjacency bitmask rows for a simple graph on few vertices.
struct BitGraph {
  int n = 0;
  std::vector<unsigned> row;

  bool adj(int u, int v) const { return (row[u] >> v) & 1; }
  void set(int u, int v) {
    row[u] |= 1u << v;
    row[v] |= 1u << u;
  }
};

BitGraph from_edges(int n, const EdgeList& edges) {
  BitGraph g{n, std::vector<unsigned>(n, 0)};
  for (auto [u, v] : edges) g.set(u, v);
  return g;
}

template <typename F>
void for_each_degree_perm(const std::vector<int>& degree, F f) {
  const int n = static_cast<int>(degree.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return degree[a] != degree[b] ? degree[a] < degree[b] : a < b; });
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[perm[j]] == degree[perm[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      f(perm);
      return;
    }
    auto [b, e] = runs[r];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      rec(r + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  rec(0);
}

// Encoding minimized over degree-ascending labelings: upper-triangle
// adjacency bits packed into one word (n <= 8).
std::uint64_t encode(const BitGraph& g, const std::vector<int>& perm) {
  std::uint64_t bits = 0;
  int k = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++k)
      if (g.adj(perm[i], perm[j])) bits |= 1ull << k;
  return bits;
}

std::vector<int> degrees(const BitGraph& g) {
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = std::popcount(g.row[v]);
  return deg;
}

// Canonical edge list (lex-sorted) of the relabeled graph.
EdgeList canonical_simple(const BitGraph& g) {
  auto deg = degrees(g);
  std::vector<int> sorted_deg = deg;
  std::sort(sorted_deg.begin(), sorted_deg.end());
  std::uint64_t best = ~0ull;
  std::vector<int> best_perm;
  for_each_degree_perm(deg, [&](const std::vector<int>& perm) {
    std::uint64_t e = encode(g, perm);
    if (e < best) {
      best = e;
      best_perm = perm;
    }
  });
  std::vector<int> label(g.n);
  for (int i = 0; i < g.n; ++i) label[best_perm[i]] = i;
  EdgeList out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adj(u, v)) out.emplace_back(std::min(label[u], label[v]),
                                        std::max(label[u], label[v]));
  std::sort(out.begin(), out.end());
  return out;
}

std::mutex cache_mutex;
std::map<int, std::vector<EdgeList>> graph_cache;

}  // namespace

const std::vector<EdgeList>& simple_graphs_up_to_iso(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("simple_graphs_up_to_iso: 0 <= n <= 8");
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = graph_cache.find(n); it != graph_cache.end()) return it->second;

  std::function<const std::vector<EdgeList>&(int)> build =
      [&](int k) -> const std::vector<EdgeList>& {
    if (auto it = graph_cache.find(k); it != graph_cache.end()) return it->second;
    std::vector<EdgeList> out;
    if (k == 0) {
      out.push_back({});
    } else {
      const auto& prev = build(k - 1);
      std::set<EdgeList> seen;
      for (const EdgeList& base : prev) {
        for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
          BitGraph g{k, std::vector<unsigned>(k, 0)};
          for (auto [u, v] : base) g.set(u, v);
          for (int v = 0; v < k - 1; ++v)
            if ((mask >> v) & 1) g.set(v, k - 1);
          seen.insert(canonical_simple(g));
        }
      }
      out.assign(seen.begin(), seen.end());
    }
    return graph_cache.emplace(k, std::move(out)).first->second;
  };
  return build(n);
}

namespace {

// Signature machinery for one canonically labeled simple underlying graph.
// Signatures are bitmasks over the sorted edge list (bit = negative); the
// canonical class representative is the minimal forest-normalized mask over
// the automorphism group.
struct SigCanon {
  int n = 0;
  EdgeList edges;
  std::vector<std::vector<int>> aut_edge_perm;
  std::vector<int> parent_edge;   // per vertex, -1 for component roots
  std::vector<int> bfs_order;
  std::vector<int> cotree;        // edge indices outside the forest

  SigCanon(int n_, const EdgeList& e) : n(n_), edges(e) {
    BitGraph g = from_edges(n, edges);
    auto deg = degrees(g);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);

    for_each_degree_perm(deg, [&](const std::vector<int>& perm) {
      // perm lists originals by new label; an automorphism keeps the edge set.
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[perm[i]] = i;
      std::vector<int> eperm(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int a = label[u], b = label[v];
        if (a > b) std::swap(a, b);
        auto it = index.find({a, b});
        if (it == index.end()) return;  // not an automorphism
        eperm[i] = it->second;
      }
      aut_edge_perm.push_back(std::move(eperm));
    });

    parent_edge.assign(n, -1);
    std::vector<char> seen(n, 0), edge_in_forest(edges.size(), 0);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::vector<int> queue{root};
      bfs_order.push_back(root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (std::size_t i = 0; i < edges.size(); ++i) {
          auto [a, b] = edges[i];
          if (a != u && b != u) continue;
          int w = a == u ? b : a;
          if (seen[w]) continue;
          seen[w] = 1;
          parent_edge[w] = static_cast<int>(i);
          edge_in_forest[i] = 1;
          queue.push_back(w);
          bfs_order.push_back(w);
        }
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!edge_in_forest[i]) cotree.push_back(static_cast<int>(i));
  }

  std::uint32_t normalize(std::uint32_t sig) const {
    std::vector<char> bit(n, 0);
    for (int v : bfs_order) {
      int pe = parent_edge[v];
      if (pe < 0) continue;
      auto [a, b] = edges[pe];
      int parent = a;  // whichever endpoint was labeled first
      int child = b;
      if (parent_edge[a] == pe) std::swap(parent, child);
      bit[child] = bit[parent] ^ ((sig >> pe) & 1);
    }
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (((sig >> i) & 1) ^ bit[a] ^ bit[b]) out |= 1u << i;
    }
    return out;
  }

  std::uint32_t apply(const std::vector<int>& eperm, std::uint32_t sig) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((sig >> i) & 1) out |= 1u << eperm[i];
    return out;
  }

  bool is_representative(std::uint32_t sig) const {
    for (const auto& eperm : aut_edge_perm)
      if (normalize(apply(eperm, sig)) < sig) return false;
    return true;
  }

  std::uint32_t expand_cotree(std::uint32_t cotree_mask) const {
    std::uint32_t sig = 0;
    for (std::size_t i = 0; i < cotree.size(); ++i)
      if ((cotree_mask >> i) & 1) sig |= 1u << cotree[i];
    return sig;
  }

  SignedGraph build(std::uint32_t sig) const {
    SignedGraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.add_edge(edges[i].first, edges[i].second,
                 ((sig >> i) & 1) ? Sign::Negative : Sign::Positive);
    return g;
  }
};

template <typename PerMask>
void scan_signatures(const SigCanon& sc, int workers, const PerMask& per_mask) {
  const std::uint32_t total = 1u << sc.cotree.size();
  if (workers <= 1 || total < 1024) {
    for (std::uint32_t m = 0; m < total; ++m) per_mask(m);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::uint32_t m = w; m < total; m += workers) per_mask(m);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void enumerate_signed_graphs(int n, int min_degree,
                             const std::function<void(const SignedGraph&)>& sink, int workers) {
  const auto& graphs = simple_graphs_up_to_iso(n);
  for (const EdgeList& edges : graphs) {
    BitGraph bg = from_edges(n, edges);
    auto deg = degrees(bg);
    if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d < min_degree; })) continue;
    SigCanon sc(n, edges);

    std::mutex mu;
    std::vector<std::uint32_t> reps;
    scan_signatures(sc, workers, [&](std::uint32_t mask) {
      std::uint32_t sig = sc.expand_cotree(mask);
      if (sc.is_representative(sig)) {
        std::lock_guard<std::mutex> lock(mu);
        reps.push_back(sig);
      }
    });
    std::sort(reps.begin(), reps.end());
    for (std::uint32_t sig : reps) sink(sc.build(sig));
  }
}

std::vector<SignedGraph> enumerate_signed_graphs(int n, int min_degree, int workers) {
  std::vector<SignedGraph> out;
  enumerate_signed_graphs(
      n, min_degree, [&](const SignedGraph& g) { out.push_back(g); }, workers);
  return out;
}

CensusResult find_critical_up_to(int n_max, const SignedGraph& target,
                                 const CensusOptions& options) {
  CensusResult result;
  SolveOptions solve_opts{options.node_budget};

  for (int n = 1; n <= n_max; ++n) {
    CensusStats stats;
    stats.n = n;
    if (n < options.start_n) {
      result.stats.push_back(stats);
      continue;
    }
    const auto& graphs = simple_graphs_up_to_iso(n);

    int graph_index = -1;
    for (const EdgeList& edges : graphs) {
      ++graph_index;
      if (n == options.start_n && graph_index < options.start_graph_index) continue;
      BitGraph bg = from_edges(n, edges);
      auto deg = degrees(bg);
      if (std::any_of(deg.begin(), deg.end(),
                      [&](int d) { return d < options.min_degree; }))
        continue;
      ++stats.underlying_graphs;
      SigCanon sc(n, edges);

      struct Hit {
        std::uint32_t sig;
        CriticalityReport report;
      };
      std::mutex mu;
      std::vector<Hit> hits;
      std::uint64_t classes = 0;
      scan_signatures(sc, options.workers, [&](std::uint32_t mask) {
        std::uint32_t sig = sc.expand_cotree(mask);
        if (!sc.is_representative(sig)) return;
        SignedGraph g = sc.build(sig);
        CriticalityReport rep = is_critical(g, target, solve_opts);
        std::lock_guard<std::mutex> lock(mu);
        ++classes;
        if (rep.verdict == Verdict::Critical || rep.verdict == Verdict::Undecided)
          hits.push_back({sig, std::move(rep)});
      });
      stats.signed_classes += classes;
      std::sort(hits.begin(), hits.end(),
                [](const Hit& a, const Hit& b) { return a.sig < b.sig; });
      for (Hit& h : hits) {
        if (h.report.verdict == Verdict::Undecided) {
          ++stats.undecided;
          result.complete = false;
          continue;
        }
        ++stats.critical;
        CensusEntry entry;
        entry.n = n;
        entry.graph = sc.build(h.sig);
        entry.key = canonical_form(entry.graph);
        entry.report = std::move(h.report);
        result.criticals.push_back(std::move(entry));
      }
      if (options.on_progress) {
        std::uint64_t classes_total = 0, crit_total = 0;
        for (const auto& s : result.stats) {
          classes_total += s.signed_classes;
          crit_total += s.critical;
        }
        options.on_progress(CensusProgress{n, graph_index, static_cast<int>(graphs.size()),
                                           classes_total + stats.signed_classes,
                                           crit_total + stats.critical});
      }
    }
    result.stats.push_back(stats);
  }
  return result;
}

}  // namespace signedhom
