#include "signedhom/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "signedhom/switching.hpp"

namespace signedhom {

SignedGraph make_cstar(int ell) {
  if (ell < 2) throw std::invalid_argument("make_cstar: ell must be >= 2");
  SignedGraph g(ell);
  for (int i = 0; i < ell; ++i) {
    int j = (i + 1) % ell;
    Sign s = (ell % 2 == 0 && i == ell - 1) ? Sign::Negative : Sign::Positive;
    g.add_edge(std::min(i, j), std::max(i, j), s);
  }
  for (int i = 0; i < ell; ++i) g.add_edge(i, i, Sign::Negative);
  return g;
}

namespace {

void validate_pq(int p, int q) {
  if (q < 1) throw std::invalid_argument("circular clique: q must be positive");
  if (p % 2 != 0) throw std::invalid_argument("circular clique: p must be even");
  if (p < 2 * q) throw std::invalid_argument("circular clique: need p >= 2q");
}

}  // namespace

SignedGraph make_circular_clique(int p, int q) {
  validate_pq(p, q);
  SignedGraph g(p);
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      int d = j - i;
      if (q <= d && d <= p - q) g.add_edge(i, j, Sign::Positive);
      if (d <= p / 2 - q || d >= p / 2 + q) g.add_edge(i, j, Sign::Negative);
    }
  }
  return g;
}

SignedGraph make_switching_core(int p, int q) {
  validate_pq(p, q);
  SignedGraph clique = make_circular_clique(p, q);
  SwitchSet top;
  for (int v = p / 2; v < p; ++v) top.push_back(v);
  SignedGraph sw = switched(clique, top);

  const int half = p / 2;
  SignedGraph out(half);
  std::set<std::tuple<int, int, Sign>> seen;
  for (const Edge& e : sw.alive_edges()) {
    int a = e.u % half, b = e.v % half;
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b, e.sign}).second) continue;
    out.add_edge(a, b, e.sign);
  }
  return out;
}

SignedGraph make_w() {
  SignedGraph g(5);
  g.add_edge(2, 3, Sign::Positive);
  g.add_edge(1, 3, Sign::Positive);
  g.add_edge(0, 1, Sign::Positive);
  g.add_edge(0, 2, Sign::Positive);
  g.add_edge(0, 3, Sign::Positive);
  g.add_edge(2, 4, Sign::Positive);
  g.add_edge(1, 4, Sign::Negative);
  return g;
}

SignedGraph make_sk(int k) {
  if (k < 3) throw std::invalid_argument("make_sk: k must be >= 3");
  SignedGraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    Sign s = i == k - 1 ? Sign::Negative : Sign::Positive;
    g.add_edge(std::min(i, j), std::max(i, j), s);
  }
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    int apex = k + i;
    g.add_edge(i, apex, Sign::Positive);
    // The triangle over cycle edge (i, j) must be positive, so the apex pair
    // mirrors that edge's sign product.
    g.add_edge(j, apex, i == k - 1 ? Sign::Negative : Sign::Positive);
  }
  return g;
}

SignedGraph make_petersen() {
  SignedGraph g(10);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    g.add_edge(std::min(i, j), std::max(i, j), Sign::Positive);
  }
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i, Sign::Positive);
  for (int i = 0; i < 5; ++i) {
    int a = 5 + i, b = 5 + (i + 2) % 5;
    g.add_edge(std::min(a, b), std::max(a, b), Sign::Negative);
  }
  return g;
}

SignedGraph random_signed_graph(int n, int m, std::uint64_t seed, bool simple) {
  if (n < 0 || m < 0) throw std::invalid_argument("random_signed_graph: negative size");
  std::mt19937_64 eng(seed);
  // Rejection-sampled bounded draw; avoids distribution objects so streams
  // are identical across standard libraries.
  auto below = [&eng](std::uint64_t bound) -> std::uint64_t {
    if (bound == 0) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = eng();
    } while (x >= limit);
    return x % bound;
  };
  auto coin = [&]() { return below(2) == 1; };

  SignedGraph g(n);
  if (simple) {
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (static_cast<std::uint64_t>(m) > cap)
      throw std::invalid_argument("random_signed_graph: too many edges for a simple graph");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(cap);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    // Partial Fisher-Yates: the first m entries become the sample.
    for (int i = 0; i < m; ++i) {
      std::size_t j = i + static_cast<std::size_t>(below(pairs.size() - i));
      std::swap(pairs[i], pairs[j]);
    }
    for (int i = 0; i < m; ++i)
      g.add_edge(pairs[i].first, pairs[i].second, coin() ? Sign::Negative : Sign::Positive);
  } else {
    if (n == 0 && m > 0)
      throw std::invalid_argument("random_signed_graph: edges need vertices");
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
      std::uint64_t r = below(cap);
      // Unrank an unordered pair with loops allowed.
      int u = 0;
      std::uint64_t row = n;
      while (r >= row) {
        r -= row;
        --row;
        ++u;
      }
      int v = u + static_cast<int>(r);
      g.add_edge(u, v, coin() ? Sign::Negative : Sign::Positive);
    }
  }
  return g;
}

}  // namespace signedhom
