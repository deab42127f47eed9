#include "signedhom/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace signedhom {

namespace {

// Runs f over every vertex ordering that lists degrees ascending (orderings
// permuting within equal-degree runs). Minimal encodings always use one of
// these, because the encoding starts with the degree sequence.
template <typename F>
void for_each_degree_perm(const std::vector<int>& degree, F f) {
  const int n = static_cast<int>(degree.size());
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::sort(base.begin(), base.end(),
            [&](int a, int b) { return degree[a] != degree[b] ? degree[a] < degree[b] : a < b; });

  std::vector<std::pair<int, int>> runs;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[base[j]] == degree[base[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }

  std::vector<int> perm = base;
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

}  // namespace

std::string CanonicalKey::hex() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

CanonicalKey canonical_form(const SignedGraph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) throw std::invalid_argument("canonical_form: vertex limit exceeded");
  if (n > 12) throw std::invalid_argument("canonical_form: too many vertices");

  // Per-pair bundle counts (cells (i, j) with i <= j; diagonal = loops).
  const int cells = n * (n + 1) / 2;
  auto cell = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  std::vector<int> pos(cells, 0), neg(cells, 0);
  std::vector<int> degree(n, 0);
  for (const Edge& e : g.alive_edges()) {
    (e.sign == Sign::Positive ? pos : neg)[cell(e.u, e.v)]++;
    degree[e.u] += is_loop(e) ? 2 : 0;
    if (!is_loop(e)) {
      degree[e.u]++;
      degree[e.v]++;
    }
  }

  std::string best;
  for_each_degree_perm(degree, [&](const std::vector<int>& perm) {
    // perm[i] = original vertex placed at label i.
    std::string enc;
    enc.reserve(1 + n + cells * 2);
    enc.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) enc.push_back(static_cast<char>(degree[perm[i]]));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int c = cell(perm[i], perm[j]);
        enc.push_back(static_cast<char>(pos[c] + neg[c]));
      }
    std::string head = enc;  // underlying part
    if (!best.empty() && head > best.substr(0, head.size())) return;

    // Minimal negative-count vector over all switchings for this labeling.
    std::string best_tail;
    std::string tail(static_cast<std::size_t>(cells), '\0');
    for (int mask = 0; mask < (1 << n); ++mask) {
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          int c = cell(perm[i], perm[j]);
          bool flip = i != j && (((mask >> i) & 1) ^ ((mask >> j) & 1));
          tail[k++] = static_cast<char>(flip ? pos[c] : neg[c]);
        }
      if (best_tail.empty() || tail < best_tail) best_tail = tail;
    }
    enc = head + best_tail;
    if (best.empty() || enc < best) best = enc;
  });

  return CanonicalKey{best};
}

}  // namespace signedhom
