#include "signedhom/circular.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "signedhom/generators.hpp"

namespace signedhom {

bool check_circular_coloring(const SignedGraph& g, const CircularColoring& c) {
  if (c.p < 2 || c.p % 2 != 0 || c.q < 1 || c.p < 2 * c.q)
    throw std::invalid_argument("check_circular_coloring: bad (p, q)");
  if (static_cast<int>(c.phi.size()) != g.vertex_count())
    throw std::invalid_argument("check_circular_coloring: phi size mismatch");
  for (int x : c.phi)
    if (x < 0 || x >= c.p) throw std::invalid_argument("check_circular_coloring: color range");

  for (const Edge& e : g.alive_edges()) {
    int d = std::abs(c.phi[e.u] - c.phi[e.v]);
    if (e.sign == Sign::Positive) {
      if (!(c.q <= d && d <= c.p - c.q)) return false;
    } else {
      if (!(d <= c.p / 2 - c.q || d >= c.p / 2 + c.q)) return false;
    }
  }
  return true;
}

ColoringResult find_circular_coloring(const SignedGraph& g, int p, int q,
                                      const SolveOptions& opts) {
  SignedGraph clique = make_circular_clique(p, q);  // validates (p, q)
  std::vector<std::pair<int, int>> pinned;
  if (g.vertex_count() > 0) pinned.emplace_back(0, 0);
  SolveResult r = extend_esp_hom(g, clique, pinned, {}, opts);

  ColoringResult out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.found()) {
    CircularColoring c{p, q, r.witness->mapping};
    if (!check_circular_coloring(g, c))
      throw std::logic_error("find_circular_coloring: witness failed the direct check");
    out.coloring = std::move(c);
  }
  return out;
}

namespace {

// (p, q) with p even representing the reduced value a/b.
std::pair<int, int> even_representation(int a, int b) {
  return a % 2 == 0 ? std::pair{a, b} : std::pair{2 * a, 2 * b};
}

}  // namespace

ChicResult circular_chromatic_number(const SignedGraph& g, int qmax, const SolveOptions& opts) {
  ChicResult out;
  out.qmax = qmax <= 0 ? std::max(1, g.vertex_count()) : qmax;

  if (g.edge_count() == 0) {
    out.status = SolveStatus::Found;
    out.degenerate_edgeless = true;
    out.p = 2;
    out.q = 2;
    out.value = Rational(1);
    out.witness = CircularColoring{2, 1, std::vector<int>(g.vertex_count(), 0)};
    return out;
  }
  for (const Edge& e : g.alive_edges()) {
    if (is_loop(e) && e.sign == Sign::Positive) {
      out.status = SolveStatus::Absent;  // a positive loop defeats every (p, q)
      return out;
    }
  }

  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> candidates;  // reduced (a, b)
  for (int b = 1; b <= out.qmax; ++b)
    for (int a = 2 * b; a <= 4 * n * b; ++a)
      if (std::gcd(a, b) == 1) candidates.emplace_back(a, b);
  std::sort(candidates.begin(), candidates.end(), [](auto x, auto y) {
    long long lhs = static_cast<long long>(x.first) * y.second;
    long long rhs = static_cast<long long>(y.first) * x.second;
    if (lhs != rhs) return lhs < rhs;
    return x.first < y.first;
  });

  bool skipped_below = false;
  for (auto [a, b] : candidates) {
    auto [p, q] = even_representation(a, b);
    if (p > 128) {
      // Beyond the solver's clique capacity: record the gap instead of
      // pretending the candidate failed.
      out.tested.push_back({Rational(a, b), p, q, SolveStatus::Undecided, 0});
      skipped_below = true;
      continue;
    }
    ColoringResult r = find_circular_coloring(g, p, q, opts);
    out.tested.push_back({Rational(a, b), p, q, r.status, r.nodes});
    if (r.status == SolveStatus::Undecided) {
      out.status = SolveStatus::Undecided;
      return out;
    }
    if (r.found()) {
      // Minimality holds only when every smaller candidate genuinely failed.
      out.status = skipped_below ? SolveStatus::Undecided : SolveStatus::Found;
      out.value = Rational(a, b);
      out.p = p;
      out.q = q;
      out.witness = std::move(r.coloring);
      return out;
    }
  }
  out.status = SolveStatus::Absent;
  return out;
}

}  // namespace signedhom
