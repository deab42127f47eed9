#include <doctest.h>

#include "oracles.hpp"
#include "signedhom/canonical.hpp"
#include "signedhom/generators.hpp"
#include "signedhom/girth.hpp"
#include "signedhom/structure.hpp"
#include "signedhom/switching.hpp"

using namespace signedhom;

namespace {

Sign cycle_sign(const SignedGraph& g, const std::vector<int>& cycle) {
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    bool found = false;
    for (int id : g.incident_edges(u)) {
      const Edge& e = g.edge(id);
      if (!is_loop(e) && other_endpoint(e, u) == v) {
        s = s * e.sign;
        found = true;
        break;
      }
    }
    REQUIRE(found);
  }
  return s;
}

}  // namespace

TEST_CASE("cstar construction") {
  SignedGraph c3 = make_cstar(3);
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 6);
  CHECK(cycle_sign(c3, {0, 1, 2}) == Sign::Positive);

  SignedGraph c2 = make_cstar(2);
  CHECK(c2.vertex_count() == 2);
  int pos = 0, neg = 0, loops = 0;
  for (const Edge& e : c2.alive_edges()) {
    if (is_loop(e))
      ++loops;
    else
      ++(e.sign == Sign::Positive ? pos : neg);
  }
  CHECK(pos == 1);
  CHECK(neg == 1);
  CHECK(loops == 2);

  // Every cstar cycle is positive: an odd number of positive edges among an
  // even negative count.
  for (int ell = 2; ell <= 7; ++ell) {
    SignedGraph c = make_cstar(ell);
    std::vector<int> cyc(ell);
    for (int i = 0; i < ell; ++i) cyc[i] = i;
    CHECK(cycle_sign(c, cyc) == Sign::Positive);
  }
  CHECK_THROWS_AS(make_cstar(1), std::invalid_argument);
}

TEST_CASE("circular clique structure") {
  SignedGraph c62 = make_circular_clique(6, 2);
  // Negative loop at every vertex.
  int loops = 0;
  for (const Edge& e : c62.alive_edges())
    if (is_loop(e)) {
      CHECK(e.sign == Sign::Negative);
      ++loops;
    }
  CHECK(loops == 6);

  // Vertex 0: positive to {2,3,4}, negative to {0,1,5}.
  std::set<int> pos, neg;
  for (int id : c62.incident_edges(0)) {
    const Edge& e = c62.edge(id);
    (e.sign == Sign::Positive ? pos : neg).insert(other_endpoint(e, 0));
  }
  CHECK(pos == std::set<int>{2, 3, 4});
  CHECK(neg == std::set<int>{0, 1, 5});

  // Digon iff p/q >= 4.
  auto has_digon = [](const SignedGraph& g) {
    std::map<std::pair<int, int>, std::set<Sign>> bundles;
    for (const Edge& e : g.alive_edges())
      if (!is_loop(e)) bundles[{std::min(e.u, e.v), std::max(e.u, e.v)}].insert(e.sign);
    for (auto& [k, v] : bundles)
      if (v.size() == 2) return true;
    return false;
  };
  CHECK(!has_digon(make_circular_clique(6, 2)));
  CHECK(has_digon(make_circular_clique(8, 2)));

  // Antipodal neighborhoods are exactly opposite.
  for (auto [p, q] : std::vector<std::pair<int, int>>{{6, 2}, {8, 3}, {10, 3}}) {
    SignedGraph kq = make_circular_clique(p, q);
    for (int j = 1; j < p; ++j) {
      std::set<int> pos0, neg0, posa, nega;
      for (int id : kq.incident_edges(0)) {
        const Edge& e = kq.edge(id);
        (e.sign == Sign::Positive ? pos0 : neg0).insert(other_endpoint(e, 0));
      }
      int anti = p / 2;
      for (int id : kq.incident_edges(anti)) {
        const Edge& e = kq.edge(id);
        std::set<int>& dst = e.sign == Sign::Positive ? posa : nega;
        dst.insert(other_endpoint(e, anti));
      }
      CHECK(pos0.count(j) == nega.count(j));
      CHECK(neg0.count(j) == posa.count(j));
    }
  }
  CHECK_THROWS_AS(make_circular_clique(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_circular_clique(6, 4), std::invalid_argument);
}

TEST_CASE("switching core") {
  CHECK(make_switching_core(10, 3).vertex_count() == 5);
  CHECK(canonical_form(make_switching_core(6, 2)) == canonical_form(make_cstar(3)));
  CHECK(canonical_form(make_switching_core(4, 1)) == canonical_form(make_cstar(2)));
  for (int ell = 2; ell <= 6; ++ell)
    CHECK(canonical_form(make_switching_core(2 * ell, ell - 1)) ==
          canonical_form(make_cstar(ell)));
}

TEST_CASE("the 5-vertex witness") {
  SignedGraph w = make_w();
  CHECK(w.vertex_count() == 5);
  CHECK(w.edge_count() == 7);
  CHECK(potential(w) == 1);
  int neg = 0;
  for (const Edge& e : w.alive_edges()) neg += e.sign == Sign::Negative;
  CHECK(neg == 1);
}

TEST_CASE("sk family") {
  for (int k = 3; k <= 8; ++k) {
    SignedGraph sk = make_sk(k);
    CHECK(sk.vertex_count() == 2 * k);
    CHECK(sk.edge_count() == 3 * k);
    CHECK(2 * sk.edge_count() == 3 * sk.vertex_count());

    // The k-cycle is negative; every apex triangle is positive.
    std::vector<int> cyc(k);
    for (int i = 0; i < k; ++i) cyc[i] = i;
    CHECK(cycle_sign(sk, cyc) == Sign::Negative);
    for (int i = 0; i < k; ++i)
      CHECK(triangle_sign_exists(sk, i, (i + 1) % k, k + i, Sign::Positive));

    int neg = 0;
    for (const Edge& e : sk.alive_edges()) neg += e.sign == Sign::Negative;
    CHECK(neg == 2);
  }
  CHECK_THROWS_AS(make_sk(2), std::invalid_argument);
}

TEST_CASE("petersen graph") {
  SignedGraph p = make_petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(potential(p) == 0);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  for (int id : p.alive_edge_ids()) CHECK(potential(delete_edge(p, id)) == 2);

  // The re-signing with no two incident negative edges is switching
  // equivalent to the constructed one: negative exactly on v2v3, v4v5, u2u5.
  std::vector<Sign> resigned;
  for (const Edge& e : p.alive_edges()) {
    auto is_one_of = [&](int a, int b) {
      return (e.u == a && e.v == b) || (e.u == b && e.v == a);
    };
    bool negative = is_one_of(1, 2) || is_one_of(3, 4) || is_one_of(6, 9);
    resigned.push_back(negative ? Sign::Negative : Sign::Positive);
  }
  auto wit = is_switching_equivalent(p, resigned);
  REQUIRE(wit.has_value());
  CHECK(switched(p, *wit).signature() == resigned);
}

TEST_CASE("random graphs are deterministic") {
  CHECK(random_signed_graph(8, 12, 7) == random_signed_graph(8, 12, 7));
  CHECK(random_signed_graph(5, 0, 1).edge_count() == 0);
  CHECK(random_signed_graph(6, 9, 3, false) == random_signed_graph(6, 9, 3, false));
  CHECK_THROWS_AS(random_signed_graph(3, 4, 1), std::invalid_argument);

  // Simple mode: no loops, no duplicate pairs.
  SignedGraph g = random_signed_graph(7, 21, 13);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.alive_edges()) {
    CHECK(!is_loop(e));
    CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
  }
}
