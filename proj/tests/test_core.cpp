#include <doctest.h>

#include "oracles.hpp"
#include "signedhom/generators.hpp"
#include "signedhom/girth.hpp"
#include "signedhom/graph.hpp"
#include "signedhom/io.hpp"
#include "signedhom/rational.hpp"
#include "signedhom/switching.hpp"

using namespace signedhom;

TEST_CASE("sign product") {
  CHECK(Sign::Negative * Sign::Negative == Sign::Positive);
  CHECK(Sign::Negative * Sign::Positive == Sign::Negative);
  CHECK(flipped(Sign::Positive) == Sign::Negative);
}

TEST_CASE("rational reduction and order") {
  CHECK(Rational(6, 2) == Rational(3));
  CHECK(Rational(10, 4).to_string() == "5/2");
  CHECK(Rational(10, 3) > Rational(3));
  CHECK(Rational(5, 2) < Rational(8, 3));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(3) - Rational(1, 2) == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("sg parsing") {
  SignedGraph k2 = parse_sg("sg 2 1\n0 1 +");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.edge(0).sign == Sign::Positive);

  SignedGraph loop = parse_sg("sg 1 1\n0 0 -");
  CHECK(loop.degree(0) == 2);
  CHECK(is_loop(loop.edge(0)));

  SignedGraph commented = parse_sg("# a comment\nsg 2 1\n# another\n0 1 -\n");
  CHECK(commented.edge(0).sign == Sign::Negative);

  CHECK_THROWS_AS(parse_sg("sg x 1\n0 1 +"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 2 1\n0 2 +"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 2 1\n0 1 *"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 2 2\n0 1 +"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 2 1\n0 1 +\n1 0 -"), ParseError);
  CHECK_THROWS_AS(parse_sg(""), ParseError);

  // Line numbers point at the offending line.
  try {
    parse_sg("sg 2 2\n0 1 +\n0 5 -");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("sg round trip") {
  SignedGraph w = make_w();
  CHECK(parse_sg(serialize_sg(w)) == w);
  SignedGraph c2 = make_cstar(2);
  CHECK(parse_sg(serialize_sg(c2)) == c2);
}

TEST_CASE("switching basics") {
  SignedGraph k2(2);
  k2.add_edge(0, 1, Sign::Positive);
  SignedGraph swk2 = switched(k2, {0});
  CHECK(swk2.edge(0).sign == Sign::Negative);

  SignedGraph loop(1);
  loop.add_edge(0, 0, Sign::Negative);
  CHECK(switched(loop, {0}) == loop);
}

TEST_CASE("switching is an involution on random graphs") {
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 7;
    SignedGraph g = random_signed_graph(n, (i * 5) % (n * (n - 1) / 2 + 1), 77 + i);
    SwitchSet s;
    for (int v = 0; v < n; ++v)
      if ((i >> (v % 5)) & 1) s.push_back(v);
    CHECK(switched(switched(g, s), s) == g);
  }
}

TEST_CASE("switching equivalence witness") {
  SignedGraph g = make_w();
  CHECK(is_switching_equivalent(g, g.signature()).has_value());

  SignedGraph tri(3);
  tri.add_edge(0, 1, Sign::Positive);
  tri.add_edge(1, 2, Sign::Positive);
  tri.add_edge(0, 2, Sign::Positive);
  std::vector<Sign> one_neg{Sign::Negative, Sign::Positive, Sign::Positive};
  CHECK(!is_switching_equivalent(tri, one_neg).has_value());

  std::vector<Sign> two_neg{Sign::Negative, Sign::Negative, Sign::Positive};
  auto wit = is_switching_equivalent(tri, two_neg);
  REQUIRE(wit.has_value());
  CHECK(switched(tri, *wit).signature() == two_neg);

  CHECK_THROWS_AS(is_switching_equivalent(tri, {Sign::Positive}), std::invalid_argument);
}

TEST_CASE("switching equivalence on random switches") {
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 6;
    SignedGraph g = random_signed_graph(n, (i * 3 + 1) % (n * (n - 1) / 2 + 1), 3000 + i);
    SwitchSet s;
    for (int v = 0; v < n; ++v)
      if (((i * 31) >> v) & 1) s.push_back(v);
    auto wanted = switched(g, s).signature();
    auto wit = is_switching_equivalent(g, wanted);
    REQUIRE(wit.has_value());
    CHECK(switched(g, *wit).signature() == wanted);
  }
}

TEST_CASE("cut characterization against exhaustive switching") {
  // On small graphs, equivalence decided by the witness search must match
  // trying all 2^n switch sets.
  for (int i = 0; i < 40; ++i) {
    int n = 2 + i % 5;
    SignedGraph g = random_signed_graph(n, (i * 7 + 2) % (n * (n - 1) / 2 + 1), 4100 + i);
    SignedGraph other = random_signed_graph(n, g.edge_count(), 5200 + i);
    // Same underlying graph, maybe different signs: rebuild other's signs on g.
    std::vector<Sign> sigma2 = other.signature();
    sigma2.resize(g.edge_count(), Sign::Positive);
    bool brute = false;
    for (int mask = 0; mask < (1 << n) && !brute; ++mask) {
      SwitchSet s;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.push_back(v);
      if (switched(g, s).signature() == sigma2) brute = true;
    }
    CHECK(is_switching_equivalent(g, sigma2).has_value() == brute);
  }
}

TEST_CASE("signed girths of the named graphs") {
  GirthTable c3 = signed_girths(make_cstar(3));
  CHECK(c3.at(WalkParity::Odd, Sign::Positive) == 3);
  CHECK(c3.at(WalkParity::Even, Sign::Negative) == 4);
  CHECK(c3.at(WalkParity::Odd, Sign::Negative) == 1);
  CHECK(c3.at(WalkParity::Even, Sign::Positive) == 2);

  SignedGraph tri(3);
  tri.add_edge(0, 1, Sign::Positive);
  tri.add_edge(1, 2, Sign::Positive);
  tri.add_edge(0, 2, Sign::Positive);
  GirthTable t = signed_girths(tri);
  CHECK(t.at(WalkParity::Odd, Sign::Positive) == 3);
  CHECK(t.at(WalkParity::Even, Sign::Positive) == 2);
  CHECK(t.at(WalkParity::Odd, Sign::Negative) == kNoClosedWalk);
  CHECK(t.at(WalkParity::Even, Sign::Negative) == kNoClosedWalk);

  SignedGraph loop(1);
  loop.add_edge(0, 0, Sign::Negative);
  GirthTable l = signed_girths(loop);
  CHECK(l.at(WalkParity::Odd, Sign::Negative) == 1);
  CHECK(l.at(WalkParity::Even, Sign::Positive) == 2);
  CHECK(l.at(WalkParity::Odd, Sign::Positive) == kNoClosedWalk);
  CHECK(l.at(WalkParity::Even, Sign::Negative) == kNoClosedWalk);

  // The odd/positive girth of the 4-cycle star needs five edges: an even
  // cycle contribution plus one loop.
  CHECK(signed_girths(make_cstar(4)).at(WalkParity::Odd, Sign::Positive) == 5);
}

TEST_CASE("signed girths agree with walk enumeration") {
  for (int i = 0; i < 60; ++i) {
    int n = 2 + i % 6;  // up to 7 vertices
    SignedGraph g = random_signed_graph(n, (i * 5 + 1) % (n * (n - 1) / 2 + 1), 600 + i);
    if (i % 3 == 0) g = random_signed_graph(n, (i * 5) % (2 * n + 1), 600 + i, false);
    GirthTable fast = signed_girths(g);
    GirthTable slow = oracles::brute_girths(g, 2 * n);
    for (int t = 0; t < 4; ++t) {
      if (fast.len[t] <= 2 * n)
        CHECK(fast.len[t] == slow.len[t]);
      else
        CHECK(slow.len[t] == kNoClosedWalk);
    }
  }
}

TEST_CASE("girth monotonicity under edge deletion") {
  for (int i = 0; i < 30; ++i) {
    int n = 3 + i % 5;
    SignedGraph g = random_signed_graph(n, (i * 3 + 2) % (n * (n - 1) / 2 + 1), 8200 + i);
    if (g.edge_count() == 0) continue;
    GirthTable before = signed_girths(g);
    GirthTable after = signed_girths(delete_edge(g, g.alive_edge_ids()[i % g.edge_count()]));
    CHECK(after.dominates(before));
  }
}

TEST_CASE("potential of small graphs") {
  SignedGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, (u + v) % 2 ? Sign::Negative : Sign::Positive);
  CHECK(potential(k4) == 0);
  CHECK(potential(SignedGraph(1)) == 3);
  SignedGraph k2(2);
  k2.add_edge(0, 1, Sign::Positive);
  CHECK(potential(k2) == 4);
  CHECK(potential(make_w()) == 1);
}

TEST_CASE("potential under edits") {
  SignedGraph g = make_w();
  CHECK(potential(delete_edge(g, 0)) == potential(g) + 2);
  int d = g.degree(4);
  CHECK(potential(delete_vertex(g, 4)) == potential(g) - 3 + 2 * d);
}

TEST_CASE("degree classes") {
  SignedGraph w = make_w();
  CHECK(classify_vertex(w, 1) == DegreeClass{3, 1});
  CHECK(classify_vertex(w, 0) == DegreeClass{3, 0});
  CHECK(classify_vertex(w, 4) == DegreeClass{2, 0});

  SignedGraph path(3);
  path.add_edge(0, 1, Sign::Positive);
  path.add_edge(1, 2, Sign::Positive);
  CHECK(classify_vertex(path, 1).degree == 2);
  CHECK(classify_vertex(path, 0) == DegreeClass{1, 1});
}

TEST_CASE("edit operations") {
  SignedGraph k2(2);
  k2.add_edge(0, 1, Sign::Positive);
  CHECK(delete_vertex(k2, 0).vertex_count() == 1);
  CHECK(delete_vertex(k2, 0).edge_count() == 0);

  // Stable ids: deleting an edge never renumbers the others.
  SignedGraph w = make_w();
  SignedGraph smaller = delete_edge(w, 3);
  CHECK(!smaller.edge_alive(3));
  CHECK(smaller.edge(6) == w.edge(6));
  CHECK(smaller.edge_count() == 6);
  CHECK(audit_adjacency(smaller));

  // Identification keeps a digon but collapses same-sign duplicates.
  SignedGraph square(4);
  square.add_edge(0, 1, Sign::Negative);
  square.add_edge(1, 2, Sign::Positive);
  square.add_edge(2, 3, Sign::Positive);
  square.add_edge(3, 0, Sign::Positive);
  SignedGraph merged = identify_vertices(square, 0, 1);
  CHECK(merged.vertex_count() == 3);
  bool has_negative_loop = false;
  for (const Edge& e : merged.alive_edges())
    if (is_loop(e) && e.sign == Sign::Negative) has_negative_loop = true;
  CHECK(has_negative_loop);
}

TEST_CASE("adjacency audit") {
  CHECK(audit_adjacency(make_w()));
  CHECK(audit_adjacency(make_cstar(2)));
  CHECK(audit_adjacency(random_signed_graph(6, 14, 9, false)));
}
