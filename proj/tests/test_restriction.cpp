#include "doctest.h"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "paraac/restriction.hpp"
#include "paraac/zoo.hpp"

using namespace paraac;

namespace {

Graph graph_from_mask(int n, uint32_t mask) {
  Graph g(n);
  for (int e = 0; e < pair_count(n); ++e)
    if (mask >> e & 1) {
      Edge edge = edge_at(n, e);
      g.add_edge(edge.u, edge.v);
    }
  return g;
}

// enumerate every restriction on [n]: all star supports x all fixed patterns
template <class Fn>
void for_each_restriction(int n, Fn&& fn) {
  for (uint32_t star_mask = 0; star_mask < (1u << n); ++star_mask) {
    VertexSet star(n);
    for (int v = 1; v <= n; ++v)
      if (star_mask >> (v - 1) & 1) star.insert(v);
    std::vector<int> free_positions;
    for (int e = 0; e < pair_count(n); ++e) {
      Edge edge = edge_at(n, e);
      if (!(star.contains(edge.u) && star.contains(edge.v))) free_positions.push_back(e);
    }
    for (uint32_t bits = 0; bits < (1u << free_positions.size()); ++bits) {
      std::vector<uint64_t> fixed((pair_count(n) + 63) / 64, 0);
      for (size_t i = 0; i < free_positions.size(); ++i)
        if (bits >> i & 1) fixed[free_positions[i] >> 6] |= uint64_t(1) << (free_positions[i] & 63);
      fn(Restriction(n, star, fixed));
    }
  }
}

}  // namespace

TEST_CASE("sampled restrictions have the right shape") {
  RngStream rng(5, 0);
  Restriction all = sample_restriction(4, 4, 0.5, rng);
  CHECK(all.star_support().size() == 4);
  CHECK(all.star_edge_count() == 6);
  CHECK(all.fixed_one_graph().edge_count() == 0);

  Restriction total = sample_restriction(4, 1, 1.0, rng);
  CHECK(total.star_edge_count() == 0);
  // every edge incident to the star singleton is still fixed, all to 1
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v)
      CHECK(total.value(u, v) == Restriction::Value::One);

  Restriction zero = sample_restriction(5, 0, 0.0, rng);
  CHECK(zero.fixed_one_graph().edge_count() == 0);
  CHECK(zero.star_edge_count() == 0);

  CHECK_THROWS_AS(sample_restriction(4, 5, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_restriction(4, 2, 1.5, rng), std::invalid_argument);
}

TEST_CASE("restrict_function on the stated examples") {
  int n = 4;
  GraphPredicate probe = [](const Graph& g) { return g.has_edge(1, 2); };

  // mu fixes X_{1,2} to 1: the restriction is constant 1
  VertexSet star_34 = VertexSet::from_vertices(n, {3, 4});
  std::vector<uint64_t> ones((pair_count(n) + 63) / 64, ~uint64_t(0));
  Restriction fix_one(n, star_34, ones);
  BoolFunc constant = restrict_function(n, probe, fix_one);
  CHECK(constant.is_constant());
  CHECK(constant.value(0));

  // {1,2} inside the star block: the restriction is the identity on X_{1,2}
  VertexSet star_12 = VertexSet::from_vertices(n, {1, 2});
  Restriction keep(n, star_12, {});
  BoolFunc ident = restrict_function(n, probe, keep);
  REQUIRE(ident.var_count() == 1);
  CHECK(ident.variables()[0] == Edge{1, 2});
  CHECK_FALSE(ident.value(0));
  CHECK(ident.value(1));

  // triangle detector, star {1,2,3}, everything else fixed to 0:
  // the table must match brute-force completion, i.e. AND of the 3 edges
  Restriction tri_mu(n, VertexSet::from_vertices(n, {1, 2, 3}), {});
  BoolFunc tri = restrict_function(n, graph_has_triangle, tri_mu);
  REQUIRE(tri.var_count() == 3);
  for (uint32_t row = 0; row < 8; ++row) CHECK(tri.value(row) == (row == 7));
}

TEST_CASE("restriction semantics F|mu(S) = F(S ∪ mu), exhaustive on [4]") {
  int n = 4;
  RngStream rng(1234, 0);
  for (int round = 0; round < 20; ++round) {
    // a random function as a 64-row table over all edges of [4]
    uint64_t table = rng.next_u64();
    GraphPredicate f = [table, n](const Graph& g) {
      uint32_t row = 0;
      for (int e = 0; e < pair_count(n); ++e) {
        Edge edge = edge_at(n, e);
        if (g.has_edge(edge.u, edge.v)) row |= uint32_t(1) << e;
      }
      return bool(table >> row & 1);
    };
    for_each_restriction(n, [&](const Restriction& mu) {
      BoolFunc restricted = restrict_function(n, f, mu);
      std::vector<Edge> stars = mu.star_edges();
      for (uint32_t s = 0; s < restricted.row_count(); ++s) {
        Graph combined = mu.fixed_one_graph();
        for (size_t i = 0; i < stars.size(); ++i)
          if (s >> i & 1) combined.add_edge(stars[i].u, stars[i].v);
        CHECK(restricted.value(s) == f(combined));
      }
    });
  }
}

TEST_CASE("compose: all-star pi is the identity") {
  RngStream rng(9, 0);
  Restriction mu = sample_restriction(6, 4, 0.5, rng);
  Restriction pi = Restriction::all_star(4);
  Restriction composed = compose_restrictions(mu, pi);
  CHECK(composed.star_support() == mu.star_support());
  for (Vertex u = 1; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v) CHECK(composed.value(u, v) == mu.value(u, v));
}

TEST_CASE("compose: total pi pulled back through an all-star mu") {
  int n = 5;
  Restriction mu = Restriction::all_star(n);
  // pi fixes everything on [5]: star empty, bits arbitrary
  std::vector<uint64_t> bits((pair_count(n) + 63) / 64, 0);
  bits[0] = 0b1010101010;
  Restriction pi(n, VertexSet(n), bits);
  Restriction composed = compose_restrictions(mu, pi);
  CHECK(composed.star_support().size() == 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) CHECK(composed.value(u, v) == pi.value(u, v));
}

TEST_CASE("compose rejects dimension mismatches") {
  RngStream rng(10, 0);
  Restriction mu = sample_restriction(6, 4, 0.5, rng);
  Restriction pi = sample_restriction(3, 2, 0.5, rng);
  CHECK_THROWS_AS(compose_restrictions(mu, pi), std::invalid_argument);
}

TEST_CASE("composed star support is uniform: exact enumeration at n = 5") {
  // U1 over ([5] choose 4), U2 over ([4] choose 3); all choices equally
  // likely, so each 3-subset of [5] must be hit the same number of times.
  // Integer counts make the total-variation comparison exact.
  int n = 5, ell1 = 4, ell2 = 3;
  std::map<std::vector<Vertex>, long long> hits;
  long long total = 0;
  std::vector<int> u1_members(n), u2_members(ell1);
  // enumerate U1 via bitmasks of size ell1, U2 of size ell2
  for (uint32_t m1 = 0; m1 < (1u << n); ++m1) {
    if (std::popcount(m1) != ell1) continue;
    VertexSet u1(n);
    for (int v = 1; v <= n; ++v)
      if (m1 >> (v - 1) & 1) u1.insert(v);
    Restriction mu(n, u1, {});
    for (uint32_t m2 = 0; m2 < (1u << ell1); ++m2) {
      if (std::popcount(m2) != ell2) continue;
      VertexSet u2(ell1);
      for (int v = 1; v <= ell1; ++v)
        if (m2 >> (v - 1) & 1) u2.insert(v);
      Restriction pi(ell1, u2, {});
      Restriction composed = compose_restrictions(mu, pi);
      ++hits[composed.star_support().to_vector()];
      ++total;
    }
  }
  CHECK(hits.size() == 10);  // C(5,3)
  for (const auto& [subset, count] : hits) CHECK(count * 10 == total);  // TV distance 0
}

TEST_CASE("composed fixed bits come from the right source") {
  // mu on [4] stars {1,2,3} and fixes the rest to 0; pi on [3] stars {1,2}
  // and fixes its remaining edges to 1. Pulled back, edges {1,3} and {2,3}
  // of [4] must be 1, edges to vertex 4 stay 0.
  Restriction mu(4, VertexSet::from_vertices(4, {1, 2, 3}), {});
  std::vector<uint64_t> pi_bits(1, ~uint64_t(0));
  Restriction pi(3, VertexSet::from_vertices(3, {1, 2}), pi_bits);
  Restriction composed = compose_restrictions(mu, pi);
  CHECK(composed.value(1, 2) == Restriction::Value::Star);
  CHECK(composed.value(1, 3) == Restriction::Value::One);
  CHECK(composed.value(2, 3) == Restriction::Value::One);
  CHECK(composed.value(1, 4) == Restriction::Value::Zero);
  CHECK(composed.value(3, 4) == Restriction::Value::Zero);
}

TEST_CASE("restricted_dnf on the stated examples") {
  // constant 0 and constant 1
  RestrictedDnf c0 = restricted_dnf(3, [](const Graph&) { return false; }, Restriction::all_star(3));
  CHECK(c0.dnf.terms.empty());
  CHECK(c0.max_vertex_length == 0);
  RestrictedDnf c1 = restricted_dnf(3, [](const Graph&) { return true; }, Restriction::all_star(3));
  REQUIRE(c1.dnf.terms.size() == 1);
  CHECK(c1.dnf.terms[0].literals.empty());
  CHECK(c1.max_vertex_length == 0);

  // single literal: one term, r = 2
  RestrictedDnf lit = restricted_dnf(
      4, [](const Graph& g) { return g.has_edge(1, 2); }, Restriction::all_star(4));
  REQUIRE(lit.dnf.terms.size() == 1);
  CHECK(lit.dnf.terms[0].literals.size() == 1);
  CHECK(lit.max_vertex_length == 2);

  // AND(X12, X34): one term, r = 4 (endpoints {1,2,3,4})
  RestrictedDnf pair = restricted_dnf(
      4, [](const Graph& g) { return g.has_edge(1, 2) && g.has_edge(3, 4); },
      Restriction::all_star(4));
  REQUIRE(pair.dnf.terms.size() == 1);
  CHECK(pair.dnf.terms[0].literals.size() == 2);
  CHECK(pair.max_vertex_length == 4);
}

TEST_CASE("symbolic DNF restriction matches the truth-table route") {
  int n = 5;
  DnfFunction tri = make_dnf_function("triangle", n);
  REQUIRE(tri.explicit_dnf.has_value());
  RngStream rng(42, 0);
  for (int round = 0; round < 200; ++round) {
    Restriction mu = sample_restriction(n, 3, 0.5, rng);
    Dnf symbolic = restrict_dnf(*tri.explicit_dnf, mu);
    BoolFunc table = restrict_function(n, tri.eval, mu);
    std::vector<Edge> stars = mu.star_edges();
    for (uint32_t row = 0; row < table.row_count(); ++row) {
      Graph star_graph(n);
      for (size_t i = 0; i < stars.size(); ++i)
        if (row >> i & 1) star_graph.add_edge(stars[i].u, stars[i].v);
      CHECK(symbolic.eval(star_graph) == table.value(row));
    }
  }
}

TEST_CASE("restriction json round trip and validation") {
  RngStream rng(3, 0);
  Restriction mu = sample_restriction(5, 3, 0.5, rng);
  Restriction back = restriction_from_json(restriction_to_json(mu));
  CHECK(back.star_support() == mu.star_support());
  for (Vertex u = 1; u <= 5; ++u)
    for (Vertex v = u + 1; v <= 5; ++v) CHECK(back.value(u, v) == mu.value(u, v));

  CHECK_THROWS_AS(restriction_from_json(R"({"n":3,"star":[1,2],"fixed":{}})"),
                  std::invalid_argument);  // missing fixed edges
  CHECK_THROWS_AS(
      restriction_from_json(R"({"n":3,"star":[1,2],"fixed":{"1-2":1,"1-3":0,"2-3":0}})"),
      std::invalid_argument);  // fixes a star edge
}

TEST_CASE("schedule on the stated examples") {
  Schedule a = restriction_schedule(1LL << 16, 16, 1LL << 16, 1);
  CHECK(a.q == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.s == 4);
  REQUIRE(a.ell.size() == 2);
  CHECK(a.ell[0] == 65536);
  CHECK(a.ell[1] == 0);
  CHECK(a.degenerate);

  Schedule b = restriction_schedule(256, 8, 256, 2);
  CHECK(b.q == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(restriction_schedule(16, 2, 8, 1), std::invalid_argument);  // S < n
  CHECK_THROWS_AS(restriction_schedule(16, -1, 16, 1), std::invalid_argument);
}

TEST_CASE("schedule recurrence and shrink ratio") {
  for (long long n : {64LL, 256LL, 4096LL}) {
    for (double k : {2.0, 4.0, 8.0}) {
      Schedule sch = restriction_schedule(n, k, n * n, 3);
      double shrink = std::pow(double(n), 5.0 * sch.s / k);
      for (size_t i = 0; i + 1 < sch.ell.size(); ++i) {
        CHECK(sch.ell[i + 1] == (long long)std::floor(double(sch.ell[i]) / shrink));
        CHECK(sch.ell[i + 1] <= sch.ell[i]);
        if (sch.ell[i + 1] > 0)
          CHECK(double(sch.ell[i]) / double(sch.ell[i + 1]) >= shrink * (1 - 1e-9));
      }
    }
  }
}
