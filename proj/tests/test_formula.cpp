#include "doctest.h"

#include <stdexcept>

#include "paraac/formula.hpp"

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

// polarity pattern: per variable 0 = absent, 1 = positive, 2 = negative;
// declared universe is all nvars variables
PropFormula gamma11_from_pattern(int nvars, const std::vector<int>& pattern) {
  std::vector<PropFormula> lits;
  for (int i = 0; i < nvars; ++i) {
    std::string name = "v" + std::to_string(i + 1);
    if (pattern[i] == 1) lits.push_back(PropFormula::pos(name));
    if (pattern[i] == 2) lits.push_back(PropFormula::neg(name));
  }
  PropFormula f = PropFormula::and_of(std::move(lits));
  for (int i = 0; i < nvars; ++i) f.declared_vars.push_back("v" + std::to_string(i + 1));
  return f;
}

}  // namespace

TEST_CASE("validate_shape on the stated examples") {
  PropFormula clause = PropFormula::or_of({PropFormula::neg("x1"), PropFormula::neg("x2")});
  CHECK(validate_shape(clause, {1, 2, true}));
  CHECK(validate_shape(clause, {1, 2, false}));
  CHECK_FALSE(validate_shape(clause, {0, 2, false}));  // an OR is not a conjunction

  PropFormula triple =
      PropFormula::and_of({PropFormula::pos("x1"), PropFormula::pos("x2"), PropFormula::pos("x3")});
  CHECK_FALSE(validate_shape(triple, {0, 2, false}));  // fan-in 3 > d
  CHECK(validate_shape(triple, {0, 3, false}));
  CHECK_FALSE(validate_shape(triple, {0, 3, true}));  // positive literals

  PropFormula empty_and = PropFormula::and_of({});
  CHECK(validate_shape(empty_and, {1, 1, false}));
  CHECK(validate_shape(empty_and, {3, 1, true}));
}

TEST_CASE("validate_shape is monotone in t") {
  PropFormula f = PropFormula::and_of(
      {PropFormula::or_of({PropFormula::neg("a"), PropFormula::neg("b")}),
       PropFormula::or_of({PropFormula::neg("a"), PropFormula::neg("c")})});
  for (int t = 1; t <= 4; ++t) CHECK(validate_shape(f, {t, 2, true}));
  CHECK_FALSE(validate_shape(f, {0, 2, true}));

  // nested alternation needs two levels
  PropFormula nested = PropFormula::and_of({PropFormula::or_of({PropFormula::and_of(
      {PropFormula::pos("a"), PropFormula::pos("b"), PropFormula::pos("c")})})});
  CHECK_FALSE(validate_shape(nested, {1, 3, false}));
  CHECK(validate_shape(nested, {2, 3, false}));
}

TEST_CASE("weighted_sat_bruteforce on the stated examples") {
  CHECK(weighted_sat_bruteforce(PropFormula::and_of({}), 0));
  CHECK_FALSE(weighted_sat_bruteforce(PropFormula::and_of({}), 1));  // k > #vars

  PropFormula clause = PropFormula::or_of({PropFormula::neg("x1"), PropFormula::neg("x3")});
  clause.declared_vars = {"x1", "x2", "x3"};
  CHECK(weighted_sat_bruteforce(clause, 2));
  CHECK_FALSE(weighted_sat_bruteforce(clause, 3));

  PropFormula forced = PropFormula::and_of({PropFormula::pos("x1"), PropFormula::neg("x2")});
  CHECK_FALSE(weighted_sat_bruteforce(forced, 2));
  CHECK(weighted_sat_bruteforce(forced, 1));
}

TEST_CASE("build_delta_g on the stated examples") {
  CHECK(build_delta_g(complete_graph(3)).children.empty());
  CHECK(build_delta_g(Graph(3)).children.size() == 3);

  PropFormula path_delta = build_delta_g(path_graph(3));
  REQUIRE(path_delta.children.size() == 1);
  CHECK(format_formula(path_delta.children[0]) == "(or (not x1) (not x3))");
  CHECK(validate_shape(path_delta, {1, 2, true}));
  CHECK(path_delta.variables().size() == 3);  // every X_v is declared
}

TEST_CASE("delta_G weight-k satisfiability tracks k-cliques, all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    uint32_t graphs = uint32_t(1) << pair_count(n);
    for (uint32_t mask = 0; mask < graphs; ++mask) {
      Graph g = graph_from_mask(n, mask);
      PropFormula delta = build_delta_g(g);
      for (int k = 0; k <= 5; ++k)
        CHECK(weighted_sat_bruteforce(delta, k) == has_clique(g, k));
    }
  }
}

TEST_CASE("gamma11_decide on the stated examples") {
  PropFormula mixed = PropFormula::and_of(
      {PropFormula::pos("x1"), PropFormula::neg("x2"), PropFormula::pos("x3")});
  CHECK(gamma11_decide(mixed, 2));
  CHECK(gamma11_decide(mixed, 2) == weighted_sat_bruteforce(mixed, 2));

  PropFormula contradiction = PropFormula::and_of({PropFormula::pos("x1"), PropFormula::neg("x1")});
  for (int k = 0; k <= 2; ++k) CHECK_FALSE(gamma11_decide(contradiction, k));

  // the case separating the closed form from a naive variable count
  PropFormula tight = PropFormula::and_of({PropFormula::pos("x1"), PropFormula::neg("x2")});
  CHECK_FALSE(gamma11_decide(tight, 2));
  CHECK_FALSE(weighted_sat_bruteforce(tight, 2));

  PropFormula not_flat = PropFormula::and_of({PropFormula::or_of(
      {PropFormula::pos("x1"), PropFormula::pos("x2")})});
  CHECK_THROWS_AS(gamma11_decide(not_flat, 1), std::invalid_argument);
}

TEST_CASE("gamma11_decide handles empty OR and singleton OR children") {
  PropFormula with_false =
      PropFormula::and_of({PropFormula::pos("x1"), PropFormula::or_of({})});
  CHECK(validate_shape(with_false, {1, 1, false}));
  for (int k = 0; k <= 2; ++k)
    CHECK(gamma11_decide(with_false, k) == weighted_sat_bruteforce(with_false, k));

  PropFormula wrapped = PropFormula::and_of({PropFormula::or_of({PropFormula::neg("x1")}),
                                             PropFormula::or_of({PropFormula::pos("x2")})});
  for (int k = 0; k <= 3; ++k)
    CHECK(gamma11_decide(wrapped, k) == weighted_sat_bruteforce(wrapped, k));
}

TEST_CASE("gamma11_decide equals brute force over polarity patterns, 7 variables") {
  const int nvars = 7;
  std::vector<int> pattern(nvars, 0);
  int total = 1;
  for (int i = 0; i < nvars; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < nvars; ++i) {
      pattern[i] = c % 3;
      c /= 3;
    }
    PropFormula f = gamma11_from_pattern(nvars, pattern);
    for (int k = 0; k <= nvars; ++k)
      CHECK(gamma11_decide(f, k) == weighted_sat_bruteforce(f, k));
  }
}

TEST_CASE("negative-only satisfiable weights are downward closed") {
  PropFormula f = PropFormula::and_of(
      {PropFormula::or_of({PropFormula::neg("a"), PropFormula::neg("b")}),
       PropFormula::or_of({PropFormula::neg("c"), PropFormula::neg("d")}),
       PropFormula::or_of({PropFormula::neg("a"), PropFormula::neg("d")})});
  int vars = int(f.variables().size());
  for (int k = 0; k <= vars; ++k)
    if (weighted_sat_bruteforce(f, k))
      for (int kp = 0; kp < k; ++kp) CHECK(weighted_sat_bruteforce(f, kp));
}

TEST_CASE("max_weight_omega on the stated examples") {
  PropFormula empty_and = PropFormula::and_of({});
  empty_and.declared_vars = {"x1", "x2", "x3", "x4"};
  CHECK(max_weight_omega(empty_and) == 4);

  CHECK(max_weight_omega(build_delta_g(complete_graph(3))) == 3);
  CHECK(max_weight_omega(build_delta_g(path_graph(3))) == 2);

  PropFormula positive = PropFormula::and_of({PropFormula::pos("x1")});
  CHECK_THROWS_AS(max_weight_omega(positive), std::invalid_argument);
}

TEST_CASE("max_weight_omega matches the clique number, all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    uint32_t graphs = uint32_t(1) << pair_count(n);
    for (uint32_t mask = 0; mask < graphs; ++mask) {
      Graph g = graph_from_mask(n, mask);
      CHECK(max_weight_omega(build_delta_g(g)) == max_clique_size(g));
    }
  }
}

TEST_CASE("formula text format") {
  PropFormula f = parse_formula("(and (or (not x1) (not x3)))");
  REQUIRE(f.kind == PropFormula::Kind::And);
  REQUIRE(f.children.size() == 1);
  CHECK(format_formula(f) == "(and (or (not x1) (not x3)))");

  CHECK(parse_formula("x1").kind == PropFormula::Kind::PosLit);
  CHECK(parse_formula("(not some_var7)").kind == PropFormula::Kind::NegLit);
  CHECK(format_formula(parse_formula("(and)")) == "(and)");
  CHECK(format_formula(parse_formula("(or x1 (and x2 x3) (not x4))")) ==
        "(or x1 (and x2 x3) (not x4))");

  CHECK_THROWS_AS(parse_formula("(nand x1 x2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(and x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(and x1) junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(not (and x1 x2))"), std::invalid_argument);
}
