#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paraac/circuit.hpp"
#include "paraac/graph.hpp"
#include "paraac/rng.hpp"

namespace paraac {

// Partial assignment of the edge variables of [n]: the edges inside the star
// support U are left free, every other edge carries a fixed bit.
class Restriction {
 public:
  enum class Value { Zero = 0, One = 1, Star = 2 };

  Restriction() = default;
  // fixed_bits holds one bit per canonical edge position; positions inside
  // (U choose 2) are ignored.
  Restriction(int n, VertexSet star, std::vector<uint64_t> fixed_bits);
  static Restriction all_star(int n);

  int vertex_count() const { return n_; }
  const VertexSet& star_support() const { return star_; }
  Value value(Vertex u, Vertex v) const;
  bool is_star_edge(Vertex u, Vertex v) const;
  std::vector<Edge> star_edges() const;  // canonical order
  int star_edge_count() const { return int(pair_count(star_.size())); }

  // graph on [n] whose edges are exactly the fixed-to-1 edges
  Graph fixed_one_graph() const;

 private:
  int n_ = 0;
  VertexSet star_;
  std::vector<uint64_t> fixed_;
};

// mu ~ C^{ell,q}_n: U uniform over ([n] choose ell) first, then one
// Bernoulli(q) bit per non-star edge in canonical order.
Restriction sample_restriction(int n, int ell, double q, RngStream& rng);

// mu ∘ pi: pi lives on the edge variables of [|U_mu|]; sorting U_mu
// ascending identifies its t-th vertex with vertex t. The result keeps
// everything mu fixed, maps pi's fixed values onto mu's star block and stars
// exactly the pulled-back (U_pi choose 2).
Restriction compose_restrictions(const Restriction& mu, const Restriction& pi);

// {"n": n, "star": [vertices], "fixed": {"u-v": 0|1}}; the fixed keys must be
// exactly the non-star edges.
Restriction restriction_from_json(std::string_view text);
std::string restriction_to_json(const Restriction& mu);

// Boolean function given as a truth table over an explicit list of edge
// variables (at most 10, i.e. 1024 rows). Row index bit i carries the value
// of variables()[i].
class BoolFunc {
 public:
  static constexpr int kMaxVars = 10;

  BoolFunc() = default;
  BoolFunc(std::vector<Edge> vars, std::vector<bool> table);
  static BoolFunc constant(bool value);
  static BoolFunc from_rows(std::vector<Edge> vars,
                            const std::function<bool(uint32_t)>& row_value);

  int var_count() const { return int(vars_.size()); }
  const std::vector<Edge>& variables() const { return vars_; }
  uint32_t row_count() const { return uint32_t(1) << vars_.size(); }
  bool value(uint32_t row) const;

  bool is_constant() const;
  // variables the function actually depends on, as indices into variables()
  std::vector<int> essential_vars() const;
  BoolFunc restrict_to_essential() const;

  friend bool operator==(const BoolFunc& a, const BoolFunc& b) {
    return a.vars_ == b.vars_ && a.table_ == b.table_;
  }

 private:
  std::vector<Edge> vars_;
  std::vector<uint64_t> table_;
};

// Any function of a graph on [n] works as the F of a restriction; circuits
// and truth tables both provide one.
using GraphPredicate = std::function<bool(const Graph&)>;

// F↾mu: truth table over mu's star edges, F↾mu(S) = F(S ∪ mu). Rejects star
// blocks with more than kMaxVars free edges.
BoolFunc restrict_function(int n, const GraphPredicate& f, const Restriction& mu);
BoolFunc restrict_circuit(const Circuit& c, const Restriction& mu);

// predicate view of a truth-table function (edges absent from the table are
// ignored)
GraphPredicate predicate_of(const BoolFunc& f);

// DNF over edge variables: OR of conjunctive terms, a term is a set of
// (edge, polarity) literals. An empty term list is the constant 0, a term
// without literals is the constant 1.
struct DnfTerm {
  std::vector<std::pair<Edge, bool>> literals;  // true = positive

  int vertex_length() const;  // distinct endpoints over all literals
};

struct Dnf {
  int n = 0;
  std::vector<DnfTerm> terms;

  bool eval(const Graph& g) const;
  int max_term_vertex_length() const;  // r; 0 when no term has literals
};

struct RestrictedDnf {
  Dnf dnf;
  int max_vertex_length = 0;  // r over the extracted terms
};

// Canonical minterm DNF of F↾mu over the essential variables of the
// restricted function, plus its maximum term vertex length. A constant-0
// restriction yields no terms; constant 1 yields the single empty term.
RestrictedDnf restricted_dnf(int n, const GraphPredicate& f, const Restriction& mu);

// Symbolic restriction of a DNF: terms with a fixed-false literal drop out,
// fixed-true literals disappear, a fully satisfied term collapses the whole
// function to the constant 1 (one empty term).
Dnf restrict_dnf(const Dnf& f, const Restriction& mu);

// The restriction schedule q = n^{-1/k}, s = floor(sqrt(k log_n(S d))),
// ell_0 = n, ell_{i+1} = floor(ell_i / n^{5s/k}). log_n(S d) is read as
// log_n of the product. Degenerate schedules (some ell_i = 0) are reported,
// not rejected: the recurrence is asymptotic and collapses at desk scale.
struct Schedule {
  long long n = 0;
  double k = 0;
  long long size_bound = 0;  // S(n)
  int depth = 0;             // d(n)
  double q = 0;
  int s = 0;
  std::vector<long long> ell;  // ell_0 .. ell_depth
  bool degenerate = false;
};

Schedule restriction_schedule(long long n, double k, long long size_bound, int depth);

}  // namespace paraac
