#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paraac/graph.hpp"

namespace paraac {

// Propositional formula tree: AND/OR nodes over positive/negative literals.
// An empty AND is true, an empty OR is false. `declared_vars` lists variables
// that belong to the formula's variable set even when no literal mentions
// them; Hamming weights are always counted over variables() = occurring
// union declared.
struct PropFormula {
  enum class Kind { And, Or, PosLit, NegLit };

  Kind kind = Kind::And;
  std::string var;                       // literals only
  std::vector<PropFormula> children;     // And/Or only
  std::vector<std::string> declared_vars;

  static PropFormula and_of(std::vector<PropFormula> children);
  static PropFormula or_of(std::vector<PropFormula> children);
  static PropFormula pos(std::string var);
  static PropFormula neg(std::string var);

  bool is_literal() const { return kind == Kind::PosLit || kind == Kind::NegLit; }
  std::vector<std::string> variables() const;  // sorted, distinct
};

// Shape of the alternating formula classes: t alternations above a bottom
// level of fan-in <= d, optionally restricted to negative literals.
struct GammaShape {
  int t = 0;
  int d = 1;
  bool negative_only = false;
};

// True iff f is generated by the grammar for shape (singleton blocks lift
// lower-level formulas, so membership is monotone in t).
bool validate_shape(const PropFormula& f, const GammaShape& shape);

// True iff some assignment setting exactly k of f's variables true satisfies
// f. Exhaustive over all weight-k assignments; capped at 64 variables.
bool weighted_sat_bruteforce(const PropFormula& f, int k);

// δ_G: one clause ¬X_u ∨ ¬X_v per non-adjacent pair u != v, conjoined, with
// the variable set declared as {x1..xn}. Weight-k satisfiable iff g has a
// k-clique.
PropFormula build_delta_g(const Graph& g);

// Closed-form weighted satisfiability for conjunctions of single literals:
// no variable occurs in both polarities, and
// #positive vars <= k <= #vars - #negative vars (an empty OR child makes the
// formula unsatisfiable). Rejects inputs that do not validate against
// (t=1, d=1).
bool gamma11_decide(const PropFormula& f, int k);

// Largest k with a weight-k satisfying assignment; 0 when only the all-false
// assignment satisfies f. Defined for negative-only formulas (satisfying
// weights are downward closed there); positive literals are rejected.
int max_weight_omega(const PropFormula& f);

// Prefix s-expression format, e.g. "(and (or (not x1) (not x3)))".
// Variables match [A-Za-z0-9_]+; a bare variable is a positive literal.
PropFormula parse_formula(std::string_view text);
std::string format_formula(const PropFormula& f);

}  // namespace paraac
