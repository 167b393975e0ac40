#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paraac/circuit.hpp"
#include "paraac/graph.hpp"
#include "paraac/restriction.hpp"

namespace paraac {

// Fixed family of small bounded-depth test circuits. Every entry carries a
// direct evaluator (used in experiment loops, where materialized circuits on
// large n would be wasteful) and a builder producing the equivalent Circuit;
// the two are equivalence-tested against each other.
struct ZooCircuit {
  std::string name;
  int min_n = 1;
  std::function<bool(const Graph&)> eval;
  std::function<Circuit(int n)> build;
};

// const0, const1, edge12 (probe for edge {1,2}), triangle (any triangle),
// star3 (vertex 1 adjacent to 2,3,4), clique4 (clique on {1,2,3,4}).
const std::vector<ZooCircuit>& circuit_zoo();
const ZooCircuit& find_zoo_circuit(const std::string& name);

bool graph_has_triangle(const Graph& g);

// A DNF-described boolean function for the switching experiments: the
// evaluator computes the function, `r` is the maximum vertex length over the
// terms of its DNF description. For small n the explicit term list is
// materialized too.
struct DnfFunction {
  std::string name;
  int n = 0;
  int r = 0;
  std::function<bool(const Graph&)> eval;
  std::optional<Dnf> explicit_dnf;
};

// names: const0, const1, edge12, wedge (X12 ∧ X13), matching2 (X12 ∧ X34),
// triangle (OR over all triples of the AND of their three edges)
DnfFunction make_dnf_function(const std::string& name, int n);
std::vector<std::string> dnf_function_names();

}  // namespace paraac
