#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paraac/graph.hpp"

namespace paraac {

// Unbounded fan-in circuit over the edge variables of [n_vertices]. Gates
// are stored in topological order: a gate's inputs refer to gates with
// smaller ids. Ids are dense, 0-based positions in the gate list.
struct Gate {
  enum class Kind { And, Or, Not, Input, Const };

  Kind kind = Kind::Const;
  Edge edge{};              // Input
  int bit = 0;              // Const
  std::vector<int> inputs;  // And/Or/Not
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_vertices) : n_vertices_(n_vertices) {}

  int add_input(Vertex u, Vertex v);
  int add_const(int bit);
  int add_not(int input);
  int add_and(std::vector<int> inputs);
  int add_or(std::vector<int> inputs);
  void set_output(int gate);

  int n_vertices() const { return n_vertices_; }
  int output() const { return output_; }
  int size() const { return int(gates_.size()); }  // gate count
  int depth() const;                               // longest directed path
  const std::vector<Gate>& gates() const { return gates_; }

  // distinct input edges, canonical order
  std::vector<Edge> input_edges() const;

 private:
  int add_gate(Gate g);

  int n_vertices_ = 0;
  int output_ = -1;
  std::vector<Gate> gates_;
};

// Single pass in id order; AND of nothing is 1, OR of nothing is 0.
bool eval_circuit(const Circuit& c, const Graph& g);

// C^H with eval(C^H, g) = eval(c, h ∪ g): every input gate whose edge lies in
// h is ORed with the constant 1, which folds to a constant gate, so depth and
// size never grow.
Circuit hardwire(const Circuit& c, const Graph& h);

// {"n_vertices": n, "gates": [{"id":..., "kind": "and|or|not|input|const",
//  "edge": [u,v]?, "bit": 0|1?, "inputs": [...]}], "output": id}
// Ids in the file may be arbitrary but must be topologically ordered; they
// are normalized to dense positions on load.
Circuit circuit_from_json(std::string_view text);
std::string circuit_to_json(const Circuit& c);

}  // namespace paraac
