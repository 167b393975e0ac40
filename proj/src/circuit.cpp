#include "paraac/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace paraac {

int Circuit::add_gate(Gate g) {
  for (int in : g.inputs)
    if (in < 0 || in >= int(gates_.size()))
      throw std::invalid_argument("gate input must reference an earlier gate");
  gates_.push_back(std::move(g));
  return int(gates_.size()) - 1;
}

int Circuit::add_input(Vertex u, Vertex v) {
  Edge e = make_edge(u, v);
  if (e.v > n_vertices_) throw std::invalid_argument("input edge outside [n]");
  Gate g;
  g.kind = Gate::Kind::Input;
  g.edge = e;
  return add_gate(std::move(g));
}

int Circuit::add_const(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("const gate bit must be 0 or 1");
  Gate g;
  g.kind = Gate::Kind::Const;
  g.bit = bit;
  return add_gate(std::move(g));
}

int Circuit::add_not(int input) {
  Gate g;
  g.kind = Gate::Kind::Not;
  g.inputs = {input};
  return add_gate(std::move(g));
}

int Circuit::add_and(std::vector<int> inputs) {
  Gate g;
  g.kind = Gate::Kind::And;
  g.inputs = std::move(inputs);
  return add_gate(std::move(g));
}

int Circuit::add_or(std::vector<int> inputs) {
  Gate g;
  g.kind = Gate::Kind::Or;
  g.inputs = std::move(inputs);
  return add_gate(std::move(g));
}

void Circuit::set_output(int gate) {
  if (gate < 0 || gate >= int(gates_.size())) throw std::invalid_argument("bad output gate id");
  output_ = gate;
}

int Circuit::depth() const {
  int best = 0;
  std::vector<int> d(gates_.size(), 0);
  for (size_t i = 0; i < gates_.size(); ++i) {
    int in_depth = -1;
    for (int in : gates_[i].inputs) in_depth = std::max(in_depth, d[in]);
    d[i] = gates_[i].inputs.empty() ? 0 : in_depth + 1;
    best = std::max(best, d[i]);
  }
  return best;
}

std::vector<Edge> Circuit::input_edges() const {
  std::set<Edge> seen;
  for (const Gate& g : gates_)
    if (g.kind == Gate::Kind::Input) seen.insert(g.edge);
  return {seen.begin(), seen.end()};
}

bool eval_circuit(const Circuit& c, const Graph& g) {
  if (c.n_vertices() != g.vertex_count())
    throw std::invalid_argument("circuit and graph vertex counts differ");
  if (c.output() < 0) throw std::invalid_argument("circuit has no output gate");
  const auto& gates = c.gates();
  std::vector<char> val(gates.size());
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& gate = gates[i];
    switch (gate.kind) {
      case Gate::Kind::Input:
        val[i] = g.has_edge(gate.edge.u, gate.edge.v);
        break;
      case Gate::Kind::Const:
        val[i] = char(gate.bit);
        break;
      case Gate::Kind::Not:
        val[i] = !val[gate.inputs[0]];
        break;
      case Gate::Kind::And: {
        char r = 1;
        for (int in : gate.inputs) r &= val[in];
        val[i] = r;
        break;
      }
      case Gate::Kind::Or: {
        char r = 0;
        for (int in : gate.inputs) r |= val[in];
        val[i] = r;
        break;
      }
    }
  }
  return val[c.output()];
}

Circuit hardwire(const Circuit& c, const Graph& h) {
  if (c.n_vertices() != h.vertex_count())
    throw std::invalid_argument("circuit and graph vertex counts differ");
  // X_e ∨ 1 is the constant 1, X_e ∨ 0 is X_e; folding keeps ids stable
  Circuit folded(c.n_vertices());
  for (const Gate& gate : c.gates()) {
    if (gate.kind == Gate::Kind::Input && h.has_edge(gate.edge.u, gate.edge.v))
      folded.add_const(1);
    else {
      Gate copy = gate;
      switch (copy.kind) {
        case Gate::Kind::Input:
          folded.add_input(copy.edge.u, copy.edge.v);
          break;
        case Gate::Kind::Const:
          folded.add_const(copy.bit);
          break;
        case Gate::Kind::Not:
          folded.add_not(copy.inputs[0]);
          break;
        case Gate::Kind::And:
          folded.add_and(copy.inputs);
          break;
        case Gate::Kind::Or:
          folded.add_or(copy.inputs);
          break;
      }
    }
  }
  folded.set_output(c.output());
  return folded;
}

namespace {

Gate::Kind kind_from_string(const std::string& s) {
  if (s == "and") return Gate::Kind::And;
  if (s == "or") return Gate::Kind::Or;
  if (s == "not") return Gate::Kind::Not;
  if (s == "input") return Gate::Kind::Input;
  if (s == "const") return Gate::Kind::Const;
  throw std::invalid_argument("unknown gate kind '" + s + "'");
}

std::string kind_to_string(Gate::Kind k) {
  switch (k) {
    case Gate::Kind::And: return "and";
    case Gate::Kind::Or: return "or";
    case Gate::Kind::Not: return "not";
    case Gate::Kind::Input: return "input";
    case Gate::Kind::Const: return "const";
  }
  return {};
}

}  // namespace

Circuit circuit_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Circuit c(j.at("n_vertices").get<int>());
  std::map<long long, int> id_map;  // file id -> dense id
  long long prev_id = -1;
  for (const auto& gj : j.at("gates")) {
    long long id = gj.at("id").get<long long>();
    if (id <= prev_id)
      throw std::invalid_argument("gate ids must be strictly increasing (topological order)");
    prev_id = id;
    Gate::Kind kind = kind_from_string(gj.at("kind").get<std::string>());
    std::vector<int> inputs;
    if (gj.contains("inputs"))
      for (const auto& in : gj.at("inputs")) {
        auto it = id_map.find(in.get<long long>());
        if (it == id_map.end())
          throw std::invalid_argument("gate input must reference an earlier gate id");
        inputs.push_back(it->second);
      }
    int dense = -1;
    switch (kind) {
      case Gate::Kind::Input: {
        auto e = gj.at("edge");
        dense = c.add_input(e.at(0).get<int>(), e.at(1).get<int>());
        break;
      }
      case Gate::Kind::Const:
        dense = c.add_const(gj.at("bit").get<int>());
        break;
      case Gate::Kind::Not:
        if (inputs.size() != 1) throw std::invalid_argument("not gate needs exactly one input");
        dense = c.add_not(inputs[0]);
        break;
      case Gate::Kind::And:
        dense = c.add_and(std::move(inputs));
        break;
      case Gate::Kind::Or:
        dense = c.add_or(std::move(inputs));
        break;
    }
    id_map[id] = dense;
  }
  auto out = id_map.find(j.at("output").get<long long>());
  if (out == id_map.end()) throw std::invalid_argument("output references an unknown gate id");
  c.set_output(out->second);
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["n_vertices"] = c.n_vertices();
  nlohmann::json gates = nlohmann::json::array();
  const auto& gs = c.gates();
  for (size_t i = 0; i < gs.size(); ++i) {
    nlohmann::json gj;
    gj["id"] = i;
    gj["kind"] = kind_to_string(gs[i].kind);
    if (gs[i].kind == Gate::Kind::Input) gj["edge"] = {gs[i].edge.u, gs[i].edge.v};
    if (gs[i].kind == Gate::Kind::Const) gj["bit"] = gs[i].bit;
    if (!gs[i].inputs.empty()) gj["inputs"] = gs[i].inputs;
    gates.push_back(gj);
  }
  j["gates"] = gates;
  j["output"] = c.output();
  return j.dump(2) + "\n";
}

}  // namespace paraac
