#include "paraac/zoo.hpp"

#include <bit>
#include <stdexcept>

namespace paraac {

bool graph_has_triangle(const Graph& g) {
  int n = g.vertex_count();
  int words = (n + 63) / 64;
  for (Vertex u = 1; u <= n; ++u) {
    const auto& row_u = g.adjacency_row(u);
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const auto& row_v = g.adjacency_row(v);
      for (int w = 0; w < words; ++w)
        if (row_u[w] & row_v[w]) return true;
    }
  }
  return false;
}

namespace {

Circuit build_const(int n, int bit) {
  Circuit c(n);
  c.set_output(c.add_const(bit));
  return c;
}

Circuit build_edge12(int n) {
  Circuit c(n);
  c.set_output(c.add_input(1, 2));
  return c;
}

Circuit build_triangle(int n) {
  Circuit c(n);
  std::vector<int> terms;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex d = b + 1; d <= n; ++d) {
        int ab = c.add_input(a, b);
        int ad = c.add_input(a, d);
        int bd = c.add_input(b, d);
        terms.push_back(c.add_and({ab, ad, bd}));
      }
  c.set_output(c.add_or(std::move(terms)));
  return c;
}

Circuit build_star3(int n) {
  Circuit c(n);
  std::vector<int> legs;
  for (Vertex v = 2; v <= 4; ++v) legs.push_back(c.add_input(1, v));
  c.set_output(c.add_and(std::move(legs)));
  return c;
}

Circuit build_clique4(int n) {
  Circuit c(n);
  std::vector<int> es;
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) es.push_back(c.add_input(u, v));
  c.set_output(c.add_and(std::move(es)));
  return c;
}

}  // namespace

const std::vector<ZooCircuit>& circuit_zoo() {
  static const std::vector<ZooCircuit> zoo = {
      {"const0", 1, [](const Graph&) { return false; },
       [](int n) { return build_const(n, 0); }},
      {"const1", 1, [](const Graph&) { return true; },
       [](int n) { return build_const(n, 1); }},
      {"edge12", 2, [](const Graph& g) { return g.has_edge(1, 2); }, build_edge12},
      {"triangle", 3, graph_has_triangle, build_triangle},
      {"star3", 4,
       [](const Graph& g) { return g.has_edge(1, 2) && g.has_edge(1, 3) && g.has_edge(1, 4); },
       build_star3},
      {"clique4", 4,
       [](const Graph& g) {
         for (Vertex u = 1; u <= 4; ++u)
           for (Vertex v = u + 1; v <= 4; ++v)
             if (!g.has_edge(u, v)) return false;
         return true;
       },
       build_clique4},
  };
  return zoo;
}

const ZooCircuit& find_zoo_circuit(const std::string& name) {
  for (const ZooCircuit& z : circuit_zoo())
    if (z.name == name) return z;
  throw std::invalid_argument("unknown zoo circuit '" + name + "'");
}

namespace {

Dnf single_term_dnf(int n, std::vector<Edge> edges) {
  Dnf d;
  d.n = n;
  DnfTerm term;
  for (const Edge& e : edges) term.literals.emplace_back(e, true);
  d.terms.push_back(std::move(term));
  return d;
}

Dnf triangle_dnf(int n) {
  Dnf d;
  d.n = n;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) {
        DnfTerm term;
        term.literals.emplace_back(Edge{a, b}, true);
        term.literals.emplace_back(Edge{a, c}, true);
        term.literals.emplace_back(Edge{b, c}, true);
        d.terms.push_back(std::move(term));
      }
  return d;
}

}  // namespace

DnfFunction make_dnf_function(const std::string& name, int n) {
  DnfFunction f;
  f.name = name;
  f.n = n;
  if (name == "const0") {
    f.r = 0;
    f.eval = [](const Graph&) { return false; };
    f.explicit_dnf = Dnf{n, {}};
    return f;
  }
  if (name == "const1") {
    f.r = 0;
    f.eval = [](const Graph&) { return true; };
    f.explicit_dnf = Dnf{n, {DnfTerm{}}};
    return f;
  }
  if (name == "edge12") {
    if (n < 2) throw std::invalid_argument("edge12 needs n >= 2");
    f.r = 2;
    f.eval = [](const Graph& g) { return g.has_edge(1, 2); };
    f.explicit_dnf = single_term_dnf(n, {Edge{1, 2}});
    return f;
  }
  if (name == "wedge") {
    if (n < 3) throw std::invalid_argument("wedge needs n >= 3");
    f.r = 3;
    f.eval = [](const Graph& g) { return g.has_edge(1, 2) && g.has_edge(1, 3); };
    f.explicit_dnf = single_term_dnf(n, {Edge{1, 2}, Edge{1, 3}});
    return f;
  }
  if (name == "matching2") {
    if (n < 4) throw std::invalid_argument("matching2 needs n >= 4");
    f.r = 4;
    f.eval = [](const Graph& g) { return g.has_edge(1, 2) && g.has_edge(3, 4); };
    f.explicit_dnf = single_term_dnf(n, {Edge{1, 2}, Edge{3, 4}});
    return f;
  }
  if (name == "triangle") {
    if (n < 3) throw std::invalid_argument("triangle needs n >= 3");
    f.r = 3;
    f.eval = graph_has_triangle;
    if (n <= 24) f.explicit_dnf = triangle_dnf(n);  // term count grows as n^3
    return f;
  }
  throw std::invalid_argument("unknown DNF function '" + name + "'");
}

std::vector<std::string> dnf_function_names() {
  return {"const0", "const1", "edge12", "wedge", "matching2", "triangle"};
}

}  // namespace paraac
