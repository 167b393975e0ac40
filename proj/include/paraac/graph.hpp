#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paraac {

using Vertex = int;  // vertices are the 1-based elements of [n]

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // normalized u < v

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Normalizes {a,b} to u < v; loops are rejected.
Edge make_edge(Vertex a, Vertex b);

// Number of potential edges on [n].
constexpr long long pair_count(long long n) { return n * (n - 1) / 2; }

// Canonical position of {u,v} among the potential edges of [n]:
// lexicographic on (u,v) with u < v, starting at 0.
int edge_index(int n, Vertex u, Vertex v);
Edge edge_at(int n, int index);

// Subset of [n] with O(1) membership and cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet from_vertices(int universe, const std::vector<Vertex>& vs);

  void insert(Vertex v);
  bool contains(Vertex v) const;
  int size() const { return count_; }
  int universe() const { return n_; }
  std::vector<Vertex> to_vector() const;  // ascending

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<uint64_t> bits_;
};

// Simple undirected graph on vertex set [n]: no loops, no multi-edges.
// Edge membership is kept both as a flat bit table over the pair_count(n)
// canonical positions and as per-vertex adjacency bitsets. Graphs are value
// types; treat them as immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);
  std::vector<Edge> edges() const;  // canonical order

  // degree of v, and the adjacency row of v as a bitset over vertices 1..n
  // (bit v-1 within 64-bit words)
  int degree(Vertex v) const;
  const std::vector<uint64_t>& adjacency_row(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edge_bits_ == b.edge_bits_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<uint64_t> edge_bits_;
  std::vector<std::vector<uint64_t>> adj_;
};

Graph complete_graph(int n);
Graph path_graph(int n);   // 1-2-...-n
Graph cycle_graph(int n);  // path plus edge {1,n}

// Exact clique oracles. The branch-and-bound versions are the production
// solvers; the exhaustive versions enumerate subsets and are the oracle of
// record in tests.
bool has_clique(const Graph& g, int k);
int max_clique_size(const Graph& g);
bool has_clique_exhaustive(const Graph& g, int k);
int max_clique_size_exhaustive(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

// Exact domination oracles, same pairing.
bool has_dominating_set_of_size(const Graph& g, int k);
bool has_dominating_set_of_size_exhaustive(const Graph& g, int k);
bool is_dominating_set(const Graph& g, const VertexSet& d);

// G + C(A): complete the induced subgraph on a into a clique.
Graph plant_clique(const Graph& g, const VertexSet& a);

// ([n], E(g) ∪ E(h)); vertex counts must agree.
Graph union_graphs(const Graph& g, const Graph& h);

// Text format: line "n m", then m lines "u v" with 1 <= u < v <= n,
// LF-terminated. Duplicate edges, loops and out-of-range endpoints are
// rejected. Lines starting with '#' before the header are skipped, so files
// may carry a metadata comment.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace paraac
