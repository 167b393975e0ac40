#include "paraac/reduction.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "paraac/random_models.hpp"
#include "json.hpp"

namespace paraac {

std::string DsVertexLabel::to_string() const {
  switch (kind) {
    case Kind::NewI:
      return "new(" + std::to_string(i) + ")";
    case Kind::VertexCopy:
      return std::to_string(u) + "(" + std::to_string(i) + ")";
    case Kind::Tuple:
      return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(u) + "," +
             std::to_string(v) + ")";
    case Kind::NewIJ:
      return "new(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::EdgeCopy:
      return "{" + std::to_string(u) + "," + std::to_string(v) + "}(" + std::to_string(i) + "," +
             std::to_string(j) + ")";
  }
  return {};
}

namespace {

// vertex id layout inside H, everything 1-based
struct Layout {
  int n, m, k;
  int block_a;   // 1 + n per index i
  int block_c;   // 1 + m per pair (i,j)
  long long base_b, base_c, total;

  Layout(int n_, int m_, int k_) : n(n_), m(m_), k(k_) {
    block_a = 1 + n;
    block_c = 1 + m;
    base_b = (long long)k * block_a;
    base_c = base_b + pair_count(k) * (long long)n * n;
    total = base_c + pair_count(k) * (long long)block_c;
  }

  int new_i(int i) const { return int((i - 1) * (long long)block_a + 1); }
  int vertex_copy(Vertex v, int i) const { return new_i(i) + v; }
  // pairs (i,j), i<j, enumerated lexicographically
  int pair_index(int i, int j) const {
    return int((long long)(i - 1) * k - (long long)i * (i - 1) / 2 + (j - i - 1));
  }
  int tuple(int t, Vertex u, Vertex v) const {
    return int(base_b + (long long)t * n * n + (long long)(u - 1) * n + (v - 1) + 1);
  }
  int new_ij(int t) const { return int(base_c + (long long)t * block_c + 1); }
  int edge_copy(int t, int edge_pos) const { return new_ij(t) + 1 + edge_pos; }
};

}  // namespace

DsInstance reduce_clique_to_ds(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("reduction requires k >= 2");
  if (g.edge_count() == 0) throw std::invalid_argument("reduction requires a non-empty edge set");
  int n = g.vertex_count();
  int m = g.edge_count();
  Layout lay(n, m, k);
  if (lay.total > 200000) throw std::invalid_argument("reduced instance would be too large");

  DsInstance inst;
  inst.k = k;
  inst.source_n = n;
  inst.source_m = m;
  inst.target_size = k + int(pair_count(k));
  inst.graph = Graph(int(lay.total));
  inst.labels.resize(lay.total);

  std::vector<Edge> edges = g.edges();
  std::map<Edge, int> edge_pos;
  for (int e = 0; e < m; ++e) edge_pos[edges[e]] = e;

  // labels
  for (int i = 1; i <= k; ++i) {
    inst.labels[lay.new_i(i) - 1] = DsVertexLabel{DsVertexLabel::Kind::NewI, i, 0, 0, 0};
    for (Vertex v = 1; v <= n; ++v)
      inst.labels[lay.vertex_copy(v, i) - 1] =
          DsVertexLabel{DsVertexLabel::Kind::VertexCopy, i, 0, v, 0};
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      int t = lay.pair_index(i, j);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
          inst.labels[lay.tuple(t, u, v) - 1] =
              DsVertexLabel{DsVertexLabel::Kind::Tuple, i, j, u, v};
      inst.labels[lay.new_ij(t) - 1] = DsVertexLabel{DsVertexLabel::Kind::NewIJ, i, j, 0, 0};
      for (int e = 0; e < m; ++e)
        inst.labels[lay.edge_copy(t, e) - 1] =
            DsVertexLabel{DsVertexLabel::Kind::EdgeCopy, i, j, edges[e].u, edges[e].v};
    }

  // (d) each {new(i)} ∪ V(i) becomes a clique
  for (int i = 1; i <= k; ++i)
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        inst.graph.add_edge(lay.new_i(i) + a, lay.new_i(i) + b);

  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      int t = lay.pair_index(i, j);
      // (e) each {new(i,j)} ∪ E(i,j) becomes a clique
      for (int a = 0; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
          inst.graph.add_edge(lay.new_ij(t) + a, lay.new_ij(t) + b);
      // (f) tuple vertices against the vertex copies and edge copies
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
          int tv = lay.tuple(t, u, v);
          for (Vertex w = 1; w <= n; ++w) {
            if (w != u) inst.graph.add_edge(tv, lay.vertex_copy(w, i));
            if (w != v) inst.graph.add_edge(tv, lay.vertex_copy(w, j));
          }
          if (u != v && g.has_edge(u, v))
            inst.graph.add_edge(tv, lay.edge_copy(t, edge_pos.at(make_edge(u, v))));
        }
    }

  return inst;
}

VertexSet clique_to_ds_witness(const Graph& g, const VertexSet& clique, const DsInstance& inst) {
  if (!is_clique(g, clique)) throw std::invalid_argument("witness input is not a clique");
  if (clique.size() != inst.k)
    throw std::invalid_argument("clique size does not match the instance parameter");
  if (g.vertex_count() != inst.source_n || g.edge_count() != inst.source_m)
    throw std::invalid_argument("instance was built from a different graph");

  Layout lay(inst.source_n, inst.source_m, inst.k);
  std::vector<Edge> edges = g.edges();
  std::map<Edge, int> edge_pos;
  for (int e = 0; e < inst.source_m; ++e) edge_pos[edges[e]] = e;

  std::vector<Vertex> us = clique.to_vector();  // u_1 < ... < u_k
  VertexSet d(inst.graph.vertex_count());
  for (int i = 1; i <= inst.k; ++i) d.insert(lay.vertex_copy(us[i - 1], i));
  for (int i = 1; i <= inst.k; ++i)
    for (int j = i + 1; j <= inst.k; ++j)
      d.insert(lay.edge_copy(lay.pair_index(i, j), edge_pos.at(make_edge(us[i - 1], us[j - 1]))));

  if (d.size() != inst.target_size)
    throw std::logic_error("witness has unexpected size");
  if (!is_dominating_set(inst.graph, d))
    throw std::logic_error("constructed witness fails to dominate");
  return d;
}

std::string ds_instance_sidecar_json(const DsInstance& inst) {
  nlohmann::json j;
  j["target_size"] = inst.target_size;
  nlohmann::json labels = nlohmann::json::object();
  for (size_t w = 0; w < inst.labels.size(); ++w)
    labels[std::to_string(w + 1)] = inst.labels[w].to_string();
  j["labels"] = labels;
  return j.dump(2) + "\n";
}

EquivalenceReport verify_equivalence(int n, const std::vector<int>& k_range,
                                     const VerifyMode& mode) {
  for (int k : k_range)
    if (k < 2) throw std::invalid_argument("k_range entries must be >= 2");
  if (mode.kind == VerifyMode::Kind::Exhaustive && n > 4)
    throw std::invalid_argument(
        "exhaustive verification needs the domination solver on all 2^" +
        std::to_string(pair_count(n)) + " reduced instances; capped at n <= 4");

  auto start = std::chrono::steady_clock::now();
  EquivalenceReport report;

  auto check_graph = [&](const Graph& g) {
    if (g.edge_count() == 0) {
      ++report.graphs_skipped_empty;
      return;
    }
    ++report.graphs_in_scope;
    for (int k : k_range) {
      DsInstance inst = reduce_clique_to_ds(g, k);
      bool clique_answer = has_clique(g, k);
      bool ds_answer = has_dominating_set_of_size(inst.graph, inst.target_size);
      ++report.pairs_checked;
      if (clique_answer != ds_answer)
        report.mismatches.push_back(EquivalenceMismatch{g, k, clique_answer, ds_answer});
    }
  };

  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    int pairs = int(pair_count(n));
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
      Graph g(n);
      for (int e = 0; e < pairs; ++e)
        if (mask >> e & 1) {
          Edge edge = edge_at(n, e);
          g.add_edge(edge.u, edge.v);
        }
      check_graph(g);
    }
  } else {
    for (int i = 0; i < mode.sample_count; ++i) {
      RngStream rng(mode.seed, uint64_t(i));
      Graph g = sample_er(n, 0.5, rng);
      while (g.edge_count() == 0) g = sample_er(n, 0.5, rng);
      check_graph(g);
    }
  }

  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return report;
}

}  // namespace paraac
