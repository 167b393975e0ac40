#include "paraac/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace paraac {

namespace {

int word_count(int n) { return (n + 63) / 64; }

bool test_bit(const std::vector<uint64_t>& bits, int i) {
  return (bits[i >> 6] >> (i & 63)) & 1u;
}

void set_bit(std::vector<uint64_t>& bits, int i, bool value) {
  if (value)
    bits[i >> 6] |= uint64_t(1) << (i & 63);
  else
    bits[i >> 6] &= ~(uint64_t(1) << (i & 63));
}

int popcount_all(const std::vector<uint64_t>& bits) {
  int c = 0;
  for (uint64_t w : bits) c += std::popcount(w);
  return c;
}

bool any_bit(const std::vector<uint64_t>& bits) {
  for (uint64_t w : bits)
    if (w) return true;
  return false;
}

int first_bit(const std::vector<uint64_t>& bits) {
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) return int(i) * 64 + std::countr_zero(bits[i]);
  return -1;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("loop edge {" + std::to_string(a) + "}");
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

int edge_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (u < 1 || v > n || u == v) throw std::out_of_range("edge endpoints outside [n]");
  // edges with first endpoint < u come first, then (u, u+1) .. (u, v)
  long long before = (long long)(u - 1) * n - (long long)u * (u - 1) / 2;
  return int(before + (v - u - 1));
}

Edge edge_at(int n, int index) {
  if (index < 0 || index >= pair_count(n)) throw std::out_of_range("edge index");
  int u = 1;
  long long idx = index;
  while (idx >= n - u) {
    idx -= n - u;
    ++u;
  }
  return Edge{u, int(u + 1 + idx)};
}

VertexSet::VertexSet(int universe) : n_(universe), bits_(word_count(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

VertexSet VertexSet::from_vertices(int universe, const std::vector<Vertex>& vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 1 || v > n_) throw std::out_of_range("vertex outside universe");
  if (!test_bit(bits_, v - 1)) {
    set_bit(bits_, v - 1, true);
    ++count_;
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 1 || v > n_) return false;
  return test_bit(bits_, v - 1);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (int v = 1; v <= n_; ++v)
    if (test_bit(bits_, v - 1)) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edge_bits_.assign((pair_count(n) + 63) / 64, 0);
  adj_.assign(n, std::vector<uint64_t>(word_count(n), 0));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u == v) throw std::invalid_argument("loop edge");
  if (u < 1 || v < 1 || u > n_ || v > n_) throw std::out_of_range("edge endpoints outside [n]");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_pair(u, v);
  return test_bit(edge_bits_, edge_index(n_, u, v));
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  check_pair(u, v);
  int idx = edge_index(n_, u, v);
  if (test_bit(edge_bits_, idx) == present) return;
  set_bit(edge_bits_, idx, present);
  set_bit(adj_[u - 1], v - 1, present);
  set_bit(adj_[v - 1], u - 1, present);
  m_ += present ? 1 : -1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u + 1; v <= n_; ++v)
      if (test_bit(edge_bits_, edge_index(n_, u, v))) out.push_back(Edge{u, v});
  return out;
}

int Graph::degree(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex outside [n]");
  return popcount_all(adj_[v - 1]);
}

const std::vector<uint64_t>& Graph::adjacency_row(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex outside [n]");
  return adj_[v - 1];
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

namespace {

// Branch-and-bound maximum clique with a greedy-coloring upper bound.
// If target >= 0, the search stops as soon as a clique of that size exists.
struct CliqueSearch {
  const Graph& g;
  int n;
  int words;
  int best = 0;
  int target = -1;
  bool done = false;

  explicit CliqueSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), words(word_count(graph.vertex_count())) {}

  void run() {
    if (target == 0) {
      done = true;
      best = std::max(best, 0);
      return;
    }
    std::vector<uint64_t> all(words, 0);
    for (int v = 0; v < n; ++v) set_bit(all, v, true);
    expand(all, 0);
  }

  void expand(std::vector<uint64_t>& cand, int size) {
    if (done) return;
    if (!any_bit(cand)) {
      best = std::max(best, size);
      if (target >= 0 && best >= target) done = true;
      return;
    }
    // greedy coloring: color classes are independent in the candidate graph,
    // so size + color is an upper bound for any clique extending through
    // the vertices colored so far
    std::vector<int> order;
    std::vector<int> color_of;
    std::vector<uint64_t> uncolored = cand;
    int color = 0;
    while (any_bit(uncolored)) {
      ++color;
      std::vector<uint64_t> cls = uncolored;
      while (any_bit(cls)) {
        int v = first_bit(cls);
        set_bit(cls, v, false);
        set_bit(uncolored, v, false);
        const auto& row = g.adjacency_row(v + 1);
        for (int w = 0; w < words; ++w) cls[w] &= ~row[w];
        order.push_back(v);
        color_of.push_back(color);
      }
    }
    int bound_floor = target >= 0 ? target - 1 : best;
    for (int i = int(order.size()) - 1; i >= 0; --i) {
      if (size + color_of[i] <= bound_floor) return;  // colors only shrink leftwards
      int v = order[i];
      if (target >= 0 && size + 1 >= target) {
        best = std::max(best, size + 1);
        done = true;
        return;
      }
      std::vector<uint64_t> next(words);
      const auto& row = g.adjacency_row(v + 1);
      for (int w = 0; w < words; ++w) next[w] = cand[w] & row[w];
      expand(next, size + 1);
      if (done) return;
      set_bit(cand, v, false);
      bound_floor = target >= 0 ? target - 1 : best;
    }
  }
};

}  // namespace

bool has_clique(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  if (k == 0) return true;
  if (k > g.vertex_count()) return false;
  CliqueSearch search(g);
  search.target = k;
  search.run();
  return search.best >= k;
}

int max_clique_size(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  CliqueSearch search(g);
  search.best = 1;  // any single vertex
  search.run();
  return search.best;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> vs = s.to_vector();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] > g.vertex_count()) return false;
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  }
  return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
  int n = g.vertex_count();
  int words = word_count(n);
  std::vector<uint64_t> covered(words, 0);
  for (Vertex v : d.to_vector()) {
    if (v > n) return false;
    set_bit(covered, v - 1, true);
    const auto& row = g.adjacency_row(v);
    for (int w = 0; w < words; ++w) covered[w] |= row[w];
  }
  return popcount_all(covered) == n;
}

namespace {

// exhaustive k-subset enumeration, ascending lexicographic
template <class Fn>
bool any_combination(int n, int k, Fn&& accept) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    if (accept(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct DominationSearch {
  const Graph& g;
  int n;
  int words;
  std::vector<std::vector<uint64_t>> closed;  // N[v]
  std::vector<int> closed_size;

  explicit DominationSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), words(word_count(graph.vertex_count())) {
    closed.resize(n);
    closed_size.resize(n);
    for (int v = 0; v < n; ++v) {
      closed[v] = g.adjacency_row(v + 1);
      set_bit(closed[v], v, true);
      closed_size[v] = popcount_all(closed[v]);
    }
  }

  int greedy_size() const {
    std::vector<uint64_t> covered(words, 0);
    int picked = 0;
    while (popcount_all(covered) < n) {
      int best_v = -1, best_gain = -1;
      for (int v = 0; v < n; ++v) {
        int gain = 0;
        for (int w = 0; w < words; ++w) gain += std::popcount(closed[v][w] & ~covered[w]);
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      for (int w = 0; w < words; ++w) covered[w] |= closed[best_v][w];
      ++picked;
    }
    return picked;
  }

  bool exists_at_most(int k) {
    if (n == 0) return true;
    if (k <= 0) return false;
    if (greedy_size() <= k) return true;
    std::vector<uint64_t> covered(words, 0);
    return dfs(covered, k);
  }

  bool dfs(const std::vector<uint64_t>& covered, int budget) {
    int uncovered = n - popcount_all(covered);
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    // coverage bound: no vertex can newly dominate more than max_gain others
    int max_gain = 0;
    for (int v = 0; v < n; ++v) {
      int gain = 0;
      for (int w = 0; w < words; ++w) gain += std::popcount(closed[v][w] & ~covered[w]);
      max_gain = std::max(max_gain, gain);
    }
    if ((long long)max_gain * budget < uncovered) return false;
    // some vertex must dominate u; branch over its closed neighborhood
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (test_bit(covered, v)) continue;
      if (pick < 0 || closed_size[v] < closed_size[pick]) pick = v;
    }
    std::vector<std::pair<int, int>> cands;  // (-gain, vertex): try big coverage first
    for (int v = 0; v < n; ++v) {
      if (!test_bit(closed[pick], v)) continue;
      int gain = 0;
      for (int w = 0; w < words; ++w) gain += std::popcount(closed[v][w] & ~covered[w]);
      cands.emplace_back(-gain, v);
    }
    std::sort(cands.begin(), cands.end());
    std::vector<uint64_t> next(words);
    for (auto [neg_gain, v] : cands) {
      for (int w = 0; w < words; ++w) next[w] = covered[w] | closed[v][w];
      if (dfs(next, budget - 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool has_clique_exhaustive(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  if (k == 0) return true;
  return any_combination(g.vertex_count(), k, [&](const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
  });
}

int max_clique_size_exhaustive(const Graph& g) {
  int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("exhaustive clique oracle capped at n <= 24");
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    bool ok = true;
    for (int u = 0; ok && u < n; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = u + 1; ok && v < n; ++v)
        if ((mask >> v & 1) && !g.has_edge(u + 1, v + 1)) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

bool has_dominating_set_of_size(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  if (k > g.vertex_count()) return false;  // |D| = k needs k distinct vertices
  // a dominating set stays dominating under supersets, so exact size k is
  // equivalent to minimum size <= k (padding with arbitrary vertices)
  DominationSearch search(g);
  return search.exists_at_most(k) || g.vertex_count() == 0;
}

bool has_dominating_set_of_size_exhaustive(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  int n = g.vertex_count();
  if (k > n) return false;
  if (n == 0) return true;
  return any_combination(n, k, [&](const std::vector<int>& vs) {
    return is_dominating_set(g, VertexSet::from_vertices(n, vs));
  });
}

Graph plant_clique(const Graph& g, const VertexSet& a) {
  std::vector<Vertex> vs = a.to_vector();
  if (!vs.empty() && vs.back() > g.vertex_count())
    throw std::invalid_argument("planted set not contained in [n]");
  Graph out = g;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) out.set_edge(vs[i], vs[j], true);
  return out;
}

Graph union_graphs(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("union of graphs with different vertex counts");
  Graph out = g;
  for (const Edge& e : h.edges()) out.set_edge(e.u, e.v, true);
  return out;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  // skip metadata comments before the header
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    break;
  }
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("bad graph header");
  std::string rest;
  if (header >> rest) throw std::invalid_argument("trailing tokens in graph header");
  Graph g{int(n)};
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("missing edge lines");
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
    if (es >> rest) throw std::invalid_argument("trailing tokens in edge line: " + line);
    if (u >= v) throw std::invalid_argument("edge endpoints must satisfy u < v");
    if (u < 1 || v > n) throw std::invalid_argument("edge endpoint outside [n]");
    if (g.has_edge(int(u), int(v))) throw std::invalid_argument("duplicate edge");
    g.add_edge(int(u), int(v));
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw std::invalid_argument("trailing content after edge list");
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace paraac
