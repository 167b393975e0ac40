#include "paraac/decision_tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paraac {

DecisionTree DecisionTree::leaf(int bit) {
  DecisionTree t;
  t.set_root(t.add_leaf(bit));
  return t;
}

int DecisionTree::add_leaf(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("leaf bit must be 0 or 1");
  Node n;
  n.is_leaf = true;
  n.bit = bit;
  nodes_.push_back(n);
  return int(nodes_.size()) - 1;
}

int DecisionTree::add_query(Edge e, int child0, int child1) {
  if (child0 < 0 || child0 >= int(nodes_.size()) || child1 < 0 || child1 >= int(nodes_.size()))
    throw std::invalid_argument("query children must already exist");
  Node n;
  n.is_leaf = false;
  n.edge = e;
  n.child0 = child0;
  n.child1 = child1;
  nodes_.push_back(n);
  return int(nodes_.size()) - 1;
}

void DecisionTree::set_root(int node) {
  if (node < 0 || node >= int(nodes_.size())) throw std::invalid_argument("bad root id");
  root_ = node;
}

namespace {

int height_walk(const DecisionTree& t, int node, std::set<Vertex>& charged) {
  const auto& n = t.nodes()[node];
  if (n.is_leaf) return int(charged.size());
  bool new_u = charged.insert(n.edge.u).second;
  bool new_v = charged.insert(n.edge.v).second;
  int best = std::max(height_walk(t, n.child0, charged), height_walk(t, n.child1, charged));
  if (new_u) charged.erase(n.edge.u);
  if (new_v) charged.erase(n.edge.v);
  return best;
}

}  // namespace

int vertex_height(const DecisionTree& t) {
  if (t.root() < 0) throw std::invalid_argument("tree has no root");
  std::set<Vertex> charged;
  return height_walk(t, t.root(), charged);
}

bool eval_decision_tree(const DecisionTree& t, const std::function<bool(Edge)>& assignment) {
  int node = t.root();
  if (node < 0) throw std::invalid_argument("tree has no root");
  while (!t.nodes()[node].is_leaf) {
    const auto& n = t.nodes()[node];
    node = assignment(n.edge) ? n.child1 : n.child0;
  }
  return t.nodes()[node].bit == 1;
}

namespace {

// Search state for the exact oracle. Variables are indices into f's variable
// list; endpoints are compacted to small indices so charged sets fit a mask.
struct DepthSearch {
  const BoolFunc& f;
  int nvars;
  std::vector<uint32_t> endpoint_mask;  // per variable, bits over compact vertices
  std::vector<int> popcount_cache;
  // memo over (assigned, values): charged vertices are determined by assigned
  std::map<uint64_t, int> memo;
  std::map<uint64_t, int> choice;  // best variable to query, -1 for leaves

  explicit DepthSearch(const BoolFunc& func) : f(func), nvars(func.var_count()) {
    std::vector<Vertex> verts;
    for (const Edge& e : f.variables()) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() > 32) throw std::invalid_argument("too many distinct endpoints");
    auto compact = [&](Vertex v) {
      return int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const Edge& e : f.variables())
      endpoint_mask.push_back((uint32_t(1) << compact(e.u)) | (uint32_t(1) << compact(e.v)));
  }

  static uint64_t key(uint32_t assigned, uint32_t values) {
    return (uint64_t(assigned) << 32) | values;
  }

  bool constant_under(uint32_t assigned, uint32_t values, bool* out) const {
    bool first = true;
    bool val = false;
    uint32_t free_mask = ~assigned & ((uint32_t(1) << nvars) - 1);
    // iterate subsets of the free variables
    uint32_t sub = free_mask;
    while (true) {
      bool v = f.value((values & assigned) | sub);
      if (first) {
        val = v;
        first = false;
      } else if (v != val) {
        return false;
      }
      if (sub == 0) break;
      sub = (sub - 1) & free_mask;
    }
    *out = val;
    return true;
  }

  uint32_t charged(uint32_t assigned) const {
    uint32_t c = 0;
    for (int i = 0; i < nvars; ++i)
      if (assigned >> i & 1) c |= endpoint_mask[i];
    return c;
  }

  // essential = some pair of completions differing only at i disagrees
  bool essential(uint32_t assigned, uint32_t values, int i) const {
    uint32_t free_mask = ~assigned & ((uint32_t(1) << nvars) - 1) & ~(uint32_t(1) << i);
    uint32_t base = values & assigned;
    uint32_t sub = free_mask;
    while (true) {
      if (f.value(base | sub) != f.value(base | sub | (uint32_t(1) << i))) return true;
      if (sub == 0) break;
      sub = (sub - 1) & free_mask;
    }
    return false;
  }

  int solve(uint32_t assigned, uint32_t values) {
    uint64_t k = key(assigned, values & assigned);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    bool const_val;
    int result;
    int best_var = -1;
    if (constant_under(assigned, values, &const_val)) {
      result = std::popcount(charged(assigned));
    } else {
      result = INT32_MAX;
      for (int i = 0; i < nvars; ++i) {
        if (assigned >> i & 1) continue;
        if (!essential(assigned, values, i)) continue;  // querying it cannot help
        uint32_t a2 = assigned | (uint32_t(1) << i);
        int zero = solve(a2, values & ~(uint32_t(1) << i));
        int one = solve(a2, values | (uint32_t(1) << i));
        int cost = std::max(zero, one);
        if (cost < result) {
          result = cost;
          best_var = i;
        }
      }
    }
    memo.emplace(k, result);
    choice.emplace(k, best_var);
    return result;
  }

  int build(uint32_t assigned, uint32_t values, DecisionTree& t) {
    solve(assigned, values);
    int var = choice.at(key(assigned, values & assigned));
    if (var < 0) {
      bool const_val;
      constant_under(assigned, values, &const_val);
      return t.add_leaf(const_val ? 1 : 0);
    }
    uint32_t a2 = assigned | (uint32_t(1) << var);
    int c0 = build(a2, values & ~(uint32_t(1) << var), t);
    int c1 = build(a2, values | (uint32_t(1) << var), t);
    return t.add_query(f.variables()[var], c0, c1);
  }
};

}  // namespace

int dt_depth_v(const BoolFunc& f) {
  DepthSearch search(f);
  return search.solve(0, 0);
}

DecisionTree build_optimal_tree(const BoolFunc& f) {
  DepthSearch search(f);
  DecisionTree t;
  t.set_root(search.build(0, 0, t));
  return t;
}

std::string SwitchingTailResult::csv_header() {
  return "n,ell,q,s,r,trials,empirical_tail,wilson_lo,wilson_hi,beame_bound,hypothesis_ok,seed";
}

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

std::string SwitchingTailResult::csv_row() const {
  std::ostringstream os;
  os << n << ',' << ell << ',' << fmt_double(q) << ',' << s << ',' << r << ',' << trials << ','
     << fmt_double(empirical_tail) << ',' << fmt_double(wilson_lo) << ',' << fmt_double(wilson_hi)
     << ',' << fmt_double(beame_bound) << ',' << (hypothesis_ok ? 1 : 0) << ',' << seed;
  return os.str();
}

SwitchingTailResult switching_tail(int n, int ell, double q, const DnfFunction& f, int s,
                                   long long trials, uint64_t seed, uint64_t stream_base) {
  if (q > 0.5) throw std::invalid_argument("switching tail requires q <= 1/2");
  if (!(q >= 0.0)) throw std::invalid_argument("q must be nonnegative");
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (f.n != n) throw std::invalid_argument("function universe does not match n");
  if (pair_count(ell) > BoolFunc::kMaxVars)
    throw std::invalid_argument("star block exceeds the truth-table cap");

  SwitchingTailResult res;
  res.n = n;
  res.ell = ell;
  res.q = q;
  res.s = s;
  res.r = f.r;
  res.trials = trials;
  res.seed = seed;

  double p = double(ell) / double(n);
  double two_over_q = 2.0 / q;  // inf at q = 0, handled by pow below
  res.beame_bound =
      8.0 / 3.0 * std::pow(std::pow(two_over_q, (s + f.r - 1) / 2.0) * p * f.r, double(s));
  res.hypothesis_ok =
      f.r == 0 || p <= 1.0 / (double(f.r) * std::pow(two_over_q, (f.r + s) / 2.0));

  for (long long t = 0; t < trials; ++t) {
    RngStream rng(seed, stream_base + uint64_t(t));
    Restriction mu = sample_restriction(n, ell, q, rng);
    BoolFunc restricted = restrict_function(n, f.eval, mu);
    if (dt_depth_v(restricted) > s) ++res.exceed_count;
  }
  res.empirical_tail = double(res.exceed_count) / double(trials);
  WilsonInterval wi = wilson_99(res.exceed_count, trials);
  res.wilson_lo = wi.lo;
  res.wilson_hi = wi.hi;
  return res;
}

SwitchingTailResult switching_tail(int n, int ell, double q, const Dnf& f, int s,
                                   long long trials, uint64_t seed, uint64_t stream_base) {
  DnfFunction fn;
  fn.name = "explicit";
  fn.n = n;
  fn.r = f.max_term_vertex_length();
  fn.eval = [f](const Graph& g) { return f.eval(g); };
  fn.explicit_dnf = f;
  return switching_tail(n, ell, q, fn, s, trials, seed, stream_base);
}

}  // namespace paraac
