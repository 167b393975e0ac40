#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paraac/restriction.hpp"
#include "paraac/rng.hpp"
#include "paraac/stats.hpp"
#include "paraac/zoo.hpp"

namespace paraac {

// Rooted binary decision tree over edge variables. Children follow the
// queried value: child0 for X_e = 0, child1 for X_e = 1.
class DecisionTree {
 public:
  struct Node {
    bool is_leaf = true;
    int bit = 0;
    Edge edge{};
    int child0 = -1;
    int child1 = -1;
  };

  static DecisionTree leaf(int bit);

  int add_leaf(int bit);
  int add_query(Edge e, int child0, int child1);
  void set_root(int node);

  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Max over root-leaf paths of the number of distinct vertices among the
// endpoints of edges queried on the path.
int vertex_height(const DecisionTree& t);

// Evaluate the tree on an edge assignment.
bool eval_decision_tree(const DecisionTree& t, const std::function<bool(Edge)>& assignment);

// Exact DTdepth_v: minimum vertex height over all decision trees computing
// f. Memoized search over partial assignments; the set of charged vertices
// along a path is exactly the endpoint set of the assigned variables, so the
// state is (assigned, values).
int dt_depth_v(const BoolFunc& f);

// A witness tree achieving dt_depth_v(f).
DecisionTree build_optimal_tree(const BoolFunc& f);

struct SwitchingTailResult {
  int n = 0;
  int ell = 0;
  double q = 0;
  int s = 0;
  int r = 0;
  long long trials = 0;
  long long exceed_count = 0;
  double empirical_tail = 0;
  double wilson_lo = 0;
  double wilson_hi = 0;
  double beame_bound = 0;   // 8 ((2/q)^{(s+r-1)/2} p r)^s / 3 with p = ell/n
  bool hypothesis_ok = false;  // p <= 1 / (r (2/q)^{(r+s)/2})
  uint64_t seed = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

// Samples mu ~ C^{ell,q}_n per trial (trial t uses RngStream(seed,
// stream_base + t)), computes DTdepth_v(f|mu) exactly and reports the
// empirical exceedance Pr[DTdepth_v > s] with its Wilson 99% interval next
// to the analytic tail bound. Requires q <= 1/2 and a star block within the
// truth-table cap.
SwitchingTailResult switching_tail(int n, int ell, double q, const DnfFunction& f, int s,
                                   long long trials, uint64_t seed, uint64_t stream_base = 0);
SwitchingTailResult switching_tail(int n, int ell, double q, const Dnf& f, int s,
                                   long long trials, uint64_t seed, uint64_t stream_base = 0);

}  // namespace paraac
