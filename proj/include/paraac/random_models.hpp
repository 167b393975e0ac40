#pragma once

#include "paraac/graph.hpp"
#include "paraac/rng.hpp"

namespace paraac {

// One draw from the planted distribution: base ~ ER(n,p), planted_set a
// uniform c-subset of [n] independent of base, planted_graph = base + C(A).
struct PlantedSample {
  Graph base;
  VertexSet planted_set;
  Graph planted_graph;
};

// ER(n,p): every potential edge present independently with probability p.
// Edges are drawn in canonical order, one Bernoulli trial each.
Graph sample_er(int n, double p, RngStream& rng);

// ER(n,p,c). Draw order: all base edges first, then the planted subset.
PlantedSample sample_planted(int n, double p, int c, RngStream& rng);

// p(n) = (n^{-1/k'} - n^{-1/k}) / (1 - n^{-1/k}), the edge probability that
// makes H ∪ G with H ~ ER(n,p(n)), G ~ ER(n, n^{-1/k}) distributed as
// ER(n, n^{-1/k'}). Requires k' >= k > 0 and n >= 2; the result satisfies
// p + (1-p) n^{-1/k} = n^{-1/k'}.
double bridge_probability(long long n, double k, double k_prime);

}  // namespace paraac
