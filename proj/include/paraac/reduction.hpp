#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paraac/graph.hpp"

namespace paraac {

// Label of a vertex of the reduced graph H. The construction uses five
// vertex families: per-index anchors new(i), vertex copies v(i), tuple
// vertices (i,j,u,v), per-pair anchors new(i,j) and edge copies {u,v}(i,j).
struct DsVertexLabel {
  enum class Kind { NewI, VertexCopy, Tuple, NewIJ, EdgeCopy };

  Kind kind = Kind::NewI;
  int i = 0;
  int j = 0;       // Tuple, NewIJ, EdgeCopy
  Vertex u = 0;    // VertexCopy (the copied vertex), Tuple, EdgeCopy
  Vertex v = 0;    // Tuple, EdgeCopy

  std::string to_string() const;
};

// Output of the clique -> dominating set reduction: H together with the
// target size k + C(k,2) and per-vertex labels.
struct DsInstance {
  Graph graph;
  int target_size = 0;
  int k = 0;
  int source_n = 0;
  int source_m = 0;
  std::vector<DsVertexLabel> labels;  // labels[w-1] describes H-vertex w
};

// Builds H = (W,F) with blocks laid out in the order (a), (b), (c) and
// lexicographic order inside each block, so the construction is
// byte-reproducible. Requires k >= 2 and a non-empty edge set.
// g has a k-clique iff H has a dominating set of size k + C(k,2).
DsInstance reduce_clique_to_ds(const Graph& g, int k);

// D(C) = {u_1(1),...,u_k(k)} ∪ {{u_i,u_j}(i,j)} for a k-clique C of g,
// verified to dominate inst.graph. Rejects non-cliques and size mismatches.
VertexSet clique_to_ds_witness(const Graph& g, const VertexSet& clique, const DsInstance& inst);

// JSON sidecar for a serialized instance: {"target_size": k', "labels": {...}}
std::string ds_instance_sidecar_json(const DsInstance& inst);

struct EquivalenceMismatch {
  Graph g;
  int k = 0;
  bool clique_answer = false;
  bool ds_answer = false;
};

struct EquivalenceReport {
  int graphs_in_scope = 0;       // graphs with at least one edge
  int graphs_skipped_empty = 0;  // skipped because the reduction needs E != {}
  long long pairs_checked = 0;
  std::vector<EquivalenceMismatch> mismatches;
  double elapsed_seconds = 0.0;

  bool ok() const { return mismatches.empty(); }
};

struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  int sample_count = 0;
  uint64_t seed = 0;

  static VerifyMode exhaustive() { return VerifyMode{}; }
  static VerifyMode sampled(int count, uint64_t seed) {
    return VerifyMode{Kind::Sampled, count, seed};
  }
};

// Compares the clique oracle on g against the domination oracle on H over
// all graphs on [n] (exhaustive; capped at n <= 4 because of the solver cost
// on H) or over seeded ER(n, 1/2) samples. All k in k_range must be >= 2.
EquivalenceReport verify_equivalence(int n, const std::vector<int>& k_range,
                                     const VerifyMode& mode);

}  // namespace paraac
