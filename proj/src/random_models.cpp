#include "paraac/random_models.hpp"

#include <cmath>
#include <stdexcept>

namespace paraac {

Graph sample_er(int n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

PlantedSample sample_planted(int n, double p, int c, RngStream& rng) {
  if (c < 0 || c > n) throw std::invalid_argument("planted size outside [0,n]");
  PlantedSample s;
  s.base = sample_er(n, p, rng);
  s.planted_set = VertexSet::from_vertices(n, uniform_subset(n, c, rng));
  s.planted_graph = plant_clique(s.base, s.planted_set);
  return s;
}

double bridge_probability(long long n, double k, double k_prime) {
  if (n < 2) throw std::invalid_argument("bridge probability needs n >= 2");
  if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
  if (k_prime < k) throw std::invalid_argument("k' must be >= k");
  double low = std::pow(double(n), -1.0 / k);        // n^{-1/k}
  double high = std::pow(double(n), -1.0 / k_prime);  // n^{-1/k'} >= low
  return (high - low) / (1.0 - low);
}

}  // namespace paraac
