#include "detsum/generators.hpp"

#include <bit>
#include <numeric>

#include "detsum/detection.hpp"

namespace detsum {

bool bernoulli(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

Graph cycle_graph(int n) {
  Graph g(n);
  if (n < 3) throw InvalidInput("a cycle needs at least three vertices");
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph hypercube(int dimension) {
  if (dimension < 1 || dimension > 6) throw InvalidInput("hypercube dimension must be in 1..6");
  const int n = 1 << dimension;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

Graph planted_hamiltonian(int n, double p, std::mt19937_64& rng) {
  if (n < 3) throw InvalidInput("a Hamiltonian cycle needs at least three vertices");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

Graph random_bipartite(int n, double p, std::mt19937_64& rng) {
  if (n % 2 != 0) throw InvalidInput("balanced bipartite graphs need an even vertex count");
  const int half = n / 2;
  Graph g(n);
  for (int u = 0; u < half; ++u)
    for (int v = half; v < n; ++v)
      if (bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

WeightedGraph random_weights(const Graph& g, int max_weight, std::mt19937_64& rng) {
  if (max_weight < 1) throw InvalidInput("weights must be positive");
  WeightedGraph wg(g.vertex_count());
  for (auto [u, v] : g.edges())
    wg.add_edge(u, v, 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_weight))));
  return wg;
}

Graph family_graph(const std::string& family, int n, double p, std::mt19937_64& rng) {
  if (family == "random") return random_gnp(n, p, rng);
  if (family == "planted") return planted_hamiltonian(n, p, rng);
  if (family == "bipartite") return random_bipartite(n, p, rng);
  if (family == "hypercube") {
    if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
      throw InvalidInput("hypercube family needs n to be a power of two");
    return hypercube(std::countr_zero(static_cast<unsigned>(n)));
  }
  throw InvalidInput("unknown graph family '" + family + "'");
}

}  // namespace detsum
