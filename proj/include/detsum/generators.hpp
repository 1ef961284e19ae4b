#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "detsum/graph.hpp"

namespace detsum {

// True with probability p, from 53 random bits.
bool bernoulli(std::mt19937_64& rng, double p);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int dimension);
Graph petersen();

// Erdős–Rényi G(n, p).
Graph random_gnp(int n, double p, std::mt19937_64& rng);

// G(n, p) plus the edges of a uniformly random Hamiltonian cycle.
Graph planted_hamiltonian(int n, double p, std::mt19937_64& rng);

// Random bipartite graph on parts {0..n/2-1} and {n/2..n-1}, n even.
Graph random_bipartite(int n, double p, std::mt19937_64& rng);

// Edges of g with weights uniform in [1, max_weight].
WeightedGraph random_weights(const Graph& g, int max_weight, std::mt19937_64& rng);

// The graph families of the benchmark harness: random, planted, bipartite,
// hypercube. hypercube needs n to be a power of two.
Graph family_graph(const std::string& family, int n, double p, std::mt19937_64& rng);

}  // namespace detsum
