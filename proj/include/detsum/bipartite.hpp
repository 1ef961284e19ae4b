#pragma once

#include <vector>

#include "detsum/assignment.hpp"
#include "detsum/detection.hpp"
#include "detsum/graph.hpp"
#include "detsum/lcc.hpp"

namespace detsum {

// A bipartite graph with a balanced bipartition. The special vertex is the
// lowest-indexed vertex of part1.
struct BipartiteInstance {
  Graph graph;
  std::vector<int> part1;
  std::vector<int> part2;
  int special = -1;
};

// Validates a supplied bipartition: disjoint, covering, every edge crossing,
// |part1| = |part2|.
BipartiteInstance make_bipartite_instance(const Graph& g, std::vector<int> part1, std::vector<int> part2);

// 2-colors g by BFS, flipping components to balance the sides when that is
// possible. Throws InvalidInput for odd n, non-bipartite or unbalanceable input.
BipartiteInstance make_bipartite_instance(const Graph& g);

// D = (part1, F) with uv in F iff u and v share a part2 neighbour; labels are
// part2 (label i is part2[i]); f(uv, {w}) = x_uw x_wv and zero elsewhere.
LccInstance build_bipartite_lcc(const BipartiteInstance& inst, const VariableAssignment& point);

// Repeats independent runs, each evaluating Lambda at a fresh random point;
// Hamiltonian iff some run is nonzero. Stops at the first nonzero run.
DetectionResult detect_bipartite(const BipartiteInstance& inst, const DetectionConfig& cfg);

}  // namespace detsum
