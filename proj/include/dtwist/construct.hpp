#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtwist/tiling.hpp"

namespace dtwist {

// Bipartite graph with vertices colored +1 (black) / -1 (white).
struct BicoloredGraph {
  std::vector<int> color;
  std::vector<std::vector<int>> adj;  // sorted neighbour lists

  std::size_t size() const { return color.size(); }
  bool balanced() const;
  bool connected() const;
};

// One vertex per cube (in region order), edges between face-adjacent cubes.
BicoloredGraph associated_graph(const Region& region);
// One vertex per square (in sorted square order); the color of a square is
// the color of the cube on its +axis side.
BicoloredGraph associated_graph(const PlanarRegion& base);

// Vertex (v, level) of G x I_m.
using ProductVertex = std::pair<int, int>;
using ProductEdge = std::pair<ProductVertex, ProductVertex>;

struct MatchingStep {
  int white_leaf = -1;
  int black_leaf = -1;
  std::vector<int> path;        // tree path from white_leaf to black_leaf
  std::vector<ProductEdge> d;   // vertical edges added in this step
  std::vector<ProductEdge> e;   // in-layer edges along the path
};

struct MatchingTrace {
  std::vector<std::pair<int, int>> tree;  // spanning tree edges
  std::vector<MatchingStep> steps;
};

// Perfect matching of G x I_{2n-1} for a connected balanced graph with 2n
// vertices. The spanning tree is grown breadth-first from vertex 0; each
// step pairs the smallest white leaf with the smallest black leaf.
std::vector<ProductEdge> tree_matching(const BicoloredGraph& g, MatchingTrace* trace = nullptr);

// Tiling of base + [0, 2n-1] w built from tree_matching on the base graph.
// The base must be balanced (n black and n white squares) and connected.
Tiling algorithm1(const PlanarRegion& base, Dir w, MatchingTrace* trace = nullptr);

// Some tiling of the region, or nullopt if there is none. Backtracks on the
// free cube with the fewest free neighbours. Throws resource-limit when more
// than node_limit search nodes are needed (node_limit < 0: unlimited).
std::optional<Tiling> find_tiling(const Region& region, long long node_limit = -1);

bool is_tileable(const Region& region, Tiling* witness = nullptr);

}  // namespace dtwist
