#pragma once

#include <limits>
#include <vector>

#include "kdmv/distance.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

/// Girth of a forest.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct CenterInfo {
  int radius = 0;
  int diameter = 0;
  VertexSet center;
  /// Vertices at distance `radius` from some center vertex.
  VertexSet radial_vertices;
  /// Components of G - E(G[C]) (|C| >= 2) or of G minus the edges at the
  /// single center vertex (|C| = 1) that contain a radial vertex.
  int deg_star = 0;
};

struct GraphMetrics {
  int girth = kInfiniteGirth;
  /// kInf-valued (DistanceMatrix::kInf) when disconnected.
  int diameter = 0;
  int radius = 0;
  bool connected = true;
};

int girth(const Graph& g);
GraphMetrics metrics(const Graph& g);
GraphMetrics metrics(const Graph& g, const DistanceMatrix& dm);

/// Throws ConnectivityError on disconnected input.
CenterInfo center_info(const Graph& g);
CenterInfo center_info(const Graph& g, const DistanceMatrix& dm);

/// True iff s induces a connected subgraph and contains every vertex of
/// every geodesic between two of its members. Empty or disconnected sets
/// are reported as not convex.
bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);
bool is_convex(const Graph& g, const VertexSet& s);

struct BlockDecomposition {
  VertexSet cut_vertices;
  /// Ordered by smallest member.
  std::vector<VertexSet> blocks;
  bool is_block_graph = false;
};

/// Block-cut decomposition of a connected graph; ConnectivityError otherwise.
BlockDecomposition blocks(const Graph& g);

}  // namespace kdmv
