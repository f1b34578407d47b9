#pragma once

#include <cstdint>
#include <vector>

#include "kdmv/graph.hpp"

namespace kdmv {

/// All-pairs shortest-path lengths. Unreachable pairs hold kInf, which is
/// larger than any distance a 512-vertex graph can realize.
class DistanceMatrix {
 public:
  using Distance = std::uint16_t;
  static constexpr Distance kInf = 0xFFFF;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInf) {}

  int order() const { return n_; }
  Distance operator()(int u, int v) const { return d_[index(u, v)]; }
  Distance& at(int u, int v) { return d_[index(u, v)]; }
  bool finite(int u, int v) const { return (*this)(u, v) != kInf; }

  /// Largest distance from v, or kInf when some vertex is unreachable.
  Distance eccentricity(int v) const;
  /// Vertices w with d(v, w) <= radius.
  VertexSet ball(int v, int radius) const;
  /// Vertices w with d(v, w) > radius, including unreachable ones.
  VertexSet far_from(int v, int radius) const;

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<Distance> d_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace kdmv
