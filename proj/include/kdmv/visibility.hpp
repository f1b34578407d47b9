#pragma once

#include <cstdint>
#include <vector>

#include "kdmv/coloring.hpp"
#include "kdmv/distance.hpp"
#include "kdmv/graph.hpp"

namespace kdmv {

/// Vertices on some u,v-geodesic (u and v included).
struct GeodesicLayers {
  int source = 0;
  int target = 0;
  int dist = 0;
  VertexSet on_geodesic;
};

/// Throws DistanceError when v is unreachable from u.
GeodesicLayers geodesic_layers(const DistanceMatrix& dm, int u, int v);

/// True iff some u,v-geodesic has no internal vertex in `forbidden`.
/// Throws DistanceError when u and v lie in different components.
bool geodesic_avoiding_exists(const Graph& g, const DistanceMatrix& dm, int u, int v, const VertexSet& forbidden);

/// Every pair of s is at distance <= k and joined by a geodesic whose
/// internal vertices avoid s. The empty set and singletons qualify.
bool is_kdmv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s, int k);
/// Mutual visibility: is_kdmv_set without a distance cap.
bool is_mv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// Distance layers per vertex plus a lazily filled table of geodesic
/// intervals, shared by the searches that ask the same pairs many times.
/// Owns copies of the graph and distances.
class GeodesicIndex {
 public:
  explicit GeodesicIndex(const Graph& g);
  GeodesicIndex(const Graph& g, DistanceMatrix dm);

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances() const { return dm_; }
  int order() const { return g_.order(); }

  /// Vertices at distance exactly i from u (empty beyond the eccentricity).
  const VertexSet& layer(int u, int i) const;
  /// Internal vertices of all u,v-geodesics; requires finite d(u, v).
  const VertexSet& interval(int u, int v) const;

  bool avoiding_path_exists(int u, int v, const VertexSet& forbidden) const;
  bool is_kdmv(const VertexSet& s, int k) const;

  /// Given that s is kDMV, whether s + v is. Only pairs that involve v or
  /// whose interval contains v are rechecked.
  bool can_add(const VertexSet& s, int v, int k) const;

 private:
  Graph g_;
  DistanceMatrix dm_;
  std::vector<std::vector<VertexSet>> layers_;
  VertexSet empty_;
  mutable std::vector<VertexSet> interval_;
  mutable std::vector<bool> interval_ready_;
};

/// Maximum kDMV set (mu_k). Branches on vertices in degree order; the
/// candidate pool keeps only vertices that extend the current set, which is
/// sound because subsets of kDMV sets are kDMV.
SolveResult max_kdmv(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

enum class QnSetKind { WithinClosedNeighborhood, Square, Q3PartiteSet, NotDiam2, Unclassified };

struct QnClassification {
  QnSetKind kind = QnSetKind::Unclassified;
  /// Center of the closed neighborhood for WithinClosedNeighborhood.
  int center = -1;
};

const char* to_string(QnSetKind kind);

/// Structure of a vertex set of Q_n (vertices as bit strings) whose members
/// are pairwise at distance <= 2. Unclassified is never expected and is
/// reported rather than asserted.
QnClassification classify_q_n_diam2_set(int n, const VertexSet& s);

}  // namespace kdmv
