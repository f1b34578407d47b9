#include "kdmv/distance.hpp"

#include <algorithm>

namespace kdmv {

DistanceMatrix::Distance DistanceMatrix::eccentricity(int v) const {
  Distance e = 0;
  for (int w = 0; w < n_; ++w) e = std::max(e, (*this)(v, w));
  return e;
}

VertexSet DistanceMatrix::ball(int v, int radius) const {
  VertexSet s;
  for (int w = 0; w < n_; ++w)
    if ((*this)(v, w) <= radius) s.set(w);
  return s;
}

VertexSet DistanceMatrix::far_from(int v, int radius) const {
  VertexSet s;
  for (int w = 0; w < n_; ++w)
    if ((*this)(v, w) > radius) s.set(w);
  return s;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (int s = 0; s < n; ++s) {
    VertexSet seen;
    seen.set(s);
    VertexSet frontier = seen;
    dm.at(s, s) = 0;
    for (DistanceMatrix::Distance level = 1; frontier.any(); ++level) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (int v : next) dm.at(s, v) = level;
      seen |= next;
      frontier = next;
    }
  }
  return dm;
}

}  // namespace kdmv
