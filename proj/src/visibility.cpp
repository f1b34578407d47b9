#include "kdmv/visibility.hpp"

#include <algorithm>
#include <bit>

#include "kdmv/errors.hpp"

namespace kdmv {

GeodesicLayers geodesic_layers(const DistanceMatrix& dm, int u, int v) {
  if (!dm.finite(u, v))
    throw DistanceError("no geodesic between " + std::to_string(u) + " and " + std::to_string(v));
  GeodesicLayers out{u, v, dm(u, v), {}};
  for (int w = 0; w < dm.order(); ++w)
    if (dm.finite(u, w) && dm.finite(w, v) && dm(u, w) + dm(w, v) == out.dist) out.on_geodesic.set(w);
  return out;
}

bool geodesic_avoiding_exists(const Graph& g, const DistanceMatrix& dm, int u, int v, const VertexSet& forbidden) {
  const auto layers = geodesic_layers(dm, u, v);
  const int d = layers.dist;
  if (d <= 1) return true;
  std::vector<VertexSet> by_level(d + 1);
  for (int w : layers.on_geodesic) by_level[dm(u, w)].set(w);
  VertexSet cur{u};
  for (int i = 1; i < d; ++i) {
    VertexSet next;
    for (int w : by_level[i] - forbidden)
      if (g.neighbors(w).intersects(cur)) next.set(w);
    if (next.empty()) return false;
    cur = next;
  }
  return g.neighbors(v).intersects(cur);
}

bool is_kdmv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s, int k) {
  for (int u : s)
    for (int v : s) {
      if (v <= u) continue;
      if (!dm.finite(u, v) || dm(u, v) > k) return false;
      if (!geodesic_avoiding_exists(g, dm, u, v, s)) return false;
    }
  return true;
}

bool is_mv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  return is_kdmv_set(g, dm, s, DistanceMatrix::kInf - 1);
}

// ---------------------------------------------------------------------------

GeodesicIndex::GeodesicIndex(const Graph& g) : GeodesicIndex(g, all_pairs_distances(g)) {}

GeodesicIndex::GeodesicIndex(const Graph& g, DistanceMatrix dm) : g_(g), dm_(std::move(dm)) {
  const int n = g_.order();
  layers_.resize(n);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (!dm_.finite(u, w)) continue;
      const int d = dm_(u, w);
      if (static_cast<int>(layers_[u].size()) <= d) layers_[u].resize(d + 1);
      layers_[u][d].set(w);
    }
  }
}

const VertexSet& GeodesicIndex::layer(int u, int i) const {
  if (i < 0 || i >= static_cast<int>(layers_[u].size())) return empty_;
  return layers_[u][i];
}

const VertexSet& GeodesicIndex::interval(int u, int v) const {
  const int n = order();
  if (interval_.empty()) {
    interval_.resize(static_cast<std::size_t>(n) * n);
    interval_ready_.assign(static_cast<std::size_t>(n) * n, false);
  }
  const std::size_t key = static_cast<std::size_t>(u) * n + v;
  if (!interval_ready_[key]) {
    if (!dm_.finite(u, v)) throw DistanceError("interval of unreachable pair");
    const int d = dm_(u, v);
    VertexSet s;
    for (int i = 1; i < d; ++i) s |= layer(u, i) & layer(v, d - i);
    interval_[key] = s;
    interval_[static_cast<std::size_t>(v) * n + u] = s;
    interval_ready_[key] = true;
    interval_ready_[static_cast<std::size_t>(v) * n + u] = true;
  }
  return interval_[key];
}

bool GeodesicIndex::avoiding_path_exists(int u, int v, const VertexSet& forbidden) const {
  if (!dm_.finite(u, v)) throw DistanceError("no geodesic between " + std::to_string(u) + " and " + std::to_string(v));
  const int d = dm_(u, v);
  if (d <= 1) return true;
  if (d == 2) return (g_.neighbors(u) & g_.neighbors(v)).subset_of(forbidden) == false;
  VertexSet cur{u};
  for (int i = 1; i < d; ++i) {
    const VertexSet allowed = (layer(u, i) & layer(v, d - i)) - forbidden;
    VertexSet next;
    for (int w : allowed)
      if (g_.neighbors(w).intersects(cur)) next.set(w);
    if (next.empty()) return false;
    cur = next;
  }
  return g_.neighbors(v).intersects(cur);
}

bool GeodesicIndex::is_kdmv(const VertexSet& s, int k) const {
  for (int u : s)
    for (int v : s) {
      if (v <= u) continue;
      if (!dm_.finite(u, v) || dm_(u, v) > k) return false;
      if (!avoiding_path_exists(u, v, s)) return false;
    }
  return true;
}

bool GeodesicIndex::can_add(const VertexSet& s, int v, int k) const {
  if (s.contains(v)) return true;
  VertexSet t = s;
  t.set(v);
  for (int a : s)
    if (!dm_.finite(a, v) || dm_(a, v) > k || !avoiding_path_exists(a, v, t)) return false;
  for (int a : s)
    for (int b : s) {
      if (b <= a || dm_(a, b) < 2) continue;
      if (interval(a, b).contains(v) && !avoiding_path_exists(a, b, t)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

class MaxKdmvSearch {
 public:
  MaxKdmvSearch(const Graph& g, int k, std::uint64_t budget)
      : index_(g), k_(std::min(k, std::max(1, g.order()))), budget_(budget), order_(degree_order(g)) {}

  SolveResult run() {
    SolveResult r;
    const int n = index_.order();
    if (n > 0) {
      best_ = VertexSet{order_[0]};
      extend(VertexSet{}, order_);
    }
    r.set = best_;
    r.value = r.lower = best_.count();
    r.upper = exhausted_ ? n : r.value;
    r.status = exhausted_ ? SolveStatus::BoundsOnly : SolveStatus::Exact;
    r.nodes = nodes_;
    return r;
  }

 private:
  void extend(const VertexSet& s, const std::vector<int>& pool) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int size = s.count();
    if (size > best_.count()) best_ = s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (size + static_cast<int>(pool.size() - i) <= best_.count()) return;
      const int v = pool[i];
      VertexSet t = s;
      t.set(v);
      std::vector<int> next;
      next.reserve(pool.size() - i - 1);
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const int w = pool[j];
        const auto& dm = index_.distances();
        if (!dm.finite(v, w) || dm(v, w) > k_) continue;
        if (index_.can_add(t, w, k_)) next.push_back(w);
      }
      extend(t, next);
      if (exhausted_) return;
    }
  }

  GeodesicIndex index_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> order_;
  VertexSet best_;
};

}  // namespace

SolveResult max_kdmv(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw DomainError("k must be positive");
  return MaxKdmvSearch(g, k, budget).run();
}

// ---------------------------------------------------------------------------

const char* to_string(QnSetKind kind) {
  switch (kind) {
    case QnSetKind::WithinClosedNeighborhood:
      return "WithinClosedNeighborhood";
    case QnSetKind::Square:
      return "Square";
    case QnSetKind::Q3PartiteSet:
      return "Q3PartiteSet";
    case QnSetKind::NotDiam2:
      return "NotDiam2";
    case QnSetKind::Unclassified:
      return "Unclassified";
  }
  return "?";
}

QnClassification classify_q_n_diam2_set(int n, const VertexSet& s) {
  if (n < 0 || n > 9) throw SpecError("hypercube dimension out of range");
  const int order = 1 << n;
  for (int v : s)
    if (v >= order) throw DomainError("vertex outside Q_n");
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (std::popcount(static_cast<unsigned>(members[i] ^ members[j])) > 2) return {QnSetKind::NotDiam2, -1};

  for (int v = 0; v < order; ++v) {
    bool inside = true;
    for (int x : members)
      if (std::popcount(static_cast<unsigned>(x ^ v)) > 1) {
        inside = false;
        break;
      }
    if (inside) return {QnSetKind::WithinClosedNeighborhood, v};
  }
  if (members.size() != 4) return {QnSetKind::Unclassified, -1};

  int adjacent_pairs = 0;
  unsigned spread = 0;
  std::vector<int> deg(4, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const unsigned x = static_cast<unsigned>(members[i] ^ members[j]);
      spread |= x;
      if (std::popcount(x) == 1) {
        ++adjacent_pairs;
        ++deg[i];
        ++deg[j];
      }
    }
  if (adjacent_pairs == 4 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
    return {QnSetKind::Square, -1};
  if (adjacent_pairs == 0 && std::popcount(spread) == 3) return {QnSetKind::Q3PartiteSet, -1};
  return {QnSetKind::Unclassified, -1};
}

}  // namespace kdmv
