#include "kdmv/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdmv/distance.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/visibility.hpp"

namespace kdmv {

bool is_dominating(const Graph& g, const VertexSet& d) {
  VertexSet covered;
  for (int v : d) covered |= g.closed_neighborhood(v);
  return g.vertices().subset_of(covered);
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  VertexSet covered;
  for (int v : d) covered |= g.neighbors(v);
  return g.vertices().subset_of(covered);
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const std::vector<VertexSet>& cover, int n, std::uint64_t budget)
      : cover_(cover), n_(n), budget_(budget), coverers_(n) {
    for (int u = 0; u < n; ++u)
      for (int x : cover_[u]) coverers_[x].set(u);
  }

  SolveResult run() {
    SolveResult r;
    const VertexSet all = VertexSet::full(n_);
    for (int x = 0; x < n_; ++x)
      if (coverers_[x].empty()) throw DomainError("vertex " + std::to_string(x) + " cannot be covered");
    best_ = greedy(all);
    int max_cover = 1;
    for (int u = 0; u < n_; ++u) max_cover = std::max(max_cover, cover_[u].count());
    root_lower_ = n_ == 0 ? 0 : (n_ + max_cover - 1) / max_cover;
    search(VertexSet{}, all, VertexSet{});
    r.set = best_;
    r.value = r.upper = best_.count();
    r.lower = exhausted_ ? root_lower_ : r.upper;
    r.status = exhausted_ ? SolveStatus::BoundsOnly : SolveStatus::Exact;
    r.nodes = nodes_;
    return r;
  }

 private:
  VertexSet greedy(VertexSet uncovered) const {
    VertexSet d;
    while (uncovered.any()) {
      int pick = -1;
      int gain = 0;
      for (int u = 0; u < n_; ++u) {
        const int c = cover_[u].intersection_count(uncovered);
        if (c > gain) {
          gain = c;
          pick = u;
        }
      }
      d.set(pick);
      uncovered -= cover_[pick];
    }
    return d;
  }

  void search(const VertexSet& d, const VertexSet& uncovered, VertexSet excluded) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int size = d.count();
    if (uncovered.empty()) {
      if (size < best_.count()) best_ = d;
      return;
    }
    int max_gain = 0;
    for (int u = 0; u < n_; ++u)
      if (!excluded.contains(u) && !d.contains(u)) max_gain = std::max(max_gain, cover_[u].intersection_count(uncovered));
    if (max_gain == 0) return;
    const int remaining = uncovered.count();
    if (size + (remaining + max_gain - 1) / max_gain >= best_.count()) return;

    int pivot = -1;
    int options = n_ + 1;
    for (int x : uncovered) {
      const int c = (coverers_[x] - excluded).count();
      if (c < options) {
        options = c;
        pivot = x;
      }
    }
    if (options == 0) return;
    for (int u : coverers_[pivot] - excluded) {
      VertexSet next = d;
      next.set(u);
      search(next, uncovered - cover_[u], excluded);
      if (exhausted_) return;
      // Later branches never reuse u.
      excluded.set(u);
    }
  }

  const std::vector<VertexSet>& cover_;
  int n_;
  std::uint64_t budget_;
  std::vector<VertexSet> coverers_;
  VertexSet best_;
  int root_lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolveResult min_cover(const std::vector<VertexSet>& cover, int n, std::uint64_t budget) {
  return CoverSearch(cover, n, budget).run();
}

SolveResult gamma_exact(const Graph& g, std::uint64_t budget) {
  std::vector<VertexSet> cover(g.order());
  for (int v = 0; v < g.order(); ++v) cover[v] = g.closed_neighborhood(v);
  return min_cover(cover, g.order(), budget);
}

SolveResult gamma_t_exact(const Graph& g, std::uint64_t budget) {
  if (g.has_isolated_vertex()) throw DomainError("total domination needs a graph without isolated vertices");
  std::vector<VertexSet> cover(g.order());
  for (int v = 0; v < g.order(); ++v) cover[v] = g.neighbors(v);
  return min_cover(cover, g.order(), budget);
}

SolveResult gamma_k_exact(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw DomainError("k must be positive");
  const auto dm = all_pairs_distances(g);
  std::vector<VertexSet> cover(g.order());
  for (int v = 0; v < g.order(); ++v) cover[v] = dm.ball(v, k);
  return min_cover(cover, g.order(), budget);
}

// ---------------------------------------------------------------------------

namespace {

// Maximum clique in h with greedy-coloring bounds.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& h, std::uint64_t budget) : h_(h), budget_(budget) {}

  SolveResult run() {
    SolveResult r;
    const int n = h_.order();
    if (n > 0) {
      // Greedy start in degree order.
      VertexSet cand = h_.vertices();
      for (int v : degree_order(h_))
        if (cand.contains(v)) {
          best_.set(v);
          cand &= h_.neighbors(v);
        }
      expand(VertexSet{}, h_.vertices());
    }
    r.set = best_;
    r.value = r.lower = best_.count();
    r.upper = exhausted_ ? n : r.value;
    r.status = exhausted_ ? SolveStatus::BoundsOnly : SolveStatus::Exact;
    r.nodes = nodes_;
    return r;
  }

 private:
  void expand(const VertexSet& c, VertexSet p) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int size = c.count();
    if (p.empty()) {
      if (size > best_.count()) best_ = c;
      return;
    }
    // Color classes of p as independent sets of h; vertex bound = its class index.
    std::vector<int> order;
    std::vector<int> bound;
    VertexSet uncolored = p;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet avail = uncolored;
      while (avail.any()) {
        const int v = avail.first();
        avail.reset(v);
        avail -= h_.neighbors(v);
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_.count()) return;
      const int v = order[i];
      VertexSet next = c;
      next.set(v);
      expand(next, p & h_.neighbors(v));
      if (exhausted_) return;
      p.reset(v);
    }
  }

  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  VertexSet best_;
};

}  // namespace

SolveResult max_independent_set(const Graph& g, std::uint64_t budget) {
  return CliqueSearch(complement(g), budget).run();
}

SolveResult rho2_exact(const Graph& g, std::uint64_t budget) {
  // Conflict graph: closed neighborhoods meet iff distance <= 2.
  const auto dm = all_pairs_distances(g);
  Graph conflict(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (dm(u, v) <= 2) conflict.add_edge(u, v);
  return max_independent_set(conflict, budget);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VertexSet> neighborhood_classes(const Graph& g, const std::vector<int>& d) {
  VertexSet set;
  for (int v : d) {
    if (v < 0 || v >= g.order()) throw DomainError("dominating set vertex out of range");
    set.set(v);
  }
  if (!is_total_dominating(g, set)) throw DomainError("the given set is not a total dominating set");
  std::vector<VertexSet> classes;
  VertexSet used;
  for (int v : d) {
    VertexSet di = g.neighbors(v) - used;
    used |= di;
    if (di.any()) classes.push_back(di);
  }
  return classes;
}

}  // namespace

Coloring total_dom_partition(const Graph& g, const std::vector<int>& d) {
  if (g.has_isolated_vertex()) throw DomainError("total domination needs a graph without isolated vertices");
  const auto classes = neighborhood_classes(g, d);
  const auto dm = all_pairs_distances(g);
  for (const auto& c : classes)
    if (!is_kdmv_set(g, dm, c, 2)) throw std::logic_error("neighborhood class " + c.to_string() + " is not 2DMV");
  return Coloring::from_classes(g.order(), classes);
}

Coloring neighborhood_i2dmv_partition(const Graph& g, const std::vector<int>& d) {
  if (g.has_isolated_vertex()) throw DomainError("total domination needs a graph without isolated vertices");
  if (girth(g) < 7) throw DomainError("neighborhood partition into independent classes needs girth >= 7");
  const auto classes = neighborhood_classes(g, d);
  const auto dm = all_pairs_distances(g);
  for (const auto& c : classes)
    if (!is_independent(g, c) || !is_kdmv_set(g, dm, c, 2))
      throw std::logic_error("neighborhood class " + c.to_string() + " is not independent 2DMV");
  return Coloring::from_classes(g.order(), classes);
}

// ---------------------------------------------------------------------------

namespace {

class ExactNeighborhoodCover {
 public:
  ExactNeighborhoodCover(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::optional<VertexSet> run() {
    if (g_.order() == 0) return VertexSet{};
    if (g_.has_isolated_vertex()) return std::nullopt;
    if (search(VertexSet{}, VertexSet{}, VertexSet{})) return found_;
    return std::nullopt;
  }

 private:
  bool search(const VertexSet& d, const VertexSet& covered, VertexSet excluded) {
    if (++nodes_ > budget_) throw BudgetError("efficient open domination search exceeded its node budget");
    const VertexSet uncovered = g_.vertices() - covered;
    if (uncovered.empty()) {
      found_ = d;
      return true;
    }
    // Uncovered vertex with the fewest usable centers.
    int pivot = -1;
    int options = g_.order() + 1;
    for (int x : uncovered) {
      int c = 0;
      for (int y : g_.neighbors(x) - excluded - d)
        if (!g_.neighbors(y).intersects(covered)) ++c;
      if (c < options) {
        options = c;
        pivot = x;
        if (c == 0) return false;
      }
    }
    for (int y : g_.neighbors(pivot) - excluded - d) {
      if (g_.neighbors(y).intersects(covered)) continue;
      VertexSet next = d;
      next.set(y);
      if (search(next, covered | g_.neighbors(y), excluded)) return true;
      excluded.set(y);
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet found_;
};

}  // namespace

std::optional<VertexSet> efficient_open_dominating_set(const Graph& g, std::uint64_t budget) {
  return ExactNeighborhoodCover(g, budget).run();
}

}  // namespace kdmv
