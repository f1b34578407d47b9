#include "kdmv/chromatic.hpp"

#include <algorithm>
#include <deque>

#include "kdmv/distance.hpp"
#include "kdmv/domination.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/visibility.hpp"

namespace kdmv {

const char* to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::DistanceExceedsK:
      return "DistanceExceedsK";
    case ViolationReason::NoAvoidingGeodesic:
      return "NoAvoidingGeodesic";
    case ViolationReason::NotIndependent:
      return "NotIndependent";
  }
  return "?";
}

namespace {

Verification verify(const Graph& g, int k, const Coloring& c, bool independent) {
  if (c.order() != g.order()) throw DomainError("coloring does not cover the graph");
  const auto dm = all_pairs_distances(g);
  Verification out;
  const auto classes = c.classes();
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    bool failed = false;
    for (int u : classes[i]) {
      for (int v : classes[i]) {
        if (v <= u) continue;
        std::optional<ViolationReason> why;
        if (independent && g.has_edge(u, v))
          why = ViolationReason::NotIndependent;
        else if (!dm.finite(u, v) || dm(u, v) > k)
          why = ViolationReason::DistanceExceedsK;
        else if (!geodesic_avoiding_exists(g, dm, u, v, classes[i]))
          why = ViolationReason::NoAvoidingGeodesic;
        if (why) {
          out.violations.push_back({i, u, v, *why});
          failed = true;
          break;
        }
      }
      if (failed) break;
    }
  }
  out.ok = out.violations.empty();
  return out;
}

// Vertices that may not share a class with v regardless of the others.
std::vector<VertexSet> conflict_rows(const GeodesicIndex& idx, int k, bool independent) {
  const int n = idx.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = idx.distances().far_from(v, k) & idx.graph().vertices();
    if (independent) rows[v] |= idx.graph().neighbors(v);
  }
  return rows;
}

VertexSet greedy_clique(const std::vector<VertexSet>& rows, int n) {
  VertexSet best;
  for (int s = 0; s < n; ++s) {
    VertexSet clique{s};
    VertexSet cand = rows[s];
    while (cand.any()) {
      // Keep the candidate with most conflicts inside the pool.
      int pick = -1;
      int score = -1;
      for (int w : cand) {
        const int c = rows[w].intersection_count(cand);
        if (c > score) {
          score = c;
          pick = w;
        }
      }
      clique.set(pick);
      cand &= rows[pick];
    }
    if (clique.count() > best.count()) best = clique;
  }
  return best;
}

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<bool> seen(g.order(), false);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::deque<int> q{root};
    seen[root] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      order.push_back(x);
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
    }
  }
  return order;
}

Coloring greedy(const GeodesicIndex& idx, int k, bool independent) {
  const Graph& g = idx.graph();
  std::vector<VertexSet> classes;
  for (int v : bfs_order(g)) {
    bool placed = false;
    for (auto& c : classes) {
      if (independent && c.intersects(g.neighbors(v))) continue;
      if (idx.can_add(c, v, k)) {
        c.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(VertexSet{v});
  }
  return Coloring::from_classes(g.order(), classes);
}

class KdmvColorer {
 public:
  enum class Outcome { Found, Refuted, Exhausted };

  KdmvColorer(const GeodesicIndex& idx, int k, bool independent, std::uint64_t budget, std::uint64_t& nodes)
      : idx_(idx),
        k_(k),
        n_(idx.order()),
        conflict_(conflict_rows(idx, k, independent)),
        order_(degree_order(idx.graph())),
        budget_(budget),
        nodes_(nodes) {}

  Outcome decide(int t) {
    t_ = t;
    classes_.assign(t, VertexSet{});
    color_.assign(n_, -1);
    forbid_.assign(static_cast<std::size_t>(n_) * t, 0);
    forbidden_count_.assign(n_, 0);
    max_used_ = -1;
    return assign(0);
  }

  Coloring coloring() const { return Coloring::from_labels(color_); }

 private:
  Outcome assign(int depth) {
    if (depth == n_) return Outcome::Found;
    const int v = order_[depth];
    const int limit = std::min(max_used_ + 1, t_ - 1);
    for (int c = 0; c <= limit; ++c) {
      if (forbid_[slot(v, c)]) continue;
      if (!idx_.can_add(classes_[c], v, k_)) continue;
      if (++nodes_ > budget_) return Outcome::Exhausted;

      const int saved_max = max_used_;
      max_used_ = std::max(max_used_, c);
      classes_[c].set(v);
      color_[v] = c;
      bool wiped = false;
      for (int w : conflict_[v]) {
        if (color_[w] >= 0) continue;
        if (forbid_[slot(w, c)]++ == 0 && ++forbidden_count_[w] == t_) wiped = true;
      }
      if (!wiped) {
        const Outcome r = assign(depth + 1);
        if (r != Outcome::Refuted) return r;
      }
      for (int w : conflict_[v]) {
        if (color_[w] >= 0) continue;
        if (--forbid_[slot(w, c)] == 0) --forbidden_count_[w];
      }
      color_[v] = -1;
      classes_[c].reset(v);
      max_used_ = saved_max;
    }
    return Outcome::Refuted;
  }

  std::size_t slot(int v, int c) const { return static_cast<std::size_t>(v) * t_ + c; }

  const GeodesicIndex& idx_;
  int k_;
  int n_;
  std::vector<VertexSet> conflict_;
  std::vector<int> order_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;

  int t_ = 0;
  std::vector<VertexSet> classes_;
  std::vector<int> color_;
  std::vector<std::uint16_t> forbid_;
  std::vector<int> forbidden_count_;
  int max_used_ = -1;
};

SolveResult solve_connected(const Graph& g, int k, const ChiOptions& opt) {
  const int n = g.order();
  SolveResult r;
  if (n == 1) {
    r.value = r.lower = r.upper = 1;
    r.coloring = Coloring::from_labels({0});
    return r;
  }
  k = std::min(k, n);
  GeodesicIndex idx(g);
  const Coloring upper = greedy(idx, k, opt.independent);
  const int u = upper.num_classes();

  int lower = std::max(1, greedy_clique(conflict_rows(idx, k, opt.independent), n).count());
  if (opt.use_mu_bound && !opt.independent && lower < u) {
    const auto mu = max_kdmv(g, k, opt.mu_budget);
    r.nodes += mu.nodes;
    if (mu.exact()) lower = std::max(lower, (n + mu.value - 1) / mu.value);
  }
  if (opt.use_domination_bound && lower < u) {
    const auto gk = gamma_k_exact(g, k, std::max<std::uint64_t>(opt.budget / 10, 1000));
    r.nodes += gk.nodes;
    lower = std::max(lower, gk.lower);
  }
  if (opt.use_packing_bound && k == 2 && lower < u) {
    const auto rho = rho2_exact(g, std::max<std::uint64_t>(opt.budget / 10, 1000));
    r.nodes += rho.nodes;
    lower = std::max(lower, rho.lower);
  }
  lower = std::min(lower, u);

  std::uint64_t search_nodes = 0;
  KdmvColorer colorer(idx, k, opt.independent, opt.budget, search_nodes);
  for (int t = lower; t < u; ++t) {
    const auto outcome = colorer.decide(t);
    if (outcome == KdmvColorer::Outcome::Found) {
      r.value = r.lower = r.upper = t;
      r.coloring = colorer.coloring();
      r.nodes += search_nodes;
      return r;
    }
    if (outcome == KdmvColorer::Outcome::Exhausted) {
      r.status = SolveStatus::BoundsOnly;
      r.lower = t;
      r.value = r.upper = u;
      r.coloring = upper;
      r.nodes += search_nodes;
      return r;
    }
  }
  r.value = r.lower = r.upper = u;
  r.coloring = upper;
  r.nodes += search_nodes;
  return r;
}

}  // namespace

Verification verify_kdmv_coloring(const Graph& g, int k, const Coloring& c) { return verify(g, k, c, false); }

Verification verify_independent_kdmv_coloring(const Graph& g, int k, const Coloring& c) {
  return verify(g, k, c, true);
}

SolveResult chi_mu_k_exact(const Graph& g, int k, const ChiOptions& options) {
  if (k < 1) throw DomainError("k must be positive");
  SolveResult total;
  if (g.order() == 0) {
    total.coloring = Coloring{};
    return total;
  }
  const auto comps = components(g);
  if (comps.size() == 1) return solve_connected(g, k, options);

  std::vector<int> labels(g.order(), -1);
  int offset = 0;
  for (const auto& comp : comps) {
    std::vector<int> original;
    const Graph sub = induced_subgraph(g, comp, &original);
    const auto r = solve_connected(sub, k, options);
    total.value += r.value;
    total.lower += r.lower;
    total.upper += r.upper;
    total.nodes += r.nodes;
    if (!r.exact()) total.status = SolveStatus::BoundsOnly;
    for (int i = 0; i < sub.order(); ++i) labels[original[i]] = offset + r.coloring->color(i);
    offset += r.coloring->num_classes();
  }
  total.coloring = Coloring::from_labels(labels);
  return total;
}

SolveResult chi_mu_k_exact(const Graph& g, int k, std::uint64_t budget) {
  ChiOptions opt;
  opt.budget = budget;
  return chi_mu_k_exact(g, k, opt);
}

SolveResult chi_i_mu2_exact(const Graph& g, std::uint64_t budget) {
  ChiOptions opt;
  opt.budget = budget;
  opt.independent = true;
  return chi_mu_k_exact(g, 2, opt);
}

Coloring greedy_kdmv_upper(const Graph& g, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (g.order() == 0) return Coloring{};
  return greedy(GeodesicIndex(g), std::min(k, g.order()), false);
}

VertexSet far_clique(const Graph& g, int k) {
  if (g.order() == 0) return VertexSet{};
  GeodesicIndex idx(g);
  return greedy_clique(conflict_rows(idx, k, false), g.order());
}

// ---------------------------------------------------------------------------

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {}

  SolveResult run() {
    SolveResult r;
    if (n_ == 0) {
      r.coloring = Coloring{};
      return r;
    }
    color_.assign(n_, -1);
    adjacent_count_.assign(static_cast<std::size_t>(n_) * n_, 0);
    saturation_.assign(n_, 0);

    // Clique lower bound and DSATUR-greedy upper bound.
    VertexSet cand = g_.vertices();
    for (int v : degree_order(g_))
      if (cand.contains(v)) {
        ++lower_;
        cand &= g_.neighbors(v);
      }
    best_ = n_ + 1;
    greedy_mode_ = true;
    search(0, 0);
    greedy_mode_ = false;
    if (best_ > lower_) search(0, 0);

    r.coloring = Coloring::from_labels(best_color_);
    r.value = r.upper = best_;
    r.lower = exhausted_ ? lower_ : best_;
    r.status = exhausted_ ? SolveStatus::BoundsOnly : SolveStatus::Exact;
    r.nodes = nodes_;
    return r;
  }

 private:
  // Returns true to stop the whole search.
  bool search(int colored, int used) {
    if (used >= best_) return false;
    if (colored == n_) {
      best_ = used;
      best_color_ = color_;
      return greedy_mode_ || best_ == lower_;
    }
    if (++nodes_ > budget_ && !greedy_mode_) {
      exhausted_ = true;
      return true;
    }
    int v = -1;
    for (int w = 0; w < n_; ++w) {
      if (color_[w] >= 0) continue;
      if (v < 0 || saturation_[w] > saturation_[v] ||
          (saturation_[w] == saturation_[v] && g_.degree(w) > g_.degree(v)))
        v = w;
    }
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (adjacent_count_[slot(v, c)] > 0) continue;
      place(v, c);
      const bool stop = search(colored + 1, std::max(used, c + 1));
      unplace(v, c);
      if (stop) return true;
    }
    return false;
  }

  void place(int v, int c) {
    color_[v] = c;
    for (int w : g_.neighbors(v))
      if (adjacent_count_[slot(w, c)]++ == 0) ++saturation_[w];
  }
  void unplace(int v, int c) {
    color_[v] = -1;
    for (int w : g_.neighbors(v))
      if (--adjacent_count_[slot(w, c)] == 0) --saturation_[w];
  }
  std::size_t slot(int v, int c) const { return static_cast<std::size_t>(v) * n_ + c; }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool greedy_mode_ = false;
  int lower_ = 0;
  int best_ = 0;
  std::vector<int> color_;
  std::vector<int> best_color_;
  std::vector<std::uint16_t> adjacent_count_;
  std::vector<int> saturation_;
};

}  // namespace

SolveResult chromatic_number_exact(const Graph& g, std::uint64_t budget) { return Dsatur(g, budget).run(); }

SolveResult clique_cover_theta(const Graph& g, std::uint64_t budget) {
  return chromatic_number_exact(complement(g), budget);
}

}  // namespace kdmv
