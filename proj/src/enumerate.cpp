#include "kdmv/enumerate.hpp"

#include <algorithm>
#include <map>

#include "kdmv/distance.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/metrics.hpp"

namespace kdmv {
namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

// Stable refinement colors as hashes.
std::vector<std::uint64_t> refine(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> color(n);
  for (int v = 0; v < n; ++v) color[v] = mix(static_cast<std::uint64_t>(g.degree(v)) + 0x9e3779b97f4a7c15ULL);
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> nb;
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    for (int v = 0; v < n; ++v) {
      nb.clear();
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = mix(color[v]);
      for (auto c : nb) h = mix(h ^ (c + 0x632be59bd9b4e019ULL));
      next[v] = h;
    }
    color.swap(next);
    auto sorted = color;
    std::sort(sorted.begin(), sorted.end());
    const int now = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b), ca_(refine(a)), cb_(refine(b)) {}

  bool run() {
    const int n = a_.order();
    auto sa = ca_;
    auto sb = cb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // Rarest colors first, then stay adjacent to mapped vertices.
    std::map<std::uint64_t, int> freq;
    for (auto c : ca_) ++freq[c];
    std::vector<bool> placed(n, false);
    order_.clear();
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        int lv = 0;
        int lb = 0;
        for (int u : order_) {
          lv += a_.has_edge(u, v);
          lb += a_.has_edge(u, best);
        }
        if (std::make_pair(-lv, freq[ca_[v]]) < std::make_pair(-lb, freq[ca_[best]])) best = v;
      }
      placed[best] = true;
      order_.push_back(best);
    }
    map_.assign(n, -1);
    used_.assign(n, false);
    return extend(0);
  }

 private:
  bool extend(int depth) {
    if (depth == a_.order()) return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.order(); ++w) {
      if (used_[w] || cb_[w] != ca_[v]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int u = order_[i];
        ok = a_.has_edge(u, v) == b_.has_edge(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::uint64_t> ca_;
  std::vector<std::uint64_t> cb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::uint64_t refinement_hash(const Graph& g) {
  auto c = refine(g);
  std::sort(c.begin(), c.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()) * 1315423911ULL + g.size());
  for (auto x : c) h = mix(h ^ x);
  return h;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return Matcher(a, b).run();
}

bool IsoClassSet::insert(const Graph& g) {
  auto& bucket = buckets_[refinement_hash(g)];
  for (int idx : bucket)
    if (are_isomorphic(graphs_[idx], g)) return false;
  bucket.push_back(static_cast<int>(graphs_.size()));
  graphs_.push_back(g);
  return true;
}

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& base, const ExtensionFilter& admissible,
                                    const std::function<bool(const Graph&)>& accept) {
  IsoClassSet out;
  for (const Graph& g : base) {
    const int n = g.order();
    if (n >= 20) throw SizeError("vertex extension enumerates all subsets; order too large");
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) s.set(v);
      if (!admissible(g, s)) continue;
      Graph h(n + 1);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      for (int v : s) h.add_edge(v, n);
      if (accept && !accept(h)) continue;
      out.insert(h);
    }
  }
  return out.take();
}

namespace {

std::vector<Graph> build_up(int n, const ExtensionFilter& admissible, const std::function<bool(const Graph&)>& accept = {}) {
  if (n < 1) throw SpecError("graph order must be at least 1");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) level = extend_by_vertex(level, admissible, accept);
  return level;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  return build_up(n, [](const Graph&, const VertexSet& s) { return s.any(); });
}

std::vector<Graph> trees(int n) {
  return build_up(n, [](const Graph&, const VertexSet& s) { return s.count() == 1; });
}

std::vector<Graph> connected_girth_at_least(int n, int min_girth) {
  // A new vertex on s closes cycles of length d(x, y) + 2 for x, y in s.
  const Graph* last = nullptr;
  DistanceMatrix dm;
  return build_up(n, [&](const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    if (s.count() == 1) return true;
    if (last != &g || dm.order() != g.order()) {
      dm = all_pairs_distances(g);
      last = &g;
    }
    for (int x : s)
      for (int y : s)
        if (x < y && dm(x, y) + 2 < min_girth) return false;
    return true;
  });
}

std::vector<Graph> block_graphs(int n) {
  // Deleting a non-cut vertex of a block graph leaves a block graph.
  return build_up(
      n, [](const Graph& g, const VertexSet& s) { return s.any() && is_clique(g, s); },
      [](const Graph& h) { return blocks(h).is_block_graph; });
}

}  // namespace kdmv
