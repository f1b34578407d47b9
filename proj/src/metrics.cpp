#include "kdmv/metrics.hpp"

#include <algorithm>
#include <functional>

#include "kdmv/errors.hpp"

namespace kdmv {

int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int x = queue[head++];
      // No shorter cycle can close beyond this depth.
      if (best != kInfiniteGirth && 2 * dist[x] + 1 >= best) break;
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

GraphMetrics metrics(const Graph& g) { return metrics(g, all_pairs_distances(g)); }

GraphMetrics metrics(const Graph& g, const DistanceMatrix& dm) {
  GraphMetrics m;
  m.girth = girth(g);
  m.connected = is_connected(g);
  if (g.order() == 0) return m;
  int diam = 0;
  int rad = DistanceMatrix::kInf;
  for (int v = 0; v < g.order(); ++v) {
    int e = dm.eccentricity(v);
    diam = std::max(diam, e);
    rad = std::min(rad, e);
  }
  m.diameter = diam;
  m.radius = rad;
  return m;
}

CenterInfo center_info(const Graph& g) { return center_info(g, all_pairs_distances(g)); }

CenterInfo center_info(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw ConnectivityError("center info requires a connected nonempty graph");
  CenterInfo info;
  std::vector<int> ecc(n);
  info.radius = DistanceMatrix::kInf;
  for (int v = 0; v < n; ++v) {
    ecc[v] = dm.eccentricity(v);
    info.radius = std::min(info.radius, ecc[v]);
    info.diameter = std::max(info.diameter, ecc[v]);
  }
  for (int v = 0; v < n; ++v)
    if (ecc[v] == info.radius) info.center.set(v);
  for (int u = 0; u < n; ++u)
    for (int c : info.center)
      if (dm(u, c) == info.radius) {
        info.radial_vertices.set(u);
        break;
      }

  Graph cut = g;
  if (info.center.count() >= 2) {
    for (int a : info.center)
      for (int b : info.center)
        if (a < b && g.has_edge(a, b)) cut.remove_edge(a, b);
  } else {
    int c = info.center.first();
    for (int w : g.neighbors(c)) cut.remove_edge(c, w);
  }
  for (const auto& comp : components(cut))
    if (comp.intersects(info.radial_vertices)) ++info.deg_star;
  return info;
}

bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  if (s.empty()) return false;
  if (reachable(g, s.first(), s) != s) return false;
  const VertexSet outside = g.vertices() - s;
  for (int x : s)
    for (int y : s) {
      if (y <= x) continue;
      const int dxy = dm(x, y);
      for (int w : outside)
        if (dm(x, w) + dm(w, y) == dxy) return false;
    }
  return true;
}

bool is_convex(const Graph& g, const VertexSet& s) { return is_convex(g, all_pairs_distances(g), s); }

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw ConnectivityError("block decomposition requires a connected nonempty graph");
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back(VertexSet{0});
    out.is_block_graph = true;
    return out;
  }

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) out.cut_vertices.set(v);
          VertexSet block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.set(a);
            block.set(b);
            if (a == v && b == w) break;
          }
          out.blocks.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end());
  out.is_block_graph = std::all_of(out.blocks.begin(), out.blocks.end(),
                                   [&](const VertexSet& b) { return is_clique(g, b); });
  return out;
}

}  // namespace kdmv
