#include "kdmv/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "kdmv/chromatic.hpp"
#include "kdmv/distance.hpp"
#include "kdmv/errors.hpp"
#include "kdmv/metrics.hpp"
#include "kdmv/products.hpp"
#include "kdmv/visibility.hpp"

namespace kdmv {
namespace {

Coloring checked(const Graph& g, int k, Coloring c, const char* builder) {
  const auto v = verify_kdmv_coloring(g, k, c);
  if (!v.ok) {
    const auto& x = v.violations.front();
    throw std::logic_error(std::string(builder) + ": class " + std::to_string(x.cls) + " fails at pair (" +
                           std::to_string(x.u) + "," + std::to_string(x.v) + "): " + to_string(x.reason));
  }
  return c;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Graph path_graph(int n) { return generate(FamilySpec::path(n)); }
Graph cycle_graph(int n) { return generate(FamilySpec::cycle(n)); }

}  // namespace

std::optional<int> formula_chi_mu_k(const FamilySpec& spec, int k) {
  if (k < 1) return std::nullopt;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Path:
      if (p.size() == 1 && p[0] >= 1) return ceil_div(p[0], 2);
      return std::nullopt;
    case Family::Cycle:
      if (p.size() == 1 && p[0] >= 3) return p[0] <= 3 * k ? ceil_div(p[0], 3) : ceil_div(p[0], 2);
      return std::nullopt;
    case Family::Complete:
      if (p.size() == 1 && p[0] >= 1) return 1;
      return std::nullopt;
    case Family::Strong: {
      if (spec.operands.size() != 2) return std::nullopt;
      const auto& a = spec.operands[0];
      const auto& b = spec.operands[1];
      if (a.family != Family::Path || b.family != Family::Complete || a.params.size() != 1 || b.params.size() != 1)
        return std::nullopt;
      const int n = a.params[0];
      const int m = b.params[0];
      if (n < 4 || m < 2 || k < 2 || k > n - 2) return std::nullopt;
      const int eta = n / (k + 2);
      const int rest = n % (k + 2);
      if (rest == 0) return 2 * eta;
      if (rest <= 2) return 2 * eta + 1;
      return 2 * eta + 2;
    }
    case Family::Cartesian: {
      if (spec.operands.size() != 2) return std::nullopt;
      const auto& a = spec.operands[0];
      const auto& b = spec.operands[1];
      if (a.family != Family::Cycle || b.family != Family::Cycle || a.params.size() != 1 || b.params.size() != 1)
        return std::nullopt;
      const int m = a.params[0];
      const int n = b.params[0];
      if (k != 2 || m % 4 != 0 || n % 4 != 0 || m < 4 || n < 4) return std::nullopt;
      return m * n / 4;
    }
    default:
      break;
  }
  // Block graphs (trees included) once k reaches the diameter.
  const int order = spec_order(spec);
  if (order < 1 && spec.family != Family::Graph6 && spec.family != Family::File) return std::nullopt;
  Graph g;
  try {
    g = generate(spec);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (g.order() == 0 || !is_connected(g) || !blocks(g).is_block_graph) return std::nullopt;
  const int diam = metrics(g).diameter;
  if (k < diam) return std::nullopt;
  return ceil_div(diam + 1, 2);
}

Coloring color_path(int n, int k) {
  if (n < 1 || k < 1) throw SpecError("color_path needs n >= 1 and k >= 1");
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i / 2;
  return checked(path_graph(n), k, Coloring::from_labels(c), "color_path");
}

Coloring color_cycle(int n, int k) {
  if (n < 3 || k < 1) throw SpecError("color_cycle needs n >= 3 and k >= 1");
  std::vector<int> c(n);
  if (n <= 3 * k) {
    // f(v_i) = f(v_{m+i}) = i and f(v_{2m+i}) = i, 0-based here.
    const int m = ceil_div(n, 3);
    for (int i = 0; i < n; ++i) c[i] = i % m;
  } else {
    for (int i = 0; i < n; ++i) c[i] = i / 2;
  }
  return checked(cycle_graph(n), k, Coloring::from_labels(c), "color_cycle");
}

Coloring color_strong_path_complete(int n, int m, int k) {
  if (n < 4 || m < 2 || k < 2 || k > n - 2) throw SpecError("strong path-complete coloring needs n >= 4, m >= 2, 2 <= k <= n-2");
  std::vector<int> c(n * m);
  const int block = k + 2;
  const int eta = n / block;
  const int rest = n % block;
  // Two colors over `len` fibers starting at `start`.
  auto two_color = [&](int start, int len, int c1, int c2) {
    for (int pos = 0; pos < len; ++pos)
      for (int j = 0; j < m; ++j) {
        int col;
        if (pos == 0)
          col = c1;
        else if (pos == len - 1)
          col = c2;
        else
          col = j == 0 ? c2 : c1;
        c[(start + pos) * m + j] = col;
      }
  };
  for (int b = 0; b < eta; ++b) two_color(b * block, block, 2 * b, 2 * b + 1);
  const int tail = eta * block;
  if (rest == 1 || rest == 2) {
    for (int i = tail; i < n; ++i)
      for (int j = 0; j < m; ++j) c[i * m + j] = 2 * eta;
  } else if (rest >= 3) {
    two_color(tail, rest, 2 * eta, 2 * eta + 1);
  }
  const Graph g = product(ProductKind::Strong, path_graph(n), generate(FamilySpec::complete(m)));
  return checked(g, k, Coloring::from_labels(c), "color_strong_path_complete");
}

Coloring product_coloring_strong(const Graph& g, const Coloring& cg, const Graph& h, const Coloring& ch, int k) {
  if (cg.order() != g.order() || ch.order() != h.order()) throw DomainError("coloring size does not match its factor");
  if (!verify_kdmv_coloring(g, k, cg).ok) throw DomainError("first factor coloring is not kDMV");
  if (!verify_kdmv_coloring(h, k, ch).ok) throw DomainError("second factor coloring is not kDMV");
  const int nh = h.order();
  std::vector<int> c(g.order() * nh);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < nh; ++b) c[product_index(a, b, nh)] = cg.color(a) * ch.num_classes() + ch.color(b);
  return checked(product(ProductKind::Strong, g, h), k, Coloring::from_labels(c), "product_coloring_strong");
}

namespace {

Coloring lift_to_lex(const Graph& g, const Coloring& cg, const Graph& h, const char* builder) {
  const int nh = h.order();
  std::vector<int> c(g.order() * nh);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < nh; ++b) c[product_index(a, b, nh)] = cg.color(a);
  return checked(product(ProductKind::Lexicographic, g, h), 2, Coloring::from_labels(c), builder);
}

}  // namespace

Coloring lex_coloring_from_i2dmv(const Graph& g, const Coloring& partition, const Graph& h) {
  if (g.order() < 2 || !is_connected(g)) throw DomainError("lexicographic lift needs a connected G with at least two vertices");
  if (partition.order() != g.order()) throw DomainError("partition size does not match G");
  if (!verify_independent_kdmv_coloring(g, 2, partition).ok) throw DomainError("partition classes are not independent 2DMV sets");
  return lift_to_lex(g, partition, h, "lex_coloring_from_i2dmv");
}

Coloring lex_coloring_from_2dmv(const Graph& g, const Coloring& cg, const Graph& h) {
  if (g.order() == 0 || g.min_degree() < 2) throw DomainError("lexicographic lift needs minimum degree >= 2");
  if (girth(g) < 5) throw DomainError("lexicographic lift needs girth >= 5");
  if (cg.order() != g.order() || !verify_kdmv_coloring(g, 2, cg).ok) throw DomainError("coloring of G is not 2DMV");
  return lift_to_lex(g, cg, h, "lex_coloring_from_2dmv");
}

// ---------------------------------------------------------------------------

Coloring block_graph_coloring(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw DomainError("block graph coloring needs a connected graph");
  if (!blocks(g).is_block_graph) throw DomainError("graph is not a block graph");
  const auto dm = all_pairs_distances(g);
  const auto info = center_info(g, dm);
  const int d = info.diameter;
  const int r = info.radius;
  const int target = ceil_div(d + 1, 2);
  const int p = info.deg_star;
  if (p > target)
    throw ConditionError("deg*(C) = " + std::to_string(p) + " exceeds ceil((d+1)/2) = " + std::to_string(target));
  const int k = std::max(1, d - 1);
  if (n == 1) return checked(g, k, Coloring::from_labels({0}), "block_graph_coloring");

  const bool single = info.center.count() == 1;
  // Components around the center, radial ones first, each ordered by smallest vertex.
  Graph cut = g;
  if (!single) {
    for (int a : info.center)
      for (int b : info.center)
        if (a < b) cut.remove_edge(a, b);
  } else {
    const int c = info.center.first();
    for (int w : g.neighbors(c)) cut.remove_edge(c, w);
  }
  std::vector<VertexSet> radial;
  std::vector<VertexSet> other;
  for (const auto& comp : components(cut)) {
    if (single && comp == VertexSet{info.center.first()}) continue;
    (comp.intersects(info.radial_vertices) ? radial : other).push_back(comp);
  }
  std::vector<VertexSet> comps = radial;
  comps.insert(comps.end(), other.begin(), other.end());

  std::vector<int> level(n);
  for (int x = 0; x < n; ++x) {
    int best = DistanceMatrix::kInf;
    for (int c : info.center) best = std::min<int>(best, dm(x, c));
    level[x] = best;
  }
  std::vector<int> f(n, 0);
  // Colors are 1-based as in the construction; 0 means not yet colored.
  auto paint = [&](int j, int lvl, int color) {
    if (j < 1 || j > static_cast<int>(comps.size())) return;
    for (int x : comps[j - 1])
      if (level[x] == lvl && f[x] == 0) f[x] = color;
  };
  const int t = static_cast<int>(comps.size());
  if (!single) {
    for (int i = 1; i <= p; ++i) paint(i, r - 1, i);
    for (int i = 1; i <= p; ++i)
      for (int j = i + 1; j <= t; ++j) paint(j, r - 1 - i, i);
    for (int i = 2; i <= p; ++i)
      for (int j = 1; j < i; ++j) paint(j, r - i, i);
    if (p < r)
      for (int x = 0; x < n; ++x)
        if (f[x] == 0 && level[x] <= r - p - 1) f[x] = r - level[x];
  } else {
    const bool full = p == r + 1;
    for (int i = 1; i <= p; ++i) paint(i, r, i);
    for (int i = 1; i <= (full ? p - 2 : p - 1); ++i)
      for (int j = i + 1; j <= t; ++j) paint(j, r - i, i);
    for (int i = 2; i <= (full ? p - 1 : p); ++i)
      for (int j = 1; j < i; ++j) paint(j, r - i + 1, i);
    if (full) {
      f[info.center.first()] = p;
    } else {
      for (int x = 0; x < n; ++x)
        if (f[x] == 0 && level[x] <= r - p) f[x] = r - level[x] + 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (f[x] == 0) throw std::logic_error("block_graph_coloring left vertex " + std::to_string(x) + " uncolored");
  auto c = Coloring::from_labels(f);
  if (c.num_classes() != target)
    throw std::logic_error("block_graph_coloring used " + std::to_string(c.num_classes()) + " classes");
  return checked(g, k, std::move(c), "block_graph_coloring");
}

Coloring hypercube_neighborhood_coloring(int n, const std::vector<int>& d) {
  const Graph q = generate(FamilySpec::hypercube(n));
  std::vector<int> c(q.order(), -1);
  for (int v = 0; v < q.order(); ++v)
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0 || d[i] >= q.order()) throw DomainError("dominator outside Q_n");
      if (q.closed_neighborhood(d[i]).contains(v)) {
        c[v] = static_cast<int>(i);
        break;
      }
    }
  for (int v = 0; v < q.order(); ++v)
    if (c[v] < 0) throw DomainError("the given set does not dominate Q_n");
  return checked(q, 2, Coloring::from_labels(c), "hypercube_neighborhood_coloring");
}

VertexSet torus_eod_set(int m, int n) {
  if (m % 4 != 0 || n % 4 != 0 || n < 4 || m < n) throw SpecError("torus pattern needs m >= n >= 4 and m, n = 0 mod 4");
  VertexSet d;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = i % 4;
      const int b = j % 4;
      if ((a == 0 && (b == 0 || b == 1)) || (a == 2 && (b == 2 || b == 3))) d.set(i * n + j);
    }
  return d;
}

Coloring torus_eod_coloring(int m, int n) {
  const VertexSet d = torus_eod_set(m, n);
  const Graph g = product(ProductKind::Cartesian, cycle_graph(m), cycle_graph(n));
  std::vector<VertexSet> classes;
  for (int x : d) classes.push_back(g.neighbors(x));
  // from_classes rejects overlaps and gaps, so this also checks efficiency.
  return checked(g, 2, Coloring::from_classes(g.order(), classes), "torus_eod_coloring");
}

Coloring tree_half_coloring(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw DomainError("tree_half_coloring needs a connected graph");
  // BFS spanning tree from vertex 0.
  Graph tree(n);
  {
    std::vector<bool> seen(n, false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          tree.add_edge(x, y);
          q.push_back(y);
        }
    }
  }
  VertexSet alive = g.vertices();
  std::vector<int> color(n, -1);
  int next = 0;
  auto bfs = [&](int src, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(n, -1);
    parent.assign(n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    int far = src;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      if (dist[x] > dist[far] || (dist[x] == dist[far] && x < far)) far = x;
      for (int y : tree.neighbors(x) & alive)
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        }
    }
    return far;
  };
  std::vector<int> dist;
  std::vector<int> parent;
  while (true) {
    const int size = alive.count();
    if (size <= 2) {
      for (int v : alive) color[v] = next;
      if (size > 0) ++next;
      break;
    }
    const int root = bfs(alive.first(), dist, parent);
    const int v = bfs(root, dist, parent);
    if (dist[v] <= 2) {
      // A star: leaves in one class, center in another.
      int center = -1;
      for (int x : alive)
        if ((tree.neighbors(x) & alive).count() == size - 1) center = x;
      for (int x : alive)
        if (x != center) color[x] = next;
      color[center] = next + 1;
      next += 2;
      break;
    }
    const int u = parent[v];
    int w = -1;
    for (int x : tree.neighbors(u) & alive)
      if (x != v && x != parent[u]) {
        w = x;
        break;
      }
    if (w >= 0) {
      color[v] = color[w] = next++;
      alive.reset(v);
      alive.reset(w);
    } else {
      color[u] = color[v] = next++;
      alive.reset(u);
      alive.reset(v);
    }
  }
  return checked(g, 2, Coloring::from_labels(color), "tree_half_coloring");
}

std::optional<std::vector<Edge>> find_perfect_matching(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  std::vector<int> mate(n, -1);
  std::function<bool()> solve = [&]() {
    int x = -1;
    for (int v = 0; v < n; ++v)
      if (mate[v] < 0) {
        x = v;
        break;
      }
    if (x < 0) return true;
    for (int y : g.neighbors(x)) {
      if (mate[y] >= 0) continue;
      mate[x] = y;
      mate[y] = x;
      if (solve()) return true;
      mate[x] = mate[y] = -1;
    }
    return false;
  };
  if (!solve()) return std::nullopt;
  std::vector<Edge> m;
  for (int v = 0; v < n; ++v)
    if (v < mate[v]) m.emplace_back(v, mate[v]);
  return m;
}

const int (&p4_c4_pattern())[4][4] {
  static const int pattern[4][4] = {{4, 4, 1, 4}, {4, 1, 2, 1}, {3, 2, 1, 2}, {3, 3, 2, 3}};
  return pattern;
}

Coloring cartesian_corona_c4_coloring(const Graph& g, std::optional<std::vector<Edge>> matching) {
  const int n = g.order();
  if (!matching) matching = find_perfect_matching(g);
  if (!matching) throw DomainError("graph has no perfect matching");
  VertexSet covered;
  for (auto [a, b] : *matching) {
    if (!g.has_edge(a, b) || covered.contains(a) || covered.contains(b)) throw DomainError("not a matching of G");
    covered.set(a);
    covered.set(b);
  }
  if (covered.count() != n) throw DomainError("matching is not perfect");
  const Graph host = product(ProductKind::Cartesian, corona(g), cycle_graph(4));
  std::vector<int> c(host.order(), -1);
  const auto& pattern = p4_c4_pattern();
  int base = 0;
  for (auto [a, b] : *matching) {
    const int pos[4] = {n + a, a, b, n + b};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c[product_index(pos[i], j, 4)] = base + pattern[i][j];
    base += 4;
  }
  return checked(host, 2, Coloring::from_labels(c), "cartesian_corona_c4_coloring");
}

}  // namespace kdmv
