#include "kdmv/products.hpp"

#include "kdmv/distance.hpp"
#include "kdmv/errors.hpp"

namespace kdmv {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian:
      return "cartesian";
    case ProductKind::Strong:
      return "strong";
    case ProductKind::Lexicographic:
      return "lex";
  }
  return "?";
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng < 1 || nh < 1) throw SizeError("product factors must be nonempty");
  if (ng * nh > VertexSet::kMaxVertices)
    throw SizeError("product order " + std::to_string(ng * nh) + " exceeds supported maximum");

  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = std::string(to_string(kind)) + "(" + g.name() + "," + h.name() + ")";
  Graph p(ng * nh, std::move(name));
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) {
      const int x = product_index(a, b, nh);
      for (int a2 = a; a2 < ng; ++a2) {
        const bool same_g = a2 == a;
        const bool adj_g = g.has_edge(a, a2);
        for (int b2 = same_g ? b + 1 : 0; b2 < nh; ++b2) {
          const bool same_h = b2 == b;
          const bool adj_h = h.has_edge(b, b2);
          bool edge = false;
          switch (kind) {
            case ProductKind::Cartesian:
              edge = (same_g && adj_h) || (adj_g && same_h);
              break;
            case ProductKind::Strong:
              edge = (same_g && adj_h) || (adj_g && same_h) || (adj_g && adj_h);
              break;
            case ProductKind::Lexicographic:
              edge = adj_g || (same_g && adj_h);
              break;
          }
          if (edge) p.add_edge(x, product_index(a2, b2, nh));
        }
      }
    }
  }
  return p;
}

VertexSet g_fiber(int g_order, int h_order, int h) {
  VertexSet s;
  for (int a = 0; a < g_order; ++a) s.set(product_index(a, h, h_order));
  return s;
}

VertexSet h_fiber(int h_order, int g) {
  VertexSet s;
  for (int b = 0; b < h_order; ++b) s.set(product_index(g, b, h_order));
  return s;
}

Graph exact_distance_graph(const Graph& g, int p) {
  if (p < 1) throw SpecError("exact distance graph needs p >= 1");
  const auto dm = all_pairs_distances(g);
  Graph out(g.order(), g.name().empty() ? std::string{} : g.name() + "^[#" + std::to_string(p) + "]");
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (dm(u, v) == p) out.add_edge(u, v);
  return out;
}

Graph corona(const Graph& g) {
  const int n = g.order();
  if (2 * n > VertexSet::kMaxVertices) throw SizeError("corona order exceeds supported maximum");
  Graph c(2 * n, g.name().empty() ? std::string{} : "corona(" + g.name() + ")");
  for (auto [u, v] : g.edges()) c.add_edge(u, v);
  for (int v = 0; v < n; ++v) c.add_edge(v, n + v);
  return c;
}

}  // namespace kdmv
