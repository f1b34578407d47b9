#pragma once

#include <string_view>

#include "kdmv/graph.hpp"

namespace kdmv {

enum class ProductKind { Cartesian, Strong, Lexicographic };

std::string_view to_string(ProductKind kind);

/// Vertex (g, h) of a product has index g * h.order() + h.
constexpr int product_index(int g, int h, int h_order) { return g * h_order + h; }

/// Cartesian, strong or lexicographic product. Throws SizeError when either
/// factor is empty or the product would exceed the supported order.
Graph product(ProductKind kind, const Graph& g, const Graph& h);

/// The G-fiber through h (second coordinate fixed) or H-fiber through g.
VertexSet g_fiber(int g_order, int h_order, int h);
VertexSet h_fiber(int h_order, int g);

/// Same vertex set; uv is an edge iff d_G(u, v) == p.
Graph exact_distance_graph(const Graph& g, int p);

/// Attaches one leaf to every vertex: leaf of v is n + v.
Graph corona(const Graph& g);

}  // namespace kdmv
