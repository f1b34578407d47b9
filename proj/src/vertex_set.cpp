#include "kdmv/vertex_set.hpp"

#include "kdmv/errors.hpp"

namespace kdmv {

VertexSet VertexSet::full(int n) {
  if (n < 0 || n > kMaxVertices) throw SizeError("vertex count out of range: " + std::to_string(n));
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
    s.words_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return s;
}

VertexSet VertexSet::from(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.set(v);
  return s;
}

int VertexSet::next(int v) const {
  ++v;
  if (v >= kMaxVertices) return -1;
  int i = v >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w) return (i << 6) + std::countr_zero(w);
    if (++i == kWords) return -1;
    w = words_[i];
  }
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  // The first differing bit decides: whoever owns it has the smaller list.
  for (int i = 0; i < VertexSet::kWords; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) s += ',';
    s += std::to_string(v);
    first_item = false;
  }
  return s + "}";
}

}  // namespace kdmv
