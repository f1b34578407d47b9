#include "kdmv/coloring.hpp"

#include <unordered_map>

#include "kdmv/errors.hpp"

namespace kdmv {

Coloring Coloring::from_labels(const std::vector<int>& labels) {
  Coloring c;
  c.color_.resize(labels.size());
  std::unordered_map<int, int> rename;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = rename.emplace(labels[v], c.classes_);
    if (fresh) ++c.classes_;
    c.color_[v] = it->second;
  }
  return c;
}

Coloring Coloring::from_classes(int n, const std::vector<VertexSet>& classes) {
  std::vector<int> labels(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int v : classes[i]) {
      if (v >= n) throw DomainError("color class member " + std::to_string(v) + " out of range");
      if (labels[v] >= 0) throw DomainError("vertex " + std::to_string(v) + " lies in two color classes");
      labels[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n; ++v)
    if (labels[v] < 0) throw DomainError("vertex " + std::to_string(v) + " is uncolored");
  return from_labels(labels);
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(classes_);
  for (int v = 0; v < order(); ++v) out[color_[v]].set(v);
  return out;
}

std::string to_string(SolveStatus s) { return s == SolveStatus::Exact ? "Exact" : "BoundsOnly"; }

}  // namespace kdmv
