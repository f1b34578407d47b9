#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdmv/vertex_set.hpp"

namespace kdmv {

/// Total vertex -> class map with classes numbered 0..t-1 in order of their
/// smallest member.
class Coloring {
 public:
  Coloring() = default;

  /// Any integer labels; equal labels share a class.
  static Coloring from_labels(const std::vector<int>& labels);
  /// Classes must be disjoint and cover 0..n-1; empty classes are dropped.
  static Coloring from_classes(int n, const std::vector<VertexSet>& classes);

  int order() const { return static_cast<int>(color_.size()); }
  int num_classes() const { return classes_; }
  int color(int v) const { return color_[v]; }
  const std::vector<int>& colors() const { return color_; }
  std::vector<VertexSet> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> color_;
  int classes_ = 0;
};

enum class SolveStatus { Exact, BoundsOnly };

std::string to_string(SolveStatus s);

/// Output of every exact solver. For minimization problems `value` equals
/// `upper` and the witness achieves it; for maximization `value` equals
/// `lower`. Exact implies lower == upper == value.
struct SolveResult {
  int value = 0;
  int lower = 0;
  int upper = 0;
  SolveStatus status = SolveStatus::Exact;
  std::uint64_t nodes = 0;
  std::optional<Coloring> coloring;
  std::optional<VertexSet> set;

  bool exact() const { return status == SolveStatus::Exact; }
};

/// Default node budget of the solvers.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace kdmv
