#pragma once

#include <vector>

#include "ncgeom/box.hpp"
#include "ncgeom/number.hpp"

namespace ncgeom {

// Finite weighted sample of base points with exact rational coordinates and
// positive weights.  Grids stand in for the measured base space: operator
// fields are evaluated over them, norms are suprema over them, and inner
// products are weighted sums.
class SampleGrid {
 public:
  static SampleGrid from_points(std::vector<std::vector<BigRational>> points,
                                std::vector<BigRational> weights);
  // Unit weights.
  static SampleGrid from_points(std::vector<std::vector<BigRational>> points);
  // Regular interior grid of a bounded box: per axis, `counts[k]` equally
  // spaced points strictly inside the interval; weights are the cell
  // volumes.
  static SampleGrid product(const Box& box, const std::vector<std::size_t>& counts);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_[0].size(); }
  const std::vector<BigRational>& point(std::size_t k) const { return points_.at(k); }
  const BigRational& weight(std::size_t k) const { return weights_.at(k); }

  // Union of two grids over the same space; a point present in both keeps
  // the weight from `a`.  The result refines both inputs as a sample set.
  static SampleGrid merge(const SampleGrid& a, const SampleGrid& b);

  friend bool operator==(const SampleGrid& a, const SampleGrid& b) {
    return a.points_ == b.points_ && a.weights_ == b.weights_;
  }

 private:
  SampleGrid() = default;

  std::vector<std::vector<BigRational>> points_;
  std::vector<BigRational> weights_;
};

}  // namespace ncgeom
