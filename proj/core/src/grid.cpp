#include "ncgeom/grid.hpp"

#include <set>

#include "ncgeom/errors.hpp"

namespace ncgeom {

SampleGrid SampleGrid::from_points(std::vector<std::vector<BigRational>> points,
                                   std::vector<BigRational> weights) {
  if (points.empty()) throw ValidationError("sample grid needs at least one point");
  if (points.size() != weights.size()) {
    throw DimensionMismatch("sample grid needs one weight per point");
  }
  std::size_t dim = points[0].size();
  if (dim == 0) throw DimensionMismatch("sample points need a coordinate");
  std::set<std::vector<BigRational>> seen;
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionMismatch("sample point dimension mismatch");
    if (!seen.insert(p).second) throw ValidationError("sample grid repeats a point");
  }
  for (const auto& w : weights) {
    if (!(w > 0)) throw ValidationError("sample weights must be positive");
  }
  SampleGrid g;
  g.points_ = std::move(points);
  g.weights_ = std::move(weights);
  return g;
}

SampleGrid SampleGrid::from_points(std::vector<std::vector<BigRational>> points) {
  std::vector<BigRational> w(points.size(), BigRational(1));
  return from_points(std::move(points), std::move(w));
}

SampleGrid SampleGrid::product(const Box& box, const std::vector<std::size_t>& counts) {
  if (!box.is_bounded()) throw ValidationError("product grid needs a bounded box");
  if (counts.size() != box.dim()) {
    throw DimensionMismatch("product grid needs one count per axis");
  }
  std::vector<std::vector<BigRational>> axes;
  BigRational cell(1);
  for (std::size_t k = 0; k < box.dim(); ++k) {
    if (counts[k] == 0) throw ValidationError("product grid counts must be positive");
    const Interval& iv = *box.axis(k);
    std::vector<BigRational> line;
    BigRational width = iv.hi - iv.lo;
    for (std::size_t j = 1; j <= counts[k]; ++j) {
      line.push_back(iv.lo + width * BigRational(j, counts[k] + 1));
    }
    cell *= width / BigRational(counts[k]);
    axes.push_back(std::move(line));
  }
  std::vector<std::vector<BigRational>> points;
  std::vector<std::size_t> idx(box.dim(), 0);
  while (true) {
    std::vector<BigRational> p;
    p.reserve(box.dim());
    for (std::size_t k = 0; k < box.dim(); ++k) p.push_back(axes[k][idx[k]]);
    points.push_back(std::move(p));
    std::size_t k = 0;
    while (k < box.dim()) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == box.dim()) break;
  }
  std::vector<BigRational> weights(points.size(), cell);
  return from_points(std::move(points), std::move(weights));
}

SampleGrid SampleGrid::merge(const SampleGrid& a, const SampleGrid& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("grids live in different spaces");
  std::vector<std::vector<BigRational>> points = a.points_;
  std::vector<BigRational> weights = a.weights_;
  std::set<std::vector<BigRational>> seen(a.points_.begin(), a.points_.end());
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (seen.count(b.points_[k])) continue;
    points.push_back(b.points_[k]);
    weights.push_back(b.weights_[k]);
  }
  return from_points(std::move(points), std::move(weights));
}

}  // namespace ncgeom
