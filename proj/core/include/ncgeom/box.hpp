#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgeom/number.hpp"

namespace ncgeom {

// Open interval (lo, hi) with exact rational endpoints, lo < hi.
struct Interval {
  BigRational lo;
  BigRational hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Open axis-aligned box in the base space.  An axis without an interval is
// the whole line, so `whole(m)` is the entire space.
class Box {
 public:
  static Box whole(std::size_t dim);
  static Box bounded(std::vector<Interval> axes);

  std::size_t dim() const { return axes_.size(); }
  bool is_bounded() const;
  const std::optional<Interval>& axis(std::size_t k) const { return axes_.at(k); }

  bool contains_point(const std::vector<BigRational>& p) const;
  // Is `other` a subset of this box?
  bool contains_box(const Box& other) const;
  // Open boxes intersect in an open box; empty intersection -> nullopt.
  std::optional<Box> intersect(const Box& other) const;

  friend bool operator==(const Box& a, const Box& b) { return a.axes_ == b.axes_; }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
  // Arbitrary total order so boxes can key ordered containers.
  friend bool operator<(const Box& a, const Box& b);

  std::string to_string() const;

 private:
  explicit Box(std::vector<std::optional<Interval>> axes) : axes_(std::move(axes)) {}

  std::vector<std::optional<Interval>> axes_;
};

// Exact decision whether the open parts jointly cover the open target box.
// Works on the arrangement induced by all endpoints: the target splits into
// finitely many open cells and lower-dimensional faces, each of which lies in
// one part or misses all of them uniformly.  Returns a witness point inside
// the target missed by every part, or nullopt when covered.  Requires all
// boxes bounded.
std::optional<std::vector<BigRational>> box_cover_gap(const Box& target,
                                                      const std::vector<Box>& parts);

inline bool box_union_covers(const Box& target, const std::vector<Box>& parts) {
  return !box_cover_gap(target, parts).has_value();
}

}  // namespace ncgeom
