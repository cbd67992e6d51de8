#include "ncgeom/box.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"

namespace ncgeom {

Box Box::whole(std::size_t dim) {
  if (dim == 0) throw DimensionMismatch("box dimension must be positive");
  return Box(std::vector<std::optional<Interval>>(dim));
}

Box Box::bounded(std::vector<Interval> axes) {
  if (axes.empty()) throw DimensionMismatch("box dimension must be positive");
  std::vector<std::optional<Interval>> a;
  a.reserve(axes.size());
  for (auto& iv : axes) {
    if (!(iv.lo < iv.hi)) {
      throw ValidationError("box interval needs lo < hi, got (" + iv.lo.str() + ", " +
                            iv.hi.str() + ")");
    }
    a.emplace_back(std::move(iv));
  }
  return Box(std::move(a));
}

bool Box::is_bounded() const {
  return std::all_of(axes_.begin(), axes_.end(),
                     [](const auto& a) { return a.has_value(); });
}

bool Box::contains_point(const std::vector<BigRational>& p) const {
  if (p.size() != axes_.size()) throw DimensionMismatch("point dimension mismatch");
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (!axes_[k]) continue;
    if (!(axes_[k]->lo < p[k] && p[k] < axes_[k]->hi)) return false;
  }
  return true;
}

bool Box::contains_box(const Box& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("box dimension mismatch");
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (!axes_[k]) continue;
    if (!other.axes_[k]) return false;
    if (other.axes_[k]->lo < axes_[k]->lo || axes_[k]->hi < other.axes_[k]->hi) return false;
  }
  return true;
}

std::optional<Box> Box::intersect(const Box& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("box dimension mismatch");
  std::vector<std::optional<Interval>> out(axes_.size());
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (!axes_[k]) {
      out[k] = other.axes_[k];
      continue;
    }
    if (!other.axes_[k]) {
      out[k] = axes_[k];
      continue;
    }
    BigRational lo = std::max(axes_[k]->lo, other.axes_[k]->lo);
    BigRational hi = std::min(axes_[k]->hi, other.axes_[k]->hi);
    if (!(lo < hi)) return std::nullopt;
    out[k] = Interval{std::move(lo), std::move(hi)};
  }
  return Box(std::move(out));
}

bool operator<(const Box& a, const Box& b) {
  if (a.axes_.size() != b.axes_.size()) return a.axes_.size() < b.axes_.size();
  for (std::size_t k = 0; k < a.axes_.size(); ++k) {
    bool ba = a.axes_[k].has_value();
    bool bb = b.axes_[k].has_value();
    if (ba != bb) return !ba;  // unbounded axis sorts first
    if (!ba) continue;
    if (a.axes_[k]->lo != b.axes_[k]->lo) return a.axes_[k]->lo < b.axes_[k]->lo;
    if (a.axes_[k]->hi != b.axes_[k]->hi) return a.axes_[k]->hi < b.axes_[k]->hi;
  }
  return false;
}

std::string Box::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (k) out += "x";
    if (axes_[k]) {
      out += "(" + axes_[k]->lo.str() + "," + axes_[k]->hi.str() + ")";
    } else {
      out += "R";
    }
  }
  return out;
}

namespace {

// One piece of the 1-d arrangement: either a breakpoint or an open interval
// between consecutive breakpoints.
struct Piece {
  bool is_point;
  BigRational a;  // the point, or the interval's left end
  BigRational b;  // the interval's right end (unused for points)
};

std::vector<Piece> axis_pieces(const Interval& target, const std::vector<Box>& parts,
                               std::size_t k) {
  std::vector<BigRational> cuts{target.lo, target.hi};
  for (const Box& p : parts) {
    const auto& ax = p.axis(k);
    if (ax->lo > target.lo && ax->lo < target.hi) cuts.push_back(ax->lo);
    if (ax->hi > target.lo && ax->hi < target.hi) cuts.push_back(ax->hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> pieces;
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    pieces.push_back(Piece{false, cuts[t], cuts[t + 1]});
    if (t + 2 < cuts.size()) pieces.push_back(Piece{true, cuts[t + 1], cuts[t + 1]});
  }
  return pieces;
}

bool piece_inside(const Piece& pc, const Interval& ax) {
  if (pc.is_point) return ax.lo < pc.a && pc.a < ax.hi;
  return !(pc.a < ax.lo) && !(ax.hi < pc.b);
}

}  // namespace

std::optional<std::vector<BigRational>> box_cover_gap(const Box& target,
                                                      const std::vector<Box>& parts) {
  if (!target.is_bounded()) throw ValidationError("cover check requires a bounded target box");
  for (const Box& p : parts) {
    if (p.dim() != target.dim()) throw DimensionMismatch("cover part dimension mismatch");
    if (!p.is_bounded()) throw ValidationError("cover check requires bounded parts");
  }

  std::vector<std::vector<Piece>> axes;
  axes.reserve(target.dim());
  for (std::size_t k = 0; k < target.dim(); ++k) {
    axes.push_back(axis_pieces(*target.axis(k), parts, k));
  }

  // Walk the cartesian product of per-axis pieces.
  std::vector<std::size_t> idx(target.dim(), 0);
  while (true) {
    bool covered = false;
    for (const Box& p : parts) {
      bool inside = true;
      for (std::size_t k = 0; k < target.dim(); ++k) {
        if (!piece_inside(axes[k][idx[k]], *p.axis(k))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      std::vector<BigRational> witness;
      witness.reserve(target.dim());
      for (std::size_t k = 0; k < target.dim(); ++k) {
        const Piece& pc = axes[k][idx[k]];
        witness.push_back(pc.is_point ? pc.a : (pc.a + pc.b) / 2);
      }
      return witness;
    }
    std::size_t k = 0;
    while (k < target.dim()) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == target.dim()) break;
  }
  return std::nullopt;
}

}  // namespace ncgeom
