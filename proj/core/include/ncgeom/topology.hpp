#pragma once

// Finite topological spaces on points {0, ..., n-1}.  Open sets are stored
// as bitmasks, which makes the defining closure properties (empty set, full
// set, pairwise unions and intersections) exhaustively checkable, and keeps
// the cover enumeration needed by the sheaf axiom cheap.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ncgeom {

class FiniteTopology {
 public:
  // `opens` lists the open sets as bitmasks over the points; order and
  // duplicates are normalized away.  Throws ValidationError unless the
  // family contains the empty set and the full set and is closed under
  // pairwise union and intersection.
  FiniteTopology(std::size_t npoints, std::vector<std::uint32_t> opens);

  static FiniteTopology discrete(std::size_t npoints);
  static FiniteTopology indiscrete(std::size_t npoints);

  std::size_t npoints() const { return npoints_; }
  std::uint32_t full_mask() const;
  // Sorted ascending; opens_[0] is always the empty set.
  const std::vector<std::uint32_t>& opens() const { return opens_; }

  bool is_open(std::uint32_t mask) const;
  // Position of `mask` in opens(); throws CoverNotInTopology if not open.
  std::size_t open_index(std::uint32_t mask) const;

  // Intersection of all opens containing `p`: the smallest open
  // neighborhood, which every finite topology has.
  std::uint32_t minimal_neighborhood(std::size_t p) const;

  // All antichains of opens (no member contained in another) whose union is
  // `target`.  Every cover refines to such an antichain with the same glue
  // data, so sweeping these suffices for the sheaf axiom.  For the empty set
  // this includes the empty cover.
  std::vector<std::vector<std::uint32_t>> antichain_covers(std::uint32_t target) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.npoints_ == b.npoints_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const FiniteTopology& a, const FiniteTopology& b) {
    return !(a == b);
  }

 private:
  std::size_t npoints_;
  std::vector<std::uint32_t> opens_;
};

// Every topology on {0, ..., n-1}, by brute force over families of subsets;
// n <= 4 keeps that search space at 2^16 families.  Counts: 1, 4, 29, 355
// for n = 1..4.
std::vector<FiniteTopology> all_topologies(std::size_t npoints);

// "{0,2,3}"-style rendering of a point-set bitmask, for error messages and
// reports.
std::string open_to_string(std::uint32_t mask, std::size_t npoints);

}  // namespace ncgeom
