#pragma once

#include <cstddef>
#include <vector>

#include "ncgeom/errors.hpp"

namespace ncgeom {

// Finite group given by its full multiplication table.  Elements are the
// indices 0..n-1; table[a][b] is the product a*b.  Construction validates the
// axioms outright (latin square, identity, inverses, associativity), so a
// live instance is always a genuine group.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 200;

  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);
  static FiniteGroup cyclic(std::size_t n);
  // Permutations of {0..n-1} in lexicographic order; composition acts left.
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;

  bool is_abelian() const;

 private:
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  void validate() const;

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

}  // namespace ncgeom
