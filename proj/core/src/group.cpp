#include "ncgeom/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncgeom {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table)
    : table_(std::move(table)) {
  validate();
  std::size_t n = table_.size();
  // Locate the identity, then invert each element by table lookup.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (table_[e][a] != a || table_[a][e] != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group table has no identity element");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ValidationError("group element " + std::to_string(a) + " has no inverse");
    }
  }
}

void FiniteGroup::validate() const {
  std::size_t n = table_.size();
  if (n == 0) throw ValidationError("group table is empty");
  if (n > kMaxOrder) {
    throw ValidationError("group order " + std::to_string(n) + " exceeds the supported bound " +
                          std::to_string(kMaxOrder));
  }
  for (const auto& row : table_) {
    if (row.size() != n) throw ValidationError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw ValidationError("group table entry out of range");
    }
  }
  // Latin square: products with a fixed factor are bijections.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen_row[table_[a][b]]) throw ValidationError("group table row repeats an element");
      seen_row[table_[a][b]] = true;
      if (seen_col[table_[b][a]]) throw ValidationError("group table column repeats an element");
      seen_col[table_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw ValidationError("group table is not associative at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group needs positive order");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0) throw ValidationError("symmetric group needs positive degree");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t order = perms.size();
  if (order > kMaxOrder) {
    throw ValidationError("symmetric group order " + std::to_string(order) +
                          " exceeds the supported bound " + std::to_string(kMaxOrder));
  }
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> comp(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  }
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  if (a >= order() || b >= order()) throw ValidationError("group element out of range");
  return table_[a][b];
}

std::size_t FiniteGroup::inv(std::size_t a) const {
  if (a >= order()) throw ValidationError("group element out of range");
  return inverse_[a];
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

}  // namespace ncgeom
