#include "ncgeom/topology.hpp"

#include <algorithm>
#include <string>

#include "ncgeom/errors.hpp"

namespace ncgeom {

std::string open_to_string(std::uint32_t mask, std::size_t npoints) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < npoints; ++p) {
    if ((mask >> p) & 1u) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
  }
  out += "}";
  return out;
}

FiniteTopology::FiniteTopology(std::size_t npoints, std::vector<std::uint32_t> opens)
    : npoints_(npoints), opens_(std::move(opens)) {
  if (npoints_ > 20) {
    throw ValidationError("finite topology supports at most 20 points");
  }
  std::uint32_t full = (npoints_ >= 32) ? ~0u : ((1u << npoints_) - 1u);
  for (std::uint32_t m : opens_) {
    if ((m & ~full) != 0) {
      throw ValidationError("open set mentions a point outside the space");
    }
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.empty() || opens_.front() != 0u) {
    throw ValidationError("topology must contain the empty set");
  }
  if (opens_.back() != full) {
    throw ValidationError("topology must contain the full point set");
  }
  for (std::uint32_t a : opens_) {
    for (std::uint32_t b : opens_) {
      if (!is_open(a | b)) {
        throw ValidationError("family not closed under union: " +
                              open_to_string(a, npoints_) + " with " +
                              open_to_string(b, npoints_));
      }
      if (!is_open(a & b)) {
        throw ValidationError("family not closed under intersection: " +
                              open_to_string(a, npoints_) + " with " +
                              open_to_string(b, npoints_));
      }
    }
  }
}

FiniteTopology FiniteTopology::discrete(std::size_t npoints) {
  std::uint32_t full = (1u << npoints) - 1u;
  std::vector<std::uint32_t> opens;
  for (std::uint32_t m = 0; m <= full; ++m) opens.push_back(m);
  return FiniteTopology(npoints, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t npoints) {
  std::uint32_t full = (1u << npoints) - 1u;
  return FiniteTopology(npoints, {0u, full});
}

std::uint32_t FiniteTopology::full_mask() const { return opens_.back(); }

bool FiniteTopology::is_open(std::uint32_t mask) const {
  return std::binary_search(opens_.begin(), opens_.end(), mask);
}

std::size_t FiniteTopology::open_index(std::uint32_t mask) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), mask);
  if (it == opens_.end() || *it != mask) {
    throw CoverNotInTopology("set " + open_to_string(mask, npoints_) +
                             " is not open in this topology");
  }
  return static_cast<std::size_t>(it - opens_.begin());
}

std::uint32_t FiniteTopology::minimal_neighborhood(std::size_t p) const {
  if (p >= npoints_) throw ValidationError("point index out of range");
  std::uint32_t acc = full_mask();
  for (std::uint32_t m : opens_) {
    if ((m >> p) & 1u) acc &= m;
  }
  return acc;
}

std::vector<std::vector<std::uint32_t>> FiniteTopology::antichain_covers(
    std::uint32_t target) const {
  if (!is_open(target)) {
    throw CoverNotInTopology("cover target " + open_to_string(target, npoints_) +
                             " is not open in this topology");
  }
  // Candidates: nonempty opens strictly inside the target, plus the target
  // itself.  The empty set never helps a cover and only inflates the sweep.
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t m : opens_) {
    if (m != 0u && (m & ~target) == 0u) candidates.push_back(m);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> chosen;
  // Depth-first over candidates in ascending order; every antichain whose
  // union hits the target exactly is recorded once, on entry.  Recursion
  // continues past a hit because an incomparable open can extend a covering
  // antichain into a different, equally valid cover.  For the empty target
  // this yields exactly the empty family.
  auto recurse = [&](auto&& self, std::size_t begin, std::uint32_t covered) -> void {
    if (covered == target) out.push_back(chosen);
    for (std::size_t k = begin; k < candidates.size(); ++k) {
      std::uint32_t m = candidates[k];
      bool comparable = false;
      for (std::uint32_t c : chosen) {
        if ((c & m) == c || (c & m) == m) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.push_back(m);
      self(self, k + 1, covered | m);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0u);
  return out;
}

std::vector<FiniteTopology> all_topologies(std::size_t npoints) {
  if (npoints == 0 || npoints > 4) {
    throw ValidationError("exhaustive topology enumeration is limited to 1..4 points");
  }
  std::uint32_t full = (1u << npoints) - 1u;
  std::size_t nsubsets = std::size_t{1} << npoints;
  std::uint32_t family_limit = 1u << nsubsets;  // families of subsets, as bitmasks
  std::vector<FiniteTopology> out;
  for (std::uint32_t fam = 0; fam < family_limit; ++fam) {
    if (!(fam & 1u)) continue;                          // must contain the empty set
    if (!((fam >> full) & 1u)) continue;                // must contain the full set
    bool closed = true;
    for (std::size_t a = 0; a < nsubsets && closed; ++a) {
      if (!((fam >> a) & 1u)) continue;
      for (std::size_t b = a + 1; b < nsubsets; ++b) {
        if (!((fam >> b) & 1u)) continue;
        if (!((fam >> (a | b)) & 1u) || !((fam >> (a & b)) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<std::uint32_t> opens;
    for (std::size_t s = 0; s < nsubsets; ++s) {
      if ((fam >> s) & 1u) opens.push_back(static_cast<std::uint32_t>(s));
    }
    out.emplace_back(npoints, std::move(opens));
  }
  return out;
}

}  // namespace ncgeom
