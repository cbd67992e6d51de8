#include "ncgeom/box_presheaf.hpp"

#include <string>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

std::string point_to_string(const std::vector<BigRational>& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ", ";
    out += p[k].str();
  }
  out += ")";
  return out;
}

}  // namespace

BoxPresheaf::BoxPresheaf(std::size_t n, std::size_t nvars, Box domain)
    : n_(n), nvars_(nvars), domain_(std::move(domain)) {
  if (n_ == 0) throw DimensionMismatch("sections need a positive matrix size");
  if (domain_.dim() != nvars_) {
    throw DimensionMismatch("domain dimension must match the variable count");
  }
  if (!domain_.is_bounded()) {
    throw ValidationError("box presheaf needs a bounded global domain");
  }
}

void BoxPresheaf::check_section(const MatrixField& f) const {
  if (f.size() != n_ || f.nvars() != nvars_) {
    throw DimensionMismatch("section shape does not match the presheaf");
  }
  if (!domain_.contains_box(f.domain())) {
    throw NotASubset("section lives outside the global domain");
  }
}

MatrixField BoxPresheaf::restrict_section(const MatrixField& f, const Box& sub) const {
  check_section(f);
  return f.restrict(sub);
}

BoxGlueResult BoxPresheaf::glue(const Box& target, const std::vector<Box>& cover,
                                const std::vector<MatrixField>& sections) const {
  if (cover.size() != sections.size()) {
    throw DimensionMismatch("glue expects one section per cover box");
  }
  if (!domain_.contains_box(target)) {
    throw CoverNotInTopology("glue target is not a sub-box of the global domain");
  }
  for (std::size_t k = 0; k < cover.size(); ++k) {
    if (!target.contains_box(cover[k])) {
      throw CoverNotInTopology("cover box " + cover[k].to_string() +
                               " is not contained in the target " + target.to_string());
    }
    check_section(sections[k]);
    if (sections[k].domain() != cover[k]) {
      throw DimensionMismatch("section " + std::to_string(k) +
                              " is not defined on its cover box");
    }
  }
  if (auto gap = box_cover_gap(target, cover)) {
    throw CoverNotInTopology("cover misses the target near " + point_to_string(*gap));
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      auto overlap = cover[i].intersect(cover[j]);
      if (!overlap) continue;
      if (sections[i].restrict(*overlap) != sections[j].restrict(*overlap)) {
        return BoxGlueResult{GlueStatus::incompatible, std::nullopt, i, j};
      }
    }
  }
  // A compatible cover of a connected target forces all entry functions to
  // coincide outright: each nonempty overlap upgrades local agreement to
  // symbolic equality, and the overlap graph of a genuine box cover is
  // connected.  The glued section is the common function on the target.
  for (std::size_t k = 1; k < sections.size(); ++k) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (sections[k].entry(a, b) != sections[0].entry(a, b)) {
          return BoxGlueResult{GlueStatus::incompatible, std::nullopt, 0, k};
        }
      }
    }
  }
  std::vector<std::vector<RationalFunction>> rows(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) rows[a].push_back(sections[0].entry(a, b));
  }
  return BoxGlueResult{GlueStatus::glued, MatrixField::from_entries(std::move(rows), target),
                       0, 0};
}

bool BoxPresheaf::germs_equal(const MatrixField& f, const MatrixField& g,
                              const std::vector<BigRational>& point) const {
  check_section(f);
  check_section(g);
  if (!f.domain().contains_point(point) || !g.domain().contains_point(point)) {
    throw ValidationError("germ comparison needs the point inside both domains");
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (f.entry(a, b) != g.entry(a, b)) return false;
    }
  }
  return true;
}

std::optional<PresheafViolation> verify_presheaf(
    const BoxPresheaf& presheaf, const std::vector<Box>& opens,
    const std::vector<MatrixField>& sections) {
  for (const auto& box : opens) {
    if (!presheaf.domain().contains_box(box)) {
      throw NotASubset("verification family contains a box outside the domain");
    }
  }
  for (const auto& f : sections) {
    if (f.domain() != presheaf.domain()) {
      throw DimensionMismatch("verification sections must live on the global domain");
    }
  }
  for (const auto& f : sections) {
    if (f.restrict(presheaf.domain()) != f) {
      return PresheafViolation{"identity",
                               {presheaf.domain().to_string()},
                               "restriction to the full domain changed a section"};
    }
  }
  for (const auto& u : opens) {
    for (const auto& v : opens) {
      if (!u.contains_box(v)) continue;
      for (const auto& w : opens) {
        if (!v.contains_box(w)) continue;
        for (const auto& f : sections) {
          if (f.restrict(u).restrict(v).restrict(w) != f.restrict(u).restrict(w)) {
            return PresheafViolation{
                "functoriality",
                {u.to_string(), v.to_string(), w.to_string()},
                "restriction along the chain differs from the direct restriction"};
          }
        }
      }
      for (const auto& f : sections) {
        for (const auto& g : sections) {
          bool sum_ok = (f + g).restrict(u).restrict(v) ==
                        f.restrict(u).restrict(v) + g.restrict(u).restrict(v);
          bool prod_ok = convolve(f, g).restrict(u).restrict(v) ==
                         convolve(f.restrict(u).restrict(v), g.restrict(u).restrict(v));
          if (!sum_ok || !prod_ok) {
            return PresheafViolation{
                "homomorphism",
                {u.to_string(), v.to_string()},
                "restriction failed to respect the algebra operations"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ncgeom
