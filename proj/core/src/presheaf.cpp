#include "ncgeom/presheaf.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

const GaussianRational kZero(0);

std::vector<std::size_t> points_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < 32; ++p) {
    if ((mask >> p) & 1u) out.push_back(p);
  }
  return out;
}

Matrix<GaussianRational> basis_vector(std::size_t dim, std::size_t i) {
  auto v = Matrix<GaussianRational>::zeros(dim, 1, kZero);
  v.at(i, 0) = GaussianRational(1);
  return v;
}

// Left inverse of a full-column-rank matrix through its Hermitian Gram
// matrix; multiplying by it expresses vectors of the column span in basis
// coordinates, which is the only way sheafify uses it.
Matrix<GaussianRational> left_inverse(const Matrix<GaussianRational>& b) {
  if (b.cols() == 0) return Matrix<GaussianRational>::zeros(0, b.rows(), kZero);
  auto gram = b.conj_transpose() * b;
  auto inv = inverse(gram);
  if (!inv) {
    throw ValidationError("coherent-family basis lost rank");
  }
  return *inv * b.conj_transpose();
}

}  // namespace

// --- section algebras -------------------------------------------------------

SectionAlgebra SectionAlgebra::zero() { return SectionAlgebra{0, {}}; }

SectionAlgebra SectionAlgebra::scalars() {
  SectionAlgebra a{1, {Matrix<GaussianRational>::identity(1, kZero)}};
  return a;
}

SectionAlgebra SectionAlgebra::functions(std::size_t npoints) {
  SectionAlgebra a{npoints, {}};
  for (std::size_t i = 0; i < npoints; ++i) {
    auto m = Matrix<GaussianRational>::zeros(npoints, npoints, kZero);
    m.at(i, i) = GaussianRational(1);
    a.left_mult.push_back(std::move(m));
  }
  return a;
}

SectionAlgebra SectionAlgebra::matrix_algebra(std::size_t n) {
  SectionAlgebra alg{n * n, {}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // E_ab E_cd = [b == c] E_ad.
      auto m = Matrix<GaussianRational>::zeros(n * n, n * n, kZero);
      for (std::size_t d = 0; d < n; ++d) {
        m.at(a * n + d, b * n + d) = GaussianRational(1);
      }
      alg.left_mult.push_back(std::move(m));
    }
  }
  return alg;
}

void SectionAlgebra::validate() const {
  if (left_mult.size() != dim) {
    throw ValidationError("section algebra needs one multiplication matrix per basis vector");
  }
  for (const auto& m : left_mult) {
    if (m.rows() != dim || m.cols() != dim) {
      throw ValidationError("section algebra multiplication matrix has wrong shape");
    }
  }
}

Matrix<GaussianRational> SectionAlgebra::product(
    const Matrix<GaussianRational>& x, const Matrix<GaussianRational>& y) const {
  if (x.rows() != dim || x.cols() != 1 || y.rows() != dim || y.cols() != 1) {
    throw DimensionMismatch("section product expects coefficient columns");
  }
  auto acc = Matrix<GaussianRational>::zeros(dim, 1, kZero);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x.at(i, 0).is_zero()) continue;
    auto term = left_mult[i] * y;
    term.scale(x.at(i, 0));
    acc = acc + term;
  }
  return acc;
}

// --- presheaf construction --------------------------------------------------

TabulatedPresheaf::TabulatedPresheaf(
    FiniteTopology topo, std::vector<SectionAlgebra> spaces,
    std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>>
        restrictions)
    : topo_(std::move(topo)), spaces_(std::move(spaces)) {
  const auto& opens = topo_.opens();
  if (spaces_.size() != opens.size()) {
    throw ValidationError("expected one section space per open set");
  }
  for (const auto& s : spaces_) s.validate();
  restr_.assign(opens.size(),
                std::vector<std::optional<Matrix<GaussianRational>>>(opens.size()));
  for (const auto& [key, m] : restrictions) {
    auto [from, to] = key;
    if (!topo_.is_open(from) || !topo_.is_open(to) || (to & ~from) != 0u) {
      throw ValidationError("restriction declared for " +
                            open_to_string(from, topo_.npoints()) + " -> " +
                            open_to_string(to, topo_.npoints()) +
                            ", which is not an inclusion of opens");
    }
    std::size_t iu = topo_.open_index(from);
    std::size_t iv = topo_.open_index(to);
    if (m.rows() != spaces_[iv].dim || m.cols() != spaces_[iu].dim) {
      throw ValidationError("restriction matrix for " +
                            open_to_string(from, topo_.npoints()) + " -> " +
                            open_to_string(to, topo_.npoints()) + " has wrong shape");
    }
    restr_[iu][iv] = m;
  }
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    if (!restr_[iu][iu]) {
      restr_[iu][iu] = Matrix<GaussianRational>::identity(spaces_[iu].dim, kZero);
    }
    for (std::size_t iv = 0; iv < opens.size(); ++iv) {
      bool included = (opens[iv] & ~opens[iu]) == 0u;
      if (included && !restr_[iu][iv]) {
        throw ValidationError("missing restriction " +
                              open_to_string(opens[iu], topo_.npoints()) + " -> " +
                              open_to_string(opens[iv], topo_.npoints()));
      }
    }
  }
}

std::size_t TabulatedPresheaf::index_of(std::uint32_t open) const {
  return topo_.open_index(open);
}

std::size_t TabulatedPresheaf::dim(std::uint32_t open) const {
  return spaces_[index_of(open)].dim;
}

const SectionAlgebra& TabulatedPresheaf::space(std::uint32_t open) const {
  return spaces_[index_of(open)];
}

const Matrix<GaussianRational>& TabulatedPresheaf::restriction(
    std::uint32_t from, std::uint32_t to) const {
  if ((to & ~from) != 0u) {
    throw ValidationError("restriction target " +
                          open_to_string(to, topo_.npoints()) +
                          " is not contained in " +
                          open_to_string(from, topo_.npoints()));
  }
  return *restr_[index_of(from)][index_of(to)];
}

std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>>
TabulatedPresheaf::restrictions() const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>> out;
  const auto& opens = topo_.opens();
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    for (std::size_t iv = 0; iv < opens.size(); ++iv) {
      if (restr_[iu][iv]) out.emplace(std::make_pair(opens[iu], opens[iv]), *restr_[iu][iv]);
    }
  }
  return out;
}

Matrix<GaussianRational> TabulatedPresheaf::product(
    std::uint32_t open, const Matrix<GaussianRational>& x,
    const Matrix<GaussianRational>& y) const {
  return space(open).product(x, y);
}

// --- functor laws -----------------------------------------------------------

std::optional<PresheafViolation> TabulatedPresheaf::verify() const {
  const auto& opens = topo_.opens();
  std::size_t n = topo_.npoints();
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    if (*restr_[iu][iu] !=
        Matrix<GaussianRational>::identity(spaces_[iu].dim, kZero)) {
      return PresheafViolation{
          "identity",
          {open_to_string(opens[iu], n)},
          "restriction of " + open_to_string(opens[iu], n) + " to itself is not the identity"};
    }
  }
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    for (std::size_t iv = 0; iv < opens.size(); ++iv) {
      if ((opens[iv] & ~opens[iu]) != 0u) continue;
      for (std::size_t iw = 0; iw < opens.size(); ++iw) {
        if ((opens[iw] & ~opens[iv]) != 0u) continue;
        if (*restr_[iv][iw] * *restr_[iu][iv] != *restr_[iu][iw]) {
          return PresheafViolation{
              "functoriality",
              {open_to_string(opens[iu], n), open_to_string(opens[iv], n),
               open_to_string(opens[iw], n)},
              "composite restriction through " + open_to_string(opens[iv], n) +
                  " differs from the direct one"};
        }
      }
    }
  }
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    for (std::size_t iv = 0; iv < opens.size(); ++iv) {
      if (iv == iu || (opens[iv] & ~opens[iu]) != 0u) continue;
      const auto& rho = *restr_[iu][iv];
      const auto& up = spaces_[iu];
      const auto& low = spaces_[iv];
      for (std::size_t i = 0; i < up.dim; ++i) {
        for (std::size_t j = 0; j < up.dim; ++j) {
          auto ei = basis_vector(up.dim, i);
          auto ej = basis_vector(up.dim, j);
          if (rho * up.product(ei, ej) != low.product(rho * ei, rho * ej)) {
            return PresheafViolation{
                "homomorphism",
                {open_to_string(opens[iu], n), open_to_string(opens[iv], n)},
                "restriction to " + open_to_string(opens[iv], n) +
                    " is not multiplicative on basis pair (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// --- gluing -----------------------------------------------------------------

GlueResult TabulatedPresheaf::glue(
    const std::vector<std::uint32_t>& cover,
    const std::vector<Matrix<GaussianRational>>& sections) const {
  if (cover.size() != sections.size()) {
    throw DimensionMismatch("glue expects one section per cover element");
  }
  std::uint32_t un = 0;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    std::size_t ik = topo_.open_index(cover[k]);  // throws CoverNotInTopology
    if (sections[k].rows() != spaces_[ik].dim || sections[k].cols() != 1) {
      throw DimensionMismatch("section over " +
                              open_to_string(cover[k], topo_.npoints()) +
                              " has the wrong dimension");
    }
    un |= cover[k];
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      std::uint32_t w = cover[i] & cover[j];
      if (restriction(cover[i], w) * sections[i] !=
          restriction(cover[j], w) * sections[j]) {
        return GlueResult{GlueStatus::incompatible, std::nullopt, i, j, {}};
      }
    }
  }
  // Stack s |-> (s|_{U_k}) over the whole cover and solve against the family.
  std::size_t du = dim(un);
  std::size_t total = 0;
  for (std::uint32_t m : cover) total += dim(m);
  auto stacked = Matrix<GaussianRational>::zeros(total, du, kZero);
  auto rhs = Matrix<GaussianRational>::zeros(total, 1, kZero);
  std::size_t row = 0;
  for (std::size_t k = 0; k < cover.size(); ++k) {
    const auto& rho = restriction(un, cover[k]);
    for (std::size_t a = 0; a < rho.rows(); ++a) {
      for (std::size_t b = 0; b < du; ++b) stacked.at(row + a, b) = rho.at(a, b);
      rhs.at(row + a, 0) = sections[k].at(a, 0);
    }
    row += rho.rows();
  }
  auto sol = solve(stacked, rhs);
  if (!sol.consistent) {
    return GlueResult{GlueStatus::no_candidate, std::nullopt, 0, 0, {}};
  }
  if (!sol.kernel.empty()) {
    return GlueResult{GlueStatus::multiple_candidates,
                      std::nullopt,
                      0,
                      0,
                      {sol.particular, sol.particular + sol.kernel.front()}};
  }
  return GlueResult{GlueStatus::glued, sol.particular, 0, 0, {}};
}

std::optional<SheafFailure> TabulatedPresheaf::check_sheaf_axiom() const {
  const auto& opens = topo_.opens();
  for (std::uint32_t un : opens) {
    std::size_t du = dim(un);
    for (const auto& cover : topo_.antichain_covers(un)) {
      std::size_t total = 0;
      for (std::uint32_t m : cover) total += dim(m);
      // Injectivity of s |-> (s|_{U_k}): full column rank of the stack.
      auto stacked = Matrix<GaussianRational>::zeros(total, du, kZero);
      std::size_t row = 0;
      for (std::uint32_t m : cover) {
        const auto& rho = restriction(un, m);
        for (std::size_t a = 0; a < rho.rows(); ++a) {
          for (std::size_t b = 0; b < du; ++b) stacked.at(row + a, b) = rho.at(a, b);
        }
        row += rho.rows();
      }
      std::size_t rank_r = rank(stacked);
      if (rank_r < du) {
        return SheafFailure{un, cover, GlueStatus::multiple_candidates};
      }
      // Dimension of the compatible families: kernel of the pairwise
      // difference map on overlaps.  The restriction stack always lands
      // inside it, so equality of dimensions is exactly surjectivity.
      std::size_t drows = 0;
      std::vector<std::size_t> offset(cover.size(), 0);
      {
        std::size_t off = 0;
        for (std::size_t k = 0; k < cover.size(); ++k) {
          offset[k] = off;
          off += dim(cover[k]);
        }
      }
      for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) drows += dim(cover[i] & cover[j]);
      }
      auto diff = Matrix<GaussianRational>::zeros(drows, total, kZero);
      std::size_t drow = 0;
      for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
          std::uint32_t w = cover[i] & cover[j];
          const auto& ri = restriction(cover[i], w);
          const auto& rj = restriction(cover[j], w);
          for (std::size_t a = 0; a < ri.rows(); ++a) {
            for (std::size_t b = 0; b < ri.cols(); ++b) {
              diff.at(drow + a, offset[i] + b) = ri.at(a, b);
            }
            for (std::size_t b = 0; b < rj.cols(); ++b) {
              diff.at(drow + a, offset[j] + b) -= rj.at(a, b);
            }
          }
          drow += ri.rows();
        }
      }
      std::size_t compatible_dim = total - rank(diff);
      if (compatible_dim != du) {
        return SheafFailure{un, cover, GlueStatus::no_candidate};
      }
    }
  }
  return std::nullopt;
}

// --- germs and stalks -------------------------------------------------------

Stalk TabulatedPresheaf::stalk(std::size_t p) const {
  std::uint32_t nb = topo_.minimal_neighborhood(p);
  return Stalk{nb, space(nb)};
}

Matrix<GaussianRational> TabulatedPresheaf::germ(std::uint32_t open,
                                                 const Matrix<GaussianRational>& f,
                                                 std::size_t p) const {
  std::size_t iu = index_of(open);
  if (p >= topo_.npoints() || !((open >> p) & 1u)) {
    throw ValidationError("germ asks for a point outside the section's open");
  }
  if (f.rows() != spaces_[iu].dim || f.cols() != 1) {
    throw DimensionMismatch("germ expects a coefficient column over the open");
  }
  return restriction(open, topo_.minimal_neighborhood(p)) * f;
}

bool TabulatedPresheaf::germs_equal(std::uint32_t open_f,
                                    const Matrix<GaussianRational>& f,
                                    std::uint32_t open_g,
                                    const Matrix<GaussianRational>& g,
                                    std::size_t p) const {
  if (p >= topo_.npoints() || !((open_f >> p) & 1u) || !((open_g >> p) & 1u)) {
    throw ValidationError("germ comparison needs the point inside both opens");
  }
  std::uint32_t both = open_f & open_g;
  for (std::uint32_t w : topo_.opens()) {
    if (!((w >> p) & 1u) || (w & ~both) != 0u) continue;
    if (restriction(open_f, w) * f == restriction(open_g, w) * g) return true;
  }
  return false;
}

// --- sheafification ---------------------------------------------------------

SheafifyResult sheafify(const TabulatedPresheaf& presheaf) {
  if (auto bad = presheaf.verify()) {
    throw ValidationError("sheafify needs the functor laws; " + bad->kind +
                          " fails: " + bad->message);
  }
  const auto& topo = presheaf.topology();
  const auto& opens = topo.opens();
  std::size_t npts = topo.npoints();

  std::vector<std::uint32_t> nbhd(npts);
  std::vector<std::size_t> sdim(npts);
  for (std::size_t p = 0; p < npts; ++p) {
    nbhd[p] = topo.minimal_neighborhood(p);
    sdim[p] = presheaf.dim(nbhd[p]);
  }

  // Per open: the coherent families inside the product of its stalks.  A
  // family (g_p) is coherent when restricting g_p into the smaller
  // neighborhood of any q near p reproduces g_q; the smallest neighborhood
  // of p stays inside every open containing p, so all indices stay local.
  struct OpenData {
    std::vector<std::size_t> points;
    std::vector<std::size_t> offset;
    std::size_t ambient = 0;
    Matrix<GaussianRational> basis = Matrix<GaussianRational>::zeros(0, 0, kZero);
    Matrix<GaussianRational> linv = Matrix<GaussianRational>::zeros(0, 0, kZero);
  };
  std::vector<OpenData> data(opens.size());
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    OpenData& d = data[iu];
    d.points = points_of(opens[iu]);
    d.offset.resize(d.points.size());
    for (std::size_t k = 0; k < d.points.size(); ++k) {
      d.offset[k] = d.ambient;
      d.ambient += sdim[d.points[k]];
    }
    auto local_offset = [&](std::size_t point) {
      auto it = std::lower_bound(d.points.begin(), d.points.end(), point);
      return d.offset[static_cast<std::size_t>(it - d.points.begin())];
    };
    std::size_t rows = 0;
    for (std::size_t p : d.points) {
      for (std::size_t q : points_of(nbhd[p])) {
        if (q != p) rows += sdim[q];
      }
    }
    auto constraints = Matrix<GaussianRational>::zeros(rows, d.ambient, kZero);
    std::size_t row = 0;
    for (std::size_t p : d.points) {
      for (std::size_t q : points_of(nbhd[p])) {
        if (q == p) continue;
        const auto& rho = presheaf.restriction(nbhd[p], nbhd[q]);
        for (std::size_t a = 0; a < sdim[q]; ++a) {
          for (std::size_t b = 0; b < sdim[p]; ++b) {
            constraints.at(row + a, local_offset(p) + b) = rho.at(a, b);
          }
          constraints.at(row + a, local_offset(q) + a) -= GaussianRational(1);
        }
        row += sdim[q];
      }
    }
    auto kernel = nullspace(constraints);
    d.basis = Matrix<GaussianRational>::zeros(d.ambient, kernel.size(), kZero);
    for (std::size_t c = 0; c < kernel.size(); ++c) {
      for (std::size_t r = 0; r < d.ambient; ++r) d.basis.at(r, c) = kernel[c].at(r, 0);
    }
    d.linv = left_inverse(d.basis);
  }

  // Stalkwise product of two ambient vectors over the open with index iu.
  auto ambient_product = [&](std::size_t iu, const Matrix<GaussianRational>& x,
                             const Matrix<GaussianRational>& y) {
    const OpenData& d = data[iu];
    auto out = Matrix<GaussianRational>::zeros(d.ambient, 1, kZero);
    for (std::size_t k = 0; k < d.points.size(); ++k) {
      std::size_t p = d.points[k];
      const auto& alg = presheaf.space(nbhd[p]);
      auto xp = Matrix<GaussianRational>::zeros(sdim[p], 1, kZero);
      auto yp = Matrix<GaussianRational>::zeros(sdim[p], 1, kZero);
      for (std::size_t a = 0; a < sdim[p]; ++a) {
        xp.at(a, 0) = x.at(d.offset[k] + a, 0);
        yp.at(a, 0) = y.at(d.offset[k] + a, 0);
      }
      auto zp = alg.product(xp, yp);
      for (std::size_t a = 0; a < sdim[p]; ++a) out.at(d.offset[k] + a, 0) = zp.at(a, 0);
    }
    return out;
  };

  std::vector<SectionAlgebra> new_spaces(opens.size());
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    const OpenData& d = data[iu];
    std::size_t r = d.basis.cols();
    SectionAlgebra alg{r, {}};
    for (std::size_t i = 0; i < r; ++i) {
      auto li = Matrix<GaussianRational>::zeros(r, r, kZero);
      auto xi = Matrix<GaussianRational>::zeros(d.ambient, 1, kZero);
      for (std::size_t a = 0; a < d.ambient; ++a) xi.at(a, 0) = d.basis.at(a, i);
      for (std::size_t j = 0; j < r; ++j) {
        auto yj = Matrix<GaussianRational>::zeros(d.ambient, 1, kZero);
        for (std::size_t a = 0; a < d.ambient; ++a) yj.at(a, 0) = d.basis.at(a, j);
        auto coords = d.linv * ambient_product(iu, xi, yj);
        for (std::size_t k = 0; k < r; ++k) li.at(k, j) = coords.at(k, 0);
      }
      alg.left_mult.push_back(std::move(li));
    }
    new_spaces[iu] = std::move(alg);
  }

  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>> new_restr;
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    for (std::size_t iv = 0; iv < opens.size(); ++iv) {
      if (iv == iu || (opens[iv] & ~opens[iu]) != 0u) continue;
      const OpenData& du = data[iu];
      const OpenData& dv = data[iv];
      auto rho = Matrix<GaussianRational>::zeros(dv.basis.cols(), du.basis.cols(), kZero);
      for (std::size_t c = 0; c < du.basis.cols(); ++c) {
        auto proj = Matrix<GaussianRational>::zeros(dv.ambient, 1, kZero);
        for (std::size_t k = 0; k < dv.points.size(); ++k) {
          std::size_t p = dv.points[k];
          auto it = std::lower_bound(du.points.begin(), du.points.end(), p);
          std::size_t uk = static_cast<std::size_t>(it - du.points.begin());
          for (std::size_t a = 0; a < sdim[p]; ++a) {
            proj.at(dv.offset[k] + a, 0) = du.basis.at(du.offset[uk] + a, c);
          }
        }
        auto coords = dv.linv * proj;
        for (std::size_t k = 0; k < coords.rows(); ++k) rho.at(k, c) = coords.at(k, 0);
      }
      new_restr.emplace(std::make_pair(opens[iu], opens[iv]), std::move(rho));
    }
  }

  std::vector<Matrix<GaussianRational>> canonical;
  for (std::size_t iu = 0; iu < opens.size(); ++iu) {
    const OpenData& d = data[iu];
    std::size_t dold = presheaf.dim(opens[iu]);
    auto theta = Matrix<GaussianRational>::zeros(d.basis.cols(), dold, kZero);
    for (std::size_t c = 0; c < dold; ++c) {
      auto ambient = Matrix<GaussianRational>::zeros(d.ambient, 1, kZero);
      for (std::size_t k = 0; k < d.points.size(); ++k) {
        std::size_t p = d.points[k];
        const auto& rho = presheaf.restriction(opens[iu], nbhd[p]);
        for (std::size_t a = 0; a < sdim[p]; ++a) {
          ambient.at(d.offset[k] + a, 0) = rho.at(a, c);
        }
      }
      auto coords = d.linv * ambient;
      for (std::size_t k = 0; k < coords.rows(); ++k) theta.at(k, c) = coords.at(k, 0);
    }
    canonical.push_back(std::move(theta));
  }

  return SheafifyResult{TabulatedPresheaf(topo, std::move(new_spaces), std::move(new_restr)),
                        std::move(canonical)};
}

// --- builders ---------------------------------------------------------------

TabulatedPresheaf constant_presheaf(const FiniteTopology& topo,
                                    const SectionAlgebra& algebra,
                                    bool zero_on_empty) {
  algebra.validate();
  const auto& opens = topo.opens();
  std::vector<SectionAlgebra> spaces;
  for (std::uint32_t m : opens) {
    spaces.push_back((m == 0u && zero_on_empty) ? SectionAlgebra::zero() : algebra);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>> restr;
  for (std::uint32_t u : opens) {
    for (std::uint32_t v : opens) {
      if (v == u || (v & ~u) != 0u) continue;
      if (v == 0u && zero_on_empty) {
        restr.emplace(std::make_pair(u, v),
                      Matrix<GaussianRational>::zeros(0, algebra.dim, kZero));
      } else {
        restr.emplace(std::make_pair(u, v),
                      Matrix<GaussianRational>::identity(algebra.dim, kZero));
      }
    }
  }
  return TabulatedPresheaf(topo, std::move(spaces), std::move(restr));
}

TabulatedPresheaf function_presheaf(const FiniteTopology& topo) {
  const auto& opens = topo.opens();
  std::vector<SectionAlgebra> spaces;
  for (std::uint32_t m : opens) {
    spaces.push_back(SectionAlgebra::functions(points_of(m).size()));
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix<GaussianRational>> restr;
  for (std::uint32_t u : opens) {
    auto up = points_of(u);
    for (std::uint32_t v : opens) {
      if (v == u || (v & ~u) != 0u) continue;
      auto vp = points_of(v);
      auto rho = Matrix<GaussianRational>::zeros(vp.size(), up.size(), kZero);
      for (std::size_t a = 0; a < vp.size(); ++a) {
        auto it = std::lower_bound(up.begin(), up.end(), vp[a]);
        rho.at(a, static_cast<std::size_t>(it - up.begin())) = GaussianRational(1);
      }
      restr.emplace(std::make_pair(u, v), std::move(rho));
    }
  }
  return TabulatedPresheaf(topo, std::move(spaces), std::move(restr));
}

}  // namespace ncgeom
