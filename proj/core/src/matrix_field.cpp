#include "ncgeom/matrix_field.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"

namespace ncgeom {

MatrixField::MatrixField(std::size_t n, std::size_t nvars, Box domain)
    : n_(n),
      nvars_(nvars),
      domain_(std::move(domain)),
      entries_(n * n, RationalFunction::zero(nvars)) {
  if (n == 0) throw DimensionMismatch("matrix field needs positive size");
  if (domain_.dim() != nvars) {
    throw DimensionMismatch("domain dimension does not match variable count");
  }
}

MatrixField MatrixField::identity(std::size_t n, std::size_t nvars, Box domain) {
  MatrixField f(n, nvars, std::move(domain));
  for (std::size_t i = 0; i < n; ++i) f.entry(i, i) = RationalFunction::one(nvars);
  return f;
}

MatrixField MatrixField::zero(std::size_t n, std::size_t nvars, Box domain) {
  return MatrixField(n, nvars, std::move(domain));
}

MatrixField MatrixField::delta(const GroupArrow& arrow, std::size_t n, std::size_t nvars,
                               Box domain) {
  MatrixField f(n, nvars, std::move(domain));
  if (arrow.a >= n || arrow.b >= n) throw DimensionMismatch("arrow outside the index set");
  f.entry(arrow.a, arrow.b) = RationalFunction::one(nvars);
  return f;
}

MatrixField MatrixField::from_entries(std::vector<std::vector<RationalFunction>> rows,
                                      Box domain) {
  if (rows.empty()) throw DimensionMismatch("matrix field needs positive size");
  std::size_t n = rows.size();
  std::size_t nvars = rows[0].empty() ? 0 : rows[0][0].nvars();
  MatrixField f(n, nvars, std::move(domain));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionMismatch("matrix field rows must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j].nvars() != nvars) {
        throw DimensionMismatch("matrix field entry variable counts differ");
      }
      f.entry(i, j) = std::move(rows[i][j]);
    }
  }
  return f;
}

const RationalFunction& MatrixField::entry(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) throw DimensionMismatch("matrix field index out of range");
  return entries_[a * n_ + b];
}

RationalFunction& MatrixField::entry(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw DimensionMismatch("matrix field index out of range");
  return entries_[a * n_ + b];
}

bool MatrixField::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RationalFunction& f) { return f.is_zero(); });
}

namespace {

void check_compatible(const MatrixField& a, const MatrixField& b) {
  if (a.size() != b.size() || a.nvars() != b.nvars()) {
    throw DimensionMismatch("matrix fields have different shapes");
  }
  if (a.domain() != b.domain()) {
    throw ValidationError("matrix fields live over different patches");
  }
}

}  // namespace

MatrixField MatrixField::operator-() const {
  MatrixField out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

MatrixField operator+(MatrixField a, const MatrixField& b) {
  check_compatible(a, b);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
  return a;
}

MatrixField operator-(MatrixField a, const MatrixField& b) {
  check_compatible(a, b);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
  return a;
}

MatrixField& MatrixField::scale(const RationalFunction& f) {
  for (auto& e : entries_) e *= f;
  return *this;
}

MatrixField& MatrixField::scale(const GaussianRational& c) {
  for (auto& e : entries_) e.scale(c);
  return *this;
}

MatrixField MatrixField::star() const {
  MatrixField out(n_, nvars_, domain_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) out.entry(a, b) = entry(b, a).conj();
  }
  return out;
}

MatrixField MatrixField::restrict(const Box& sub) const {
  if (!domain_.contains_box(sub)) {
    throw NotASubset("restriction target is not contained in the domain");
  }
  MatrixField out = *this;
  out.domain_ = sub;
  return out;
}

Matrix<GaussianRational> MatrixField::eval(const std::vector<GaussianRational>& point) const {
  // Domain membership only constrains the real part of the sample.
  std::vector<BigRational> real_pt;
  real_pt.reserve(point.size());
  for (const auto& z : point) real_pt.push_back(z.re());
  if (!domain_.contains_point(real_pt)) {
    throw ValidationError("evaluation point lies outside the patch");
  }
  Matrix<GaussianRational> out =
      Matrix<GaussianRational>::zeros(n_, n_, GaussianRational(0));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) out.at(a, b) = entry(a, b).eval(point);
  }
  return out;
}

bool operator==(const MatrixField& a, const MatrixField& b) {
  return a.n_ == b.n_ && a.nvars_ == b.nvars_ && a.domain_ == b.domain_ &&
         a.entries_ == b.entries_;
}

std::string MatrixField::to_string() const {
  std::string out = "[";
  for (std::size_t a = 0; a < n_; ++a) {
    if (a) out += "; ";
    for (std::size_t b = 0; b < n_; ++b) {
      if (b) out += ", ";
      out += entry(a, b).to_string();
    }
  }
  return out + "] on " + domain_.to_string();
}

MatrixField convolve(const MatrixField& a, const MatrixField& b) {
  check_compatible(a, b);
  MatrixField out(a.size(), a.nvars(), a.domain());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t z = 0; z < a.size(); ++z) {
      const RationalFunction& aiz = a.entry(i, z);
      if (aiz.is_zero()) continue;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (b.entry(z, j).is_zero()) continue;
        out.entry(i, j) += aiz * b.entry(z, j);
      }
    }
  }
  return out;
}

MatrixField commutator(const MatrixField& a, const MatrixField& b) {
  return convolve(a, b) - convolve(b, a);
}

MatrixField inner_connection(const MatrixField& a, const MatrixField& b) {
  MatrixField out = commutator(a, b);
  out.scale(GaussianRational(BigRational(1, 2)));
  return out;
}

MatrixField inner_curvature(const MatrixField& a, const MatrixField& b,
                            const MatrixField& c) {
  MatrixField first = inner_connection(a, inner_connection(b, c));
  MatrixField second = inner_connection(b, inner_connection(a, c));
  MatrixField third = inner_connection(commutator(a, b), c);
  return first - second - third;
}

MatrixField SimpleTensor::embed(const Box& domain) const {
  if (op.rows() != op.cols()) throw DimensionMismatch("tensor operator must be square");
  MatrixField out(op.rows(), scalar.nvars(), domain);
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (std::size_t j = 0; j < op.cols(); ++j) {
      RationalFunction e = scalar;
      e.scale(op.at(i, j));
      out.entry(i, j) = std::move(e);
    }
  }
  return out;
}

ActionKernel::ActionKernel(const FiniteGroup* grp, std::size_t nvars, Box domain)
    : grp_(grp),
      nvars_(nvars),
      domain_(std::move(domain)),
      values_(grp->order() * grp->order(), RationalFunction::zero(nvars)) {}

const RationalFunction& ActionKernel::value(std::size_t p, std::size_t g) const {
  return values_.at(p * grp_->order() + g);
}

RationalFunction& ActionKernel::value(std::size_t p, std::size_t g) {
  return values_.at(p * grp_->order() + g);
}

MatrixField ActionKernel::to_pair_field() const {
  std::size_t n = grp_->order();
  MatrixField out(n, nvars_, domain_);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t g = 0; g < n; ++g) {
      GroupArrow arrow = to_pair(*grp_, ActionArrow{p, g});
      out.entry(arrow.a, arrow.b) = value(p, g);
    }
  }
  return out;
}

ActionKernel ActionKernel::from_pair_field(const FiniteGroup* grp, const MatrixField& f) {
  if (f.size() != grp->order()) {
    throw DimensionMismatch("field size does not match the group order");
  }
  ActionKernel out(grp, f.nvars(), f.domain());
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < f.size(); ++b) {
      ActionArrow arrow = to_action(*grp, GroupArrow{a, b});
      out.value(arrow.p, arrow.g) = f.entry(a, b);
    }
  }
  return out;
}

ActionKernel convolve_action(const ActionKernel& a, const ActionKernel& b) {
  if (&a.group() != &b.group()) throw DimensionMismatch("action kernels over different groups");
  const FiniteGroup& grp = a.group();
  std::size_t n = grp.order();
  ActionKernel out(&grp, a.nvars(), a.domain());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t g = 0; g < n; ++g) {
      RationalFunction acc = RationalFunction::zero(a.nvars());
      for (std::size_t g1 = 0; g1 < n; ++g1) {
        std::size_t g2 = grp.mul(grp.inv(g1), g);
        // First factor ends at p*g1, where the second must start.
        acc += a.value(p, g1) * b.value(grp.mul(p, g1), g2);
      }
      out.value(p, g) = acc;
    }
  }
  return out;
}

namespace {

void enumerate_monomials(std::size_t nvars, std::uint32_t bound, Monomial& cur,
                         std::size_t pos, std::uint32_t used, std::vector<Monomial>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e + used <= bound; ++e) {
    cur[pos] = e;
    enumerate_monomials(nvars, bound, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MatrixField> center_basis(std::size_t n, std::size_t nvars,
                                      std::uint32_t degree_bound) {
  if (n == 0) throw DimensionMismatch("center computation needs positive size");
  if (nvars == 0) throw DimensionMismatch("center computation needs a base variable");
  GaussianRational zero(0), one(1);

  // The commutation constraints against the constant matrix units act on
  // each polynomial coefficient separately (monomials are linearly
  // independent), so the centre is (central constant matrices) tensor
  // (scalar monomials).  Solve the constant block exactly, once.
  std::size_t unknowns = n * n;
  std::vector<std::vector<GaussianRational>> rows;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      // [C, E_pq](x, y) = C(x, p) [y == q] - [x == p] C(q, y).
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<GaussianRational> row(unknowns, zero);
          if (y == q) row[x * n + p] += one;
          if (x == p) row[q * n + y] -= one;
          bool nontrivial = std::any_of(row.begin(), row.end(),
                                        [](const GaussianRational& v) { return !v.is_zero(); });
          if (nontrivial) rows.push_back(std::move(row));
        }
      }
    }
  }
  Matrix<GaussianRational> system = matrix_from_rows(rows);
  std::vector<Matrix<GaussianRational>> kernel = nullspace(std::move(system));

  // Normalise each basis vector so its first nonzero coordinate is 1.
  Box domain = Box::whole(nvars);
  std::vector<MatrixField> basis;
  for (auto& v : kernel) {
    GaussianRational lead = zero;
    for (std::size_t k = 0; k < unknowns; ++k) {
      if (!v.at(k, 0).is_zero()) {
        lead = v.at(k, 0);
        break;
      }
    }
    MatrixField f(n, nvars, domain);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        GaussianRational c = v.at(i * n + j, 0) / lead;
        f.entry(i, j) = RationalFunction::constant(c, nvars);
      }
    }
    basis.push_back(std::move(f));
  }

  // Cross-check the block structure symbolically: every monomial multiple of
  // a basis element must commute with all generators, including the scalar
  // ones (for which commutation is automatic but still exercised here).
  std::vector<Monomial> monomials;
  Monomial cur(nvars, 0);
  enumerate_monomials(nvars, degree_bound, cur, 0, 0, monomials);
  for (const MatrixField& b : basis) {
    for (const Monomial& m : monomials) {
      MatrixField candidate = b;
      candidate.scale(RationalFunction(Polynomial::monomial(m, one)));
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          MatrixField unit = MatrixField::delta(GroupArrow{p, q}, n, nvars, domain);
          if (!commutator(candidate, unit).is_zero()) {
            throw Error("central candidate fails to commute with a matrix unit");
          }
        }
      }
      for (std::size_t k = 0; k < nvars; ++k) {
        MatrixField coord = MatrixField::identity(n, nvars, domain);
        coord.scale(RationalFunction::variable(k, nvars));
        if (!commutator(candidate, coord).is_zero()) {
          throw Error("central candidate fails to commute with a coordinate scalar");
        }
      }
    }
  }
  return basis;
}

}  // namespace ncgeom
