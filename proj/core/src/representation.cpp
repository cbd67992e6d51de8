#include "ncgeom/representation.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"

namespace ncgeom {

RandomOperatorField::RandomOperatorField(SampleGrid grid,
                                         std::vector<Matrix<GaussianRational>> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw DimensionMismatch("operator field needs one sample per grid point");
  }
  for (const auto& s : samples_) {
    if (s.rows() != s.cols() || s.rows() != samples_[0].rows()) {
      throw DimensionMismatch("operator samples must be square and uniform");
    }
  }
}

std::size_t RandomOperatorField::operator_size() const { return samples_[0].rows(); }

RandomOperatorField RandomOperatorField::operator-() const {
  RandomOperatorField out = *this;
  for (auto& s : out.samples_) s = -s;
  return out;
}

RandomOperatorField operator+(RandomOperatorField a, const RandomOperatorField& b) {
  if (a.grid_ != b.grid_) throw DimensionMismatch("operator fields over different grids");
  for (std::size_t k = 0; k < a.samples_.size(); ++k) {
    a.samples_[k] = a.samples_[k] + b.samples_[k];
  }
  return a;
}

RandomOperatorField operator-(RandomOperatorField a, const RandomOperatorField& b) {
  if (a.grid_ != b.grid_) throw DimensionMismatch("operator fields over different grids");
  for (std::size_t k = 0; k < a.samples_.size(); ++k) {
    a.samples_[k] = a.samples_[k] - b.samples_[k];
  }
  return a;
}

RandomOperatorField operator*(const RandomOperatorField& a, const RandomOperatorField& b) {
  if (a.grid_ != b.grid_) throw DimensionMismatch("operator fields over different grids");
  std::vector<Matrix<GaussianRational>> out;
  out.reserve(a.samples_.size());
  for (std::size_t k = 0; k < a.samples_.size(); ++k) {
    out.push_back(a.samples_[k] * b.samples_[k]);
  }
  return RandomOperatorField(a.grid_, std::move(out));
}

RandomOperatorField represent(const MatrixField& f, const SampleGrid& grid) {
  if (grid.dim() != f.nvars()) {
    throw DimensionMismatch("grid dimension does not match the field's base");
  }
  std::vector<Matrix<GaussianRational>> samples;
  samples.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<GaussianRational> pt;
    pt.reserve(grid.dim());
    for (const auto& c : grid.point(k)) pt.emplace_back(c);
    try {
      samples.push_back(f.eval(pt));
    } catch (const DenominatorZeroAtPoint& e) {
      throw PoleOnGrid(std::string("grid point ") + std::to_string(k) +
                       " hits a pole: " + e.what());
    }
  }
  return RandomOperatorField(grid, std::move(samples));
}

double ess_sup_norm(const RandomOperatorField& f) {
  double best = 0.0;
  for (std::size_t k = 0; k < f.grid().size(); ++k) {
    best = std::max(best, spectral_norm(f.sample(k)));
  }
  return best;
}

GridVector::GridVector(const SampleGrid* grid,
                       std::vector<std::vector<GaussianRational>> values)
    : grid_(grid), values_(std::move(values)) {
  if (grid_ == nullptr) throw ValidationError("grid vector needs a grid");
  if (values_.size() != grid_->size()) {
    throw DimensionMismatch("grid vector needs one value per grid point");
  }
  for (const auto& v : values_) {
    if (v.size() != values_[0].size() || v.empty()) {
      throw DimensionMismatch("grid vector fibres must be uniform and nonempty");
    }
  }
}

std::size_t GridVector::fibre_dim() const { return values_[0].size(); }

GaussianRational grid_inner(const GridVector& a, const GridVector& b) {
  if (&a.grid() != &b.grid() && !(a.grid() == b.grid())) {
    throw DimensionMismatch("inner product over different grids");
  }
  if (a.fibre_dim() != b.fibre_dim()) {
    throw DimensionMismatch("inner product over different fibres");
  }
  GaussianRational acc(0);
  for (std::size_t k = 0; k < a.grid().size(); ++k) {
    GaussianRational point(0);
    for (std::size_t i = 0; i < a.fibre_dim(); ++i) {
      point += a.value(k)[i].conj() * b.value(k)[i];
    }
    acc += GaussianRational(a.grid().weight(k)) * point;
  }
  return acc;
}

GridVector intertwine_vector(const RationalFunction& psi,
                             const std::vector<GaussianRational>& phi,
                             const SampleGrid& grid) {
  if (phi.empty()) throw DimensionMismatch("tensor factor phi must be nonzero-dimensional");
  std::vector<std::vector<GaussianRational>> values;
  values.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<GaussianRational> pt;
    pt.reserve(grid.dim());
    for (const auto& c : grid.point(k)) pt.emplace_back(c);
    GaussianRational s;
    try {
      s = psi.eval(pt);
    } catch (const DenominatorZeroAtPoint& e) {
      throw PoleOnGrid(std::string("grid point ") + std::to_string(k) +
                       " hits a pole: " + e.what());
    }
    std::vector<GaussianRational> v;
    v.reserve(phi.size());
    for (const auto& c : phi) v.push_back(s * c);
    values.push_back(std::move(v));
  }
  return GridVector(&grid, std::move(values));
}

GridVector apply(const RandomOperatorField& f, const GridVector& v) {
  if (!(f.grid() == v.grid())) throw DimensionMismatch("field and section grids differ");
  if (f.operator_size() != v.fibre_dim()) {
    throw DimensionMismatch("operator size does not match the fibre");
  }
  std::vector<std::vector<GaussianRational>> out;
  out.reserve(f.grid().size());
  for (std::size_t k = 0; k < f.grid().size(); ++k) {
    const auto& m = f.sample(k);
    std::vector<GaussianRational> w(v.fibre_dim(), GaussianRational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) w[i] += m.at(i, j) * v.value(k)[j];
    }
    out.push_back(std::move(w));
  }
  return GridVector(&v.grid(), std::move(out));
}

IntertwinerReport tensor_vs_field_intertwiner(const RationalFunction& f,
                                              const Matrix<GaussianRational>& B,
                                              const SampleGrid& grid,
                                              const RationalFunction& psi,
                                              const std::vector<GaussianRational>& phi,
                                              const RationalFunction& psi2,
                                              const std::vector<GaussianRational>& phi2) {
  if (B.rows() != B.cols() || B.rows() != phi.size() || phi.size() != phi2.size()) {
    throw DimensionMismatch("tensor operator and vectors must share one fibre");
  }
  IntertwinerReport report{true, true, ""};

  // Route one: represent the embedded tensor and act on the section.
  SimpleTensor tensor{f, B};
  MatrixField embedded = tensor.embed(Box::whole(grid.dim()));
  GridVector left = apply(represent(embedded, grid), intertwine_vector(psi, phi, grid));

  // Route two: multiply inside the tensor product first.
  std::vector<GaussianRational> Bphi(phi.size(), GaussianRational(0));
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) Bphi[i] += B.at(i, j) * phi[j];
  }
  GridVector right = intertwine_vector(f * psi, Bphi, grid);

  if (!(left == right)) {
    report.action_ok = false;
    report.detail = "tensor action and represented action disagree";
  }

  // Inner product preservation: the factorised form against the grid sum.
  GaussianRational scalar_part(0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<GaussianRational> pt;
    for (const auto& c : grid.point(k)) pt.emplace_back(c);
    scalar_part += GaussianRational(grid.weight(k)) * psi.eval(pt).conj() * psi2.eval(pt);
  }
  GaussianRational vector_part(0);
  for (std::size_t i = 0; i < phi.size(); ++i) vector_part += phi[i].conj() * phi2[i];
  GaussianRational factorised = scalar_part * vector_part;
  GaussianRational through_grid =
      grid_inner(intertwine_vector(psi, phi, grid), intertwine_vector(psi2, phi2, grid));
  if (factorised != through_grid) {
    report.inner_ok = false;
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += "inner products disagree";
  }
  return report;
}

IntertwinerReport tensor_vs_field_intertwiner(const RationalFunction& f,
                                              const Matrix<GaussianRational>& B,
                                              const SampleGrid& grid,
                                              const RationalFunction& psi,
                                              const std::vector<GaussianRational>& phi) {
  return tensor_vs_field_intertwiner(f, B, grid, psi, phi, psi, phi);
}

}  // namespace ncgeom
