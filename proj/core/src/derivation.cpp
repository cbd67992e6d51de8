#include "ncgeom/derivation.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

Derivation Derivation::horizontal(BaseDerivation h, std::size_t lie_dim) {
  std::size_t nvars = h.nvars();
  return Derivation(std::move(h), LieVector::zero(lie_dim, nvars));
}

Derivation Derivation::vertical(LieVector v, std::size_t nvars) {
  return Derivation(BaseDerivation::zero(nvars), std::move(v));
}

Derivation Derivation::zero(std::size_t nvars, std::size_t lie_dim) {
  return Derivation(BaseDerivation::zero(nvars), LieVector::zero(lie_dim, nvars));
}

const LieVector& Derivation::pure_vertical() const {
  if (!h_.is_zero()) {
    if (!v_.is_zero()) throw MixedSectors("expected a pure vertical derivation");
    throw SectorMismatch("expected a vertical derivation, got a horizontal one");
  }
  return v_;
}

const BaseDerivation& Derivation::pure_horizontal() const {
  if (!v_.is_zero()) {
    if (!h_.is_zero()) throw MixedSectors("expected a pure horizontal derivation");
    throw SectorMismatch("expected a horizontal derivation, got a vertical one");
  }
  return h_;
}

std::string Derivation::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!h_.is_zero()) out += h_.to_string();
  if (!v_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += v_.to_string();
  }
  return out;
}

Derivation bracket(const LieAlgebra* lie, const Derivation& a, const Derivation& b) {
  if (a.nvars() != b.nvars() || a.lie_dim() != b.lie_dim()) {
    throw DimensionMismatch("derivations live over different sectors");
  }
  if (a.lie_dim() > 0 && (lie == nullptr || lie->dim() != a.lie_dim())) {
    throw DimensionMismatch("vertical bracket needs the matching Lie algebra");
  }
  BaseDerivation h = bracket(a.h(), b.h());
  LieVector v = LieVector::zero(a.lie_dim(), a.nvars());
  if (a.lie_dim() > 0) {
    v = bracket(*lie, a.v(), b.v());
    // Horizontal parts differentiate the vertical coefficients.
    for (std::size_t k = 0; k < a.lie_dim(); ++k) {
      v.comp[k] += a.h().apply(b.v().comp[k]) - b.h().apply(a.v().comp[k]);
    }
  }
  return Derivation(std::move(h), std::move(v));
}

}  // namespace ncgeom
