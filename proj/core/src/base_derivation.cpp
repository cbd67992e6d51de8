#include "ncgeom/base_derivation.hpp"

#include "ncgeom/errors.hpp"

namespace ncgeom {

BaseDerivation::BaseDerivation(std::vector<RationalFunction> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionMismatch("derivation needs at least one variable");
  for (const auto& c : coeffs_) {
    if (c.nvars() != coeffs_.size()) {
      throw DimensionMismatch("derivation coefficient arity mismatch");
    }
  }
}

BaseDerivation BaseDerivation::zero(std::size_t nvars) {
  return BaseDerivation(std::vector<RationalFunction>(nvars, RationalFunction::zero(nvars)));
}

BaseDerivation BaseDerivation::coordinate(std::size_t index, std::size_t nvars) {
  if (index >= nvars) throw DimensionMismatch("coordinate index exceeds variable count");
  std::vector<RationalFunction> c(nvars, RationalFunction::zero(nvars));
  c[index] = RationalFunction::one(nvars);
  return BaseDerivation(std::move(c));
}

RationalFunction BaseDerivation::apply(const RationalFunction& f) const {
  if (f.nvars() != nvars()) {
    throw DimensionMismatch("derivation and scalar field variable counts differ");
  }
  RationalFunction acc = RationalFunction::zero(nvars());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    acc += coeffs_[k] * f.derivative(k);
  }
  return acc;
}

bool BaseDerivation::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

BaseDerivation BaseDerivation::operator-() const {
  BaseDerivation out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BaseDerivation& BaseDerivation::operator+=(const BaseDerivation& o) {
  if (nvars() != o.nvars()) throw DimensionMismatch("derivation arity mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

BaseDerivation& BaseDerivation::operator-=(const BaseDerivation& o) {
  if (nvars() != o.nvars()) throw DimensionMismatch("derivation arity mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

BaseDerivation& BaseDerivation::scale(const RationalFunction& f) {
  for (auto& c : coeffs_) c *= f;
  return *this;
}

std::string BaseDerivation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (coeffs_[k].is_one()) {
      out += "d" + std::to_string(k + 1);
    } else {
      out += "(" + coeffs_[k].to_string() + ")*d" + std::to_string(k + 1);
    }
  }
  return out.empty() ? "0" : out;
}

BaseDerivation bracket(const BaseDerivation& x, const BaseDerivation& y) {
  if (x.nvars() != y.nvars()) throw DimensionMismatch("derivation arity mismatch");
  std::vector<RationalFunction> c;
  c.reserve(x.nvars());
  for (std::size_t k = 0; k < x.nvars(); ++k) {
    c.push_back(x.apply(y.coeff(k)) - y.apply(x.coeff(k)));
  }
  return BaseDerivation(std::move(c));
}

}  // namespace ncgeom
