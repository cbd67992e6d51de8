#include "ncgeom/number.hpp"

namespace ncgeom {

std::string to_string(const BigRational& q) { return q.str(); }

std::complex<double> GaussianRational::to_complex() const {
  return {re_.convert_to<double>(), im_.convert_to<double>()};
}

namespace {

// Renders b*i for b != 0, without sign handling for b == -1 etc. factored out
// so the mixed case can reuse it on |b|.
std::string imag_part(const BigRational& b) {
  if (b == 1) return "i";
  if (b == -1) return "-i";
  return b.str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im_ == 0) return re_.str();
  if (re_ == 0) return imag_part(im_);
  std::string out = "(" + re_.str();
  if (im_ > 0) {
    out += "+" + imag_part(im_);
  } else {
    out += "-" + imag_part(-im_);
  }
  return out + ")";
}

}  // namespace ncgeom
