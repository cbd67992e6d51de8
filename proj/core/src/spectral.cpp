#include "ncgeom/spectral.hpp"

#include <cmath>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

constexpr double kOffDiagTolerance = 1e-12;
constexpr int kMaxSweeps = 64;

// Classical cyclic Jacobi for a real symmetric matrix; returns the largest
// eigenvalue.  Rotations eliminate one off-diagonal entry at a time and
// converge quadratically once the matrix is nearly diagonal.
double largest_eigenvalue_symmetric(std::vector<std::vector<double>> h) {
  std::size_t n = h.size();
  if (n == 0) throw DimensionMismatch("eigenvalue of empty matrix");
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(h[i][j]));
  }
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(h[p][q]));
    }
    if (off <= kOffDiagTolerance * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(h[p][q]) <= kOffDiagTolerance * scale * 1e-3) continue;
        double theta = (h[q][q] - h[p][p]) / (2.0 * h[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double hkp = h[k][p], hkq = h[k][q];
          h[k][p] = c * hkp - s * hkq;
          h[k][q] = s * hkp + c * hkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double hpk = h[p][k], hqk = h[q][k];
          h[p][k] = c * hpk - s * hqk;
          h[q][k] = s * hpk + c * hqk;
        }
      }
    }
  }
  double best = h[0][0];
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, h[i][i]);
  return best;
}

}  // namespace

double spectral_norm(const std::vector<std::vector<std::complex<double>>>& a) {
  std::size_t rows = a.size();
  if (rows == 0) throw DimensionMismatch("norm of empty matrix");
  std::size_t cols = a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix");
  }
  // H = A^H A is Hermitian positive semidefinite; embed it as the real
  // symmetric [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of H
  // doubled, so the top eigenvalue is unchanged.
  std::vector<std::vector<std::complex<double>>> h(
      cols, std::vector<std::complex<double>>(cols, 0.0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < rows; ++k) acc += std::conj(a[k][i]) * a[k][j];
      h[i][j] = acc;
    }
  }
  std::size_t n = 2 * cols;
  std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      e[i][j] = h[i][j].real();
      e[i][cols + j] = -h[i][j].imag();
      e[cols + i][j] = h[i][j].imag();
      e[cols + i][cols + j] = h[i][j].real();
    }
  }
  double top = largest_eigenvalue_symmetric(std::move(e));
  return std::sqrt(std::max(0.0, top));
}

double spectral_norm(const Matrix<GaussianRational>& a) {
  std::vector<std::vector<std::complex<double>>> m(
      a.rows(), std::vector<std::complex<double>>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j).to_complex();
  }
  return spectral_norm(m);
}

}  // namespace ncgeom
