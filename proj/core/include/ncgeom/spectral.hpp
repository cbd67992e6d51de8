#pragma once

#include <complex>
#include <vector>

#include "ncgeom/linalg.hpp"

namespace ncgeom {

// Operator 2-norm of a complex matrix: the square root of the largest
// eigenvalue of A^H A, computed by cyclic Jacobi iteration on the real
// symmetric embedding.  The off-diagonal convergence threshold is pinned at
// 1e-12 relative to the scale of the matrix.
double spectral_norm(const std::vector<std::vector<std::complex<double>>>& a);

double spectral_norm(const Matrix<GaussianRational>& a);

}  // namespace ncgeom
