#pragma once

#include <vector>

#include "ncgeom/metric.hpp"

namespace ncgeom {

// Six-term Koszul value g(nabla_u v, w):
//   1/2 [ u g(v,w) + v g(u,w) - w g(u,v)
//         + g([u,v], w) - g([v,w], u) + g([w,u], v) ].
// Directional terms act through the horizontal parts only; on pure vertical
// arguments with a constant block metric they vanish identically.
RationalFunction koszul(const BlockMetric& g, const Derivation& u, const Derivation& v,
                        const Derivation& w);

// Levi-Civita connection determined by the Koszul values against the module
// basis, solved exactly through the metric inverse.
Derivation nabla(const BlockMetric& g, const Derivation& u, const Derivation& v);

// Closed form on the vertical sector: nabla_u v = 1/2 [u, v].
LieVector vertical_connection(const LieAlgebra& lie, const Derivation& u,
                              const Derivation& v);

// Curvature R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
Derivation curvature(const BlockMetric& g, const Derivation& u, const Derivation& v,
                     const Derivation& w);

// Closed form on the vertical sector: R(u,v)w = -1/4 [[u,v], w].
LieVector vertical_curvature(const LieAlgebra& lie, const Derivation& u,
                             const Derivation& v, const Derivation& w);

// ric(u, w) = trace of the map v -> R(u,v)w over the module basis.
RationalFunction ricci(const BlockMetric& g, const Derivation& u, const Derivation& w);

// All Ricci pairings against the basis directions.
Matrix<RationalFunction> ricci_matrix(const BlockMetric& g);

// Scalar curvature: the trace of the operator determined by
// g(R(u), w) = ric(u, w).
RationalFunction scalar_curvature(const BlockMetric& g);

// Christoffel symbols of the horizontal block:
//   Gamma^k_ij = 1/2 sum_l g^{kl} (d_i g_jl + d_j g_il - d_l g_ij),
// returned as one matrix per upper index.  They must agree with nabla on
// coordinate directions, which the tests and suites verify.
std::vector<Matrix<RationalFunction>> christoffel(const BlockMetric& g);

// Diagnostics: both vanish identically for the Levi-Civita connection.
Derivation torsion_defect(const BlockMetric& g, const Derivation& u, const Derivation& v);
RationalFunction compatibility_defect(const BlockMetric& g, const Derivation& u,
                                      const Derivation& v, const Derivation& w);

}  // namespace ncgeom
