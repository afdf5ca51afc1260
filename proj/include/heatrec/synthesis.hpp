#pragma once

#include "heatrec/field_solver.hpp"

#include <cstdint>
#include <vector>

namespace heatrec {

// Cauchy data on the outer-curve mesh: per order n = 0..n_max, nodal values
// of the Dirichlet trace f and the Neumann trace g on the 2M nodes.
struct CauchyData {
  double kappa = 1.0;
  double alpha = 1.0;
  int n_max = 0;
  int m_half = 0;
  double delta = 0.0;     // relative noise level actually applied
  std::uint64_t seed = 0;  // stream seed used for the noise draw
  std::vector<Eigen::VectorXd> f, g;
};

// Laguerre coefficients of the heating profile imposed on the outer curve:
//   f_{2,n} = e (2 + kappa n (kappa (n-1) - 4)) / (4 (kappa+1)^{n+3}),
// constant along the curve.  The inner curve is held at zero.
std::vector<double> default_dirichlet_data(double kappa, int n_max);

// All-Dirichlet direct solve: given nodal Dirichlet data per order on both
// curves, returns the single-layer densities (order-recursive, same trace
// tables as the field solver but with Dirichlet rows on both curves).
DensitySet solve_direct(const OperatorTables& t,
                        const std::vector<Eigen::VectorXd>& f1,
                        const std::vector<Eigen::VectorXd>& f2);

// Full data synthesis: solves the direct problem on a twice-finer mesh
// (m_half_forward = 2 m_half), extracts the flux via the jump relation, and
// restricts both traces to the requested mesh.  The Dirichlet data are the
// default heating profile above.
CauchyData synthesize(const Curve& g1, const Curve& g2, double kappa,
                      double alpha, int n_max, int m_half);

// Additive measurement noise: for every order n with a nonzero trace,
//   f_n^d = f_n + delta (\|f_n\|_2 / \|u\|_2) u,
// with u a fresh standard-normal nodal vector, and likewise for g_n with a
// fresh v; draws come from a single mt19937_64 stream seeded with `seed`
// (order: u_0, v_0, u_1, v_1, ...), via Box-Muller on
// ((x >> 11) + 0.5) 2^{-53} uniforms so the stream is platform-independent.
// The perturbed data satisfy \|f_n^d - f_n\|_2 = delta \|f_n\|_2 exactly.
CauchyData add_noise(const CauchyData& clean, double delta,
                     std::uint64_t seed);

}  // namespace heatrec
