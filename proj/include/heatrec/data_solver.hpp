#pragma once

#include "heatrec/field_solver.hpp"

#include <Eigen/Dense>

#include <vector>

namespace heatrec {

enum class SolveMode { kFinalStep, kMultiStep };

// Order-n block of the linearized data equation in the trigonometric shape
// basis tau_j (degree J, 2J+1 columns):
//   A_ij(n) = (1/2M) sum_k tau_j(s_k) sum_{m<=n} phi1_{m,k} D_{n-m}(s_i,s_k).
// Requires tables built with shape kernels.
Eigen::MatrixXd assemble_shape_matrix(const OperatorTables& t,
                                      const DensitySet& d,
                                      const QuadGrid& grid, int degree, int n);

// Matching right-hand side: the data-equation residual
//   b_i(n) = f_n(s_i) - (single-layer trace of the current densities at
//   s_i),
// with the trace discretized exactly as in `trace_on_outer` (log-split
// quadrature on the same-curve block, smooth rule on the cross block).
Eigen::VectorXd assemble_shape_rhs(const OperatorTables& t,
                                   const DensitySet& d,
                                   const Eigen::VectorXd& f_n, int n);

// Stacks per-order blocks into the regularized update system: final-step
// uses only the highest-order block, multi-step stacks all orders 0..N.
struct LinearSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};
LinearSystem build_system(SolveMode mode,
                          const std::vector<Eigen::MatrixXd>& a_blocks,
                          const std::vector<Eigen::VectorXd>& b_blocks);

// Tikhonov-regularized least squares: solves (A^T A + lambda I) q = A^T b.
// Requires lambda > 0.
Eigen::VectorXd solve_tikhonov(const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& b, double lambda);

}  // namespace heatrec
