#pragma once

#include "heatrec/kernels.hpp"

#include <Eigen/Dense>

#include <vector>

namespace heatrec {

// Nodal single-layer densities per order, phi1 on the inner curve, phi2 on
// the outer curve; each vector has 2M entries (densities are pre-multiplied
// by the local speed |x'|, i.e. they absorb the arc-length factor).
struct DensitySet {
  std::vector<Eigen::VectorXd> phi1, phi2;
};

// The order-0 mixed system matrix (Dirichlet trace on the inner curve, flux
// with jump term on the outer curve).  The same matrix serves every order;
// only right-hand sides change.
Eigen::MatrixXd assemble_field_matrix(const OperatorTables& t);

// LU-factored mixed boundary system.  Throws std::runtime_error when the
// factorization signals a (near-)singular matrix, which for valid input
// means degenerate geometry.
class FieldSystem {
 public:
  explicit FieldSystem(const OperatorTables& tables);

  // Solves the order-recursive system for all orders: the order-n unknowns
  // see right-hand sides built from orders m < n.  g[n] holds the Neumann
  // data on the outer-curve nodes; the inner curve carries homogeneous
  // Dirichlet data.
  DensitySet solve_sequence(const std::vector<Eigen::VectorXd>& g) const;

  const Eigen::PartialPivLU<Eigen::MatrixXd>& lu() const { return lu_; }

 private:
  const OperatorTables& tables_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

// Dirichlet trace of the order-n potential on the outer curve:
//   sum_{m<=n} trace21[n-m] phi1_m + trace22[n-m] phi2_m.
Eigen::VectorXd trace_on_outer(const OperatorTables& t, const DensitySet& d,
                               int n);

// Neumann trace (flux) of the order-n potential on the outer curve via the
// jump relation:
//   sum_{m<=n} phi2_m / |x2'| + sum_{m<=n} flux21[n-m] phi1_m
//                             + flux22[n-m] phi2_m.
Eigen::VectorXd flux_on_outer(const OperatorTables& t, const DensitySet& d,
                              int n);

// Order-n potential at an interior point of the annulus,
//   u_n(x) = (1/2M) sum_l sum_j sum_{m<=n} phi^l_{m,j}
//                     2 Phi_{n-m}(|x - x_l(s_j)|).
// Throws std::domain_error if x is not strictly inside the annulus.
double eval_potential(const Curve& g1, const Curve& g2,
                      const FundamentalSequence& fund, const QuadGrid& grid,
                      const DensitySet& d, const Eigen::Vector2d& x, int n);

}  // namespace heatrec
