#pragma once

#include "heatrec/data_solver.hpp"
#include "heatrec/synthesis.hpp"

#include <string>
#include <vector>

namespace heatrec {

struct InversionConfig {
  double kappa = 1.0;
  double alpha = 1.0;
  int n_max = 10;        // Laguerre truncation order N
  int m_half = 64;       // mesh parameter M (2M nodes)
  int degree = 5;        // trigonometric shape degree J (2J+1 coefficients)
  double r0 = 0.4;       // initial-guess circle radius
  double lambda0 = 1e-4;
  double lambda_decay = 0.9;
  SolveMode mode = SolveMode::kFinalStep;
  int max_iters = 50;
  double stop_tol = 1e-6;
  // Noise level of the data; when positive, iteration stops once the
  // relative data residual falls to discrepancy_tau * delta (never fit
  // below the noise floor).
  double delta = 0.0;
  double discrepancy_tau = 1.1;
  // Stops when the update norm exceeds this multiple of its running
  // minimum: loss of monotone progress marks the onset of fitting model
  // or measurement error.
  double update_growth_tol = 1.1;
};

struct IterationRecord {
  int iter = 0;
  double lambda = 0.0;
  double update_norm = 0.0;  // inf-norm of the accepted coefficient update
  int halvings = 0;          // positivity-safeguard halvings applied
  double resid = -1.0;       // relative data residual before the update
  double err_inf = -1.0;     // radial errors vs truth; -1 when no truth given
  double err_l2 = -1.0;
};

struct ReconState {
  Eigen::VectorXd coeffs;  // final radial coefficients (2J+1)
  int iterations = 0;
  bool converged = false;  // stop_tol reached within max_iters
  // Why the iteration ended: "update_tol", "discrepancy", "update_growth",
  // "positivity", or "max_iters".
  std::string stop_reason;
  std::vector<IterationRecord> history;
  std::vector<Eigen::VectorXd> coeff_history;  // initial + per-iteration
};

// Radial L-inf and L2 (root-mean-square) distance between two curves that
// are starlike about the origin, compared on a 512-point polar grid.
std::pair<double, double> radial_error(const Curve& a, const Curve& b);

// Regularized Newton-type reconstruction of the inner curve from Cauchy
// data (f, g) given on the outer-curve mesh.  Per iteration: solve the
// mixed field problem on the current guess with the measured flux, then
// solve the Tikhonov-regularized linearized data equation for a radial
// update.  The linearization is the full discrete Jacobian of the
// outer-trace map, obtained by central differences through the field
// solve (two extra solves per coefficient), so it includes the density
// response to the boundary perturbation.  In multi-step mode each stacked
// block is rescaled to the Frobenius norm of the integral-operator shape
// matrix (assemble_shape_matrix), so the regularization parameter keeps
// the calibration of that operator scale; final-step mode uses the raw
// Jacobian block.  lambda_k = lambda0 * lambda_decay^{k-1}; a positivity
// safeguard halves the update (at most 10 times) until the radius stays
// positive.  Stops when the update inf-norm falls below stop_tol, when
// the relative data residual reaches discrepancy_tau * delta (noisy
// data), when the update norm grows past update_growth_tol times its
// running minimum, or at max_iters.  truth, when given, is only used for
// error reporting.
ReconState reconstruct(const InversionConfig& cfg, const Curve& gamma2,
                       const std::vector<Eigen::VectorXd>& f,
                       const std::vector<Eigen::VectorXd>& g,
                       const Curve* truth = nullptr);

}  // namespace heatrec
