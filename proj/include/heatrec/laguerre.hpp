#pragma once

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace heatrec {

// Laguerre polynomial L_n(t) via the three-term recurrence
//   (n+1) L_{n+1}(t) = (2n+1-t) L_n(t) - n L_{n-1}(t),  L_0 = 1, L_1 = 1-t.
double laguerre_poly(int n, double t);

// L_0(t) .. L_N(t) in one recurrence pass.
std::vector<double> laguerre_poly_all(int n_max, double t);

// Gauss-Laguerre nodes and weights for weight e^{-x} on (0, inf), computed
// by the Golub-Welsch eigenvalue method on the Jacobi matrix
// (diag 2i+1, off-diag i).  Nodes ascending; weights positive, summing to 1.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_laguerre(int n_points);

// Scalar Laguerre coefficient sequence of a time signal:
//   coeffs[n] = integral_0^inf e^{-kappa t} L_n(kappa t) f(t) kappa dt / kappa
//             = (1/kappa) integral_0^inf e^{-x} L_n(x) f(x/kappa) dx.
struct LaguerreSeq {
  double kappa = 1.0;
  std::vector<double> coeffs;
};

// Forward transform by Gauss-Laguerre quadrature with max(40, 2(N+1)) nodes,
// exact for polynomial signals of degree <= N+2.  Requires kappa > 0, N >= 0.
LaguerreSeq laguerre_transform(const std::function<double(double)>& f,
                               double kappa, int n_max);

// Series evaluation f(t) ~ kappa * sum_n coeffs[n] L_n(kappa t).
double laguerre_expand(const LaguerreSeq& seq, double t);

}  // namespace heatrec
