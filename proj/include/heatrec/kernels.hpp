#pragma once

#include "heatrec/fundseq.hpp"
#include "heatrec/geometry.hpp"
#include "heatrec/quadrature.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace heatrec {

// ln((4/e) sin^2((s - sigma)/2)) -- the logarithmic factor split off the
// singular diagonal blocks.
double log_weight_kernel(double s, double sigma);

// Trace kernel 2 Phi_n(|x_k(s) - x_l(sigma)|) for a pair of (possibly
// identical) curves; requires the two points to be distinct.
double trace_kernel(const Curve& ck, const Curve& cl,
                    const FundamentalSequence& fund, int n, double s,
                    double sigma);

// Same-curve split of the trace kernel,
//   H(s,sigma) = H1(s,sigma) ln((4/e) sin^2((s-sigma)/2)) + H2(s,sigma),
//   H1 = -I0(gamma r) v_n(r) + I1(gamma r) w_n(r),
// returned as (H1, H2).  The diagonal is analytic:
//   H1(s,s) = -1,
//   H2(s,s) = -2C - 1 - 2 ln(gamma |x'(s)| / 2) + 2 a(n,1)/gamma.
std::pair<double, double> trace_kernel_split(const Curve& c,
                                             const FundamentalSequence& fund,
                                             int n, double s, double sigma);

// Normal-derivative (flux) kernel at the collocation curve ck:
//   Q(s,sigma) = 2 d/dnu(x_k(s)) Phi_n(|x_k(s) - x_l(sigma)|)
//              = -2 h(s,sigma) Phi~_n(r) / |x_k'(s)|,
//   h(s,sigma) = [ (x_k(s)-x_l(sigma))_1 x_k'(s)_2
//                 - (x_k(s)-x_l(sigma))_2 x_k'(s)_1 ] / r.
double flux_kernel(const Curve& ck, const Curve& cl,
                   const FundamentalSequence& fund, int n, double s,
                   double sigma);

// h factor alone (used by tests).
double flux_geometry_factor(const Curve& ck, const Curve& cl, double s,
                            double sigma);

// Same-curve split of the flux kernel, Q = Q1 ln((4/e) sin^2(..)) + Q2 with
//   Q1 = -h [ I1(gamma r) v~_n(r) - I0(gamma r) w~_n(r) ] / |x'(s)|,
//   Q1(s,s) = 0,
//   Q2(s,s) = (x2' x1'' - x1' x2'') / |x'|^3.
std::pair<double, double> flux_kernel_split(const Curve& c,
                                            const FundamentalSequence& fund,
                                            int n, double s, double sigma);

// Shape-derivative kernel coupling the outer collocation point x_2(s) to a
// radial perturbation of the inner curve at x_1(sigma):
//   D_n(s,sigma) = -[ (x_2(s) - x_1(sigma)) . (cos sigma, sin sigma) / r ]
//                  * Phi~_n(r).
double shape_kernel(const Curve& c2, const Curve& c1,
                    const FundamentalSequence& fund, int n, double s,
                    double sigma);

// Discrete Nystrom operator tables on a common grid, one matrix per order
// p = 0..n_max.  Quadrature weights are folded in so that, e.g.,
// (trace11[p] * phi)(i) approximates the order-p single-layer trace on
// curve 1 of a density on curve 1.  shape[p] holds raw D_p(s_i, s_j) values
// (weights applied at system assembly).
struct OperatorTables {
  int m_half = 0;
  std::vector<Eigen::MatrixXd> trace11, trace12, trace21, trace22;
  std::vector<Eigen::MatrixXd> flux21, flux22;
  std::vector<Eigen::MatrixXd> shape;
  Eigen::VectorXd speed1, speed2;  // |x'| at the nodes of each curve
};

// Builds all tables for the curve pair (inner g1, outer g2).  Throws
// std::runtime_error if the curves touch on the grid.  with_shape controls
// whether the D tables are produced.
OperatorTables build_operator_tables(const Curve& g1, const Curve& g2,
                                     const FundamentalSequence& fund,
                                     const QuadGrid& grid,
                                     bool with_shape = false);

}  // namespace heatrec
