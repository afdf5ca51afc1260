#pragma once

#include <Eigen/Dense>

namespace heatrec {

// Uniform periodic mesh s_k = k pi / M, k = 0..2M-1, with the two Nystrom
// rules used throughout:
//
//  smooth:   (1/2pi) int_0^2pi f(sigma) dsigma        ~ (1/2M) sum_k f(s_k)
//  log:      (1/2pi) int_0^2pi f(sigma) ln((4/e) sin^2((s_i-sigma)/2)) dsigma
//                                                     ~ sum_k R_k(s_i) f(s_k)
// with the trigonometric weights
//   R_k(s) = -(1/2M) [ 1 + 2 sum_{m=1}^{M-1} cos(m(s-s_k))/m
//                        - cos(M(s-s_k))/M ],
// which depend only on (i-k) mod 2M on the mesh.  The rule is exact for
// trigonometric polynomials of degree <= M; sum_k R_k(s_i) = -1 for every i
// (the ln(4 sin^2) part integrates to zero, the 1/e contributes -1).
class QuadGrid {
 public:
  explicit QuadGrid(int m_half);  // m_half = M >= 1

  int m_half() const { return m_half_; }
  int size() const { return 2 * m_half_; }                  // number of nodes
  double node(int k) const { return nodes_[k]; }
  const Eigen::VectorXd& nodes() const { return nodes_; }
  double smooth_weight() const { return 1.0 / size(); }

  // R_k(s_i) looked up by index difference (i - k) mod 2M.
  double log_weight(int i, int k) const {
    int d = (i - k) % size();
    if (d < 0) d += size();
    return logw_[d];
  }

  // Off-mesh evaluation of R_k(s) (used by tests; the solvers only need the
  // mesh values above).
  double log_weight_at(double s, int k) const;

  // (1/2M) sum_k values[k]
  double integrate_smooth(const Eigen::VectorXd& values) const;
  // sum_k R_k(s_i) values[k]
  double integrate_log(const Eigen::VectorXd& values, int i) const;

 private:
  int m_half_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd logw_;  // R by index difference
};

}  // namespace heatrec
