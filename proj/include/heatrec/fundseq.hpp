#pragma once

#include <vector>

namespace heatrec {

// Fundamental sequence for the semi-discretized heat operator: the chain
//   Delta u_n - gamma^2 u_n = beta * sum_{m<n} u_m,   beta = kappa/alpha,
//   gamma = sqrt(beta)
// has radially symmetric fundamental solutions
//   Phi_n(d)  = K0(gamma d) v_n(d) + K1(gamma d) w_n(d)
// with polynomial factors built from a triangular coefficient table a(n,k):
//   a(n,0) = 1
//   a(n,n) = -beta/(2 gamma n) * a(n-1,n-1)
//   a(n,k) = (1/(2 gamma k)) [ 4 floor((k+1)/2)^2 a(n,k+1)
//                              - beta sum_{m=k-1}^{n-1} a(m,k-1) ],
//            evaluated for k = n-1 down to 1,
// and
//   v_n(r) = sum_{2m<=n}   a(n,2m)   r^{2m}
//   w_n(r) = sum_{2m+1<=n} a(n,2m+1) r^{2m+1}.
// The negative radial derivative -Phi_n'(d) has the same structure,
//   Phi~_n(d) = K1(gamma d) v~_n(d) + K0(gamma d) w~_n(d),
//   v~_n(r) = gamma sum_{2m<=n} a(n,2m) r^{2m}
//             - 2 sum_{m>=1, 2m+1<=n} m a(n,2m+1) r^{2m}
//   w~_n(r) = gamma sum_{2m+1<=n} a(n,2m+1) r^{2m+1}
//             - 2 sum_{m>=1, 2m<=n} m a(n,2m) r^{2m-1}.
class FundamentalSequence {
 public:
  // Requires kappa > 0, alpha > 0, n_max >= 0.
  FundamentalSequence(double kappa, double alpha, int n_max);

  double kappa() const { return kappa_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  int n_max() const { return n_max_; }

  // a(n,k); indices outside the triangle 0 <= k <= n return 0 (empty-sum
  // convention, e.g. a(0,1) = 0 in diagonal formulas).
  double coeff(int n, int k) const;

  double poly_v(int n, double r) const;
  double poly_w(int n, double r) const;
  double poly_v_tilde(int n, double r) const;
  double poly_w_tilde(int n, double r) const;

  // Phi_n(d) and Phi~_n(d) = -Phi_n'(d); require d > 0.
  double phi(int n, double d) const;
  double phi_tilde(int n, double d) const;

 private:
  double kappa_, alpha_, beta_, gamma_;
  int n_max_;
  std::vector<std::vector<double>> a_;  // a_[n][k], 0 <= k <= n
};

}  // namespace heatrec
