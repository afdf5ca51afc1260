#include "heatrec/laguerre.hpp"

#include <algorithm>
#include <stdexcept>

namespace heatrec {

double laguerre_poly(int n, double t) {
  if (n < 0) throw std::domain_error("laguerre_poly: negative degree");
  double lm1 = 1.0;  // L_0
  if (n == 0) return lm1;
  double l = 1.0 - t;  // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 - t) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_poly_all(int n_max, double t) {
  if (n_max < 0) throw std::domain_error("laguerre_poly_all: negative degree");
  std::vector<double> out(n_max + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;
  out[1] = 1.0 - t;
  for (int k = 1; k < n_max; ++k)
    out[k + 1] = ((2.0 * k + 1.0 - t) * out[k] - k * out[k - 1]) / (k + 1.0);
  return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_laguerre(int n_points) {
  if (n_points < 1) throw std::domain_error("gauss_laguerre: need >= 1 point");
  Eigen::VectorXd diag(n_points), sub(std::max(n_points - 1, 0));
  for (int i = 0; i < n_points; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 1; i < n_points; ++i) sub[i - 1] = static_cast<double>(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre: eigensolver failed");
  Eigen::VectorXd nodes = es.eigenvalues();
  Eigen::VectorXd weights(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double v = es.eigenvectors()(0, i);
    weights[i] = v * v;  // first moment of e^{-x} is 1
  }
  return {nodes, weights};
}

LaguerreSeq laguerre_transform(const std::function<double(double)>& f,
                               double kappa, int n_max) {
  if (kappa <= 0.0) throw std::domain_error("laguerre_transform: kappa <= 0");
  if (n_max < 0) throw std::domain_error("laguerre_transform: negative order");
  const int n_nodes = std::max(40, 2 * (n_max + 1));
  auto [x, w] = gauss_laguerre(n_nodes);

  LaguerreSeq seq;
  seq.kappa = kappa;
  seq.coeffs.assign(n_max + 1, 0.0);
  for (int i = 0; i < n_nodes; ++i) {
    const double fval = f(x[i] / kappa);
    const auto ln = laguerre_poly_all(n_max, x[i]);
    for (int n = 0; n <= n_max; ++n) seq.coeffs[n] += w[i] * ln[n] * fval;
  }
  for (double& c : seq.coeffs) c /= kappa;
  return seq;
}

double laguerre_expand(const LaguerreSeq& seq, double t) {
  if (seq.coeffs.empty()) return 0.0;
  const auto ln =
      laguerre_poly_all(static_cast<int>(seq.coeffs.size()) - 1, seq.kappa * t);
  double s = 0.0;
  for (std::size_t n = 0; n < seq.coeffs.size(); ++n) s += seq.coeffs[n] * ln[n];
  return seq.kappa * s;
}

}  // namespace heatrec
