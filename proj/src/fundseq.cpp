#include "heatrec/fundseq.hpp"

#include "heatrec/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace heatrec {

FundamentalSequence::FundamentalSequence(double kappa, double alpha, int n_max)
    : kappa_(kappa), alpha_(alpha), n_max_(n_max) {
  if (kappa <= 0.0 || alpha <= 0.0)
    throw std::invalid_argument(
        "FundamentalSequence: kappa and alpha must be > 0");
  if (n_max < 0)
    throw std::invalid_argument("FundamentalSequence: n_max must be >= 0");
  beta_ = kappa_ / alpha_;
  gamma_ = std::sqrt(beta_);

  a_.resize(n_max_ + 1);
  a_[0] = {1.0};
  for (int n = 1; n <= n_max_; ++n) {
    a_[n].assign(n + 1, 0.0);
    a_[n][0] = 1.0;
    a_[n][n] = -beta_ / (2.0 * gamma_ * n) * a_[n - 1][n - 1];
    for (int k = n - 1; k >= 1; --k) {
      const double half = std::floor((k + 1) / 2.0);
      double sum = 0.0;
      for (int m = k - 1; m <= n - 1; ++m) sum += a_[m][k - 1];
      a_[n][k] = (4.0 * half * half * a_[n][k + 1] - beta_ * sum) /
                 (2.0 * gamma_ * k);
    }
  }
}

double FundamentalSequence::coeff(int n, int k) const {
  if (n < 0 || n > n_max_)
    throw std::out_of_range("FundamentalSequence::coeff: order out of range");
  if (k < 0 || k > n) return 0.0;
  return a_[n][k];
}

double FundamentalSequence::poly_v(int n, double r) const {
  const double r2 = r * r;
  // Horner in r^2 over even coefficients a(n, 2m), highest first.
  double v = 0.0;
  for (int m = n / 2; m >= 0; --m) v = v * r2 + a_[n][2 * m];
  return v;
}

double FundamentalSequence::poly_w(int n, double r) const {
  if (n < 1) return 0.0;
  const double r2 = r * r;
  double w = 0.0;
  for (int m = (n - 1) / 2; m >= 0; --m) w = w * r2 + a_[n][2 * m + 1];
  return w * r;
}

double FundamentalSequence::poly_v_tilde(int n, double r) const {
  const double r2 = r * r;
  double v = 0.0;
  for (int m = n / 2; m >= 0; --m) v = v * r2 + a_[n][2 * m];
  double corr = 0.0;
  for (int m = (n - 1) / 2; m >= 1; --m) corr = corr * r2 + m * a_[n][2 * m + 1];
  return gamma_ * v - 2.0 * corr * r2;
}

double FundamentalSequence::poly_w_tilde(int n, double r) const {
  const double r2 = r * r;
  double w = 0.0;
  if (n >= 1)
    for (int m = (n - 1) / 2; m >= 0; --m) w = w * r2 + a_[n][2 * m + 1];
  double corr = 0.0;
  for (int m = n / 2; m >= 1; --m) corr = corr * r2 + m * a_[n][2 * m];
  return gamma_ * w * r - 2.0 * corr * r;
}

double FundamentalSequence::phi(int n, double d) const {
  if (!(d > 0.0)) throw std::domain_error("phi: distance must be > 0");
  const BesselQuad b = bessel_all(gamma_ * d);
  return b.k0 * poly_v(n, d) + b.k1 * poly_w(n, d);
}

double FundamentalSequence::phi_tilde(int n, double d) const {
  if (!(d > 0.0)) throw std::domain_error("phi_tilde: distance must be > 0");
  const BesselQuad b = bessel_all(gamma_ * d);
  return b.k1 * poly_v_tilde(n, d) + b.k0 * poly_w_tilde(n, d);
}

}  // namespace heatrec
