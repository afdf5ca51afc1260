#include "heatrec/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatrec {

QuadGrid::QuadGrid(int m_half) : m_half_(m_half) {
  if (m_half < 1) throw std::invalid_argument("QuadGrid: M must be >= 1");
  const int n = 2 * m_half_;
  nodes_.resize(n);
  for (int k = 0; k < n; ++k) nodes_[k] = std::numbers::pi * k / m_half_;
  logw_.resize(n);
  for (int d = 0; d < n; ++d) logw_[d] = log_weight_at(nodes_[d], 0);
}

double QuadGrid::log_weight_at(double s, int k) const {
  const double t = s - nodes_[k];
  double acc = 1.0;
  for (int m = 1; m < m_half_; ++m) acc += 2.0 * std::cos(m * t) / m;
  acc -= std::cos(m_half_ * t) / m_half_;
  return -acc / size();
}

double QuadGrid::integrate_smooth(const Eigen::VectorXd& values) const {
  if (values.size() != size())
    throw std::invalid_argument("integrate_smooth: size mismatch");
  return values.sum() / size();
}

double QuadGrid::integrate_log(const Eigen::VectorXd& values, int i) const {
  if (values.size() != size())
    throw std::invalid_argument("integrate_log: size mismatch");
  if (i < 0 || i >= size())
    throw std::out_of_range("integrate_log: collocation index");
  double acc = 0.0;
  for (int k = 0; k < size(); ++k) acc += log_weight(i, k) * values[k];
  return acc;
}

}  // namespace heatrec
