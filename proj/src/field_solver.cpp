#include "heatrec/field_solver.hpp"

#include "heatrec/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace heatrec {

Eigen::MatrixXd assemble_field_matrix(const OperatorTables& t) {
  const int n2 = static_cast<int>(t.speed1.size());
  Eigen::MatrixXd a(2 * n2, 2 * n2);
  a.topLeftCorner(n2, n2) = t.trace11[0];
  a.topRightCorner(n2, n2) = t.trace12[0];
  a.bottomLeftCorner(n2, n2) = t.flux21[0];
  a.bottomRightCorner(n2, n2) = t.flux22[0];
  for (int i = 0; i < n2; ++i)
    a(n2 + i, n2 + i) += 1.0 / t.speed2[i];  // jump term of the flux trace
  return a;
}

FieldSystem::FieldSystem(const OperatorTables& tables) : tables_(tables) {
  const Eigen::MatrixXd a = assemble_field_matrix(tables);
  if (!a.allFinite())
    throw std::runtime_error("FieldSystem: non-finite system matrix");
  lu_.compute(a);
  if (lu_.rcond() < 1e-14)
    throw std::runtime_error(
        "FieldSystem: singular system matrix (degenerate geometry)");
}

DensitySet FieldSystem::solve_sequence(
    const std::vector<Eigen::VectorXd>& g) const {
  const OperatorTables& t = tables_;
  const int n2 = static_cast<int>(t.speed1.size());
  const int n_ord = static_cast<int>(t.trace11.size());
  if (static_cast<int>(g.size()) != n_ord)
    throw std::invalid_argument("solve_sequence: order count mismatch");
  for (const auto& gn : g)
    if (gn.size() != n2)
      throw std::invalid_argument("solve_sequence: nodal size mismatch");

  const Eigen::VectorXd inv_speed2 = t.speed2.cwiseInverse();
  DensitySet d;
  d.phi1.reserve(n_ord);
  d.phi2.reserve(n_ord);

  Eigen::VectorXd rhs(2 * n2);
  for (int n = 0; n < n_ord; ++n) {
    Eigen::VectorXd top = Eigen::VectorXd::Zero(n2);
    Eigen::VectorXd bottom = g[n];
    for (int m = 0; m < n; ++m) {
      const int p = n - m;
      top.noalias() -= t.trace11[p] * d.phi1[m];
      top.noalias() -= t.trace12[p] * d.phi2[m];
      bottom.noalias() -= t.flux21[p] * d.phi1[m];
      bottom.noalias() -= t.flux22[p] * d.phi2[m];
      bottom -= inv_speed2.cwiseProduct(d.phi2[m]);
    }
    rhs.head(n2) = top;
    rhs.tail(n2) = bottom;
    const Eigen::VectorXd sol = lu_.solve(rhs);
    if (!sol.allFinite())
      throw std::runtime_error("solve_sequence: solve produced non-finite "
                               "values");
    d.phi1.push_back(sol.head(n2));
    d.phi2.push_back(sol.tail(n2));
  }
  return d;
}

Eigen::VectorXd trace_on_outer(const OperatorTables& t, const DensitySet& d,
                               int n) {
  const int n2 = static_cast<int>(t.speed1.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n2);
  for (int m = 0; m <= n; ++m) {
    out.noalias() += t.trace21[n - m] * d.phi1[m];
    out.noalias() += t.trace22[n - m] * d.phi2[m];
  }
  return out;
}

Eigen::VectorXd flux_on_outer(const OperatorTables& t, const DensitySet& d,
                              int n) {
  const int n2 = static_cast<int>(t.speed1.size());
  const Eigen::VectorXd inv_speed2 = t.speed2.cwiseInverse();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n2);
  for (int m = 0; m <= n; ++m) {
    out += inv_speed2.cwiseProduct(d.phi2[m]);
    out.noalias() += t.flux21[n - m] * d.phi1[m];
    out.noalias() += t.flux22[n - m] * d.phi2[m];
  }
  return out;
}

double eval_potential(const Curve& g1, const Curve& g2,
                      const FundamentalSequence& fund, const QuadGrid& grid,
                      const DensitySet& d, const Eigen::Vector2d& x, int n) {
  if (n < 0 || n > fund.n_max())
    throw std::invalid_argument("eval_potential: order out of range");
  if (winding_number(g2, x) != 1 || winding_number(g1, x) != 0)
    throw std::domain_error("eval_potential: point not inside the annulus");

  const int n2 = grid.size();
  double acc = 0.0;
  for (int j = 0; j < n2; ++j) {
    const double s = grid.node(j);
    const double r1 = (x - g1.eval(s).point).norm();
    const double r2 = (x - g2.eval(s).point).norm();
    for (int m = 0; m <= n; ++m) {
      acc += d.phi1[m][j] * 2.0 * fund.phi(n - m, r1);
      acc += d.phi2[m][j] * 2.0 * fund.phi(n - m, r2);
    }
  }
  return acc * grid.smooth_weight();
}

}  // namespace heatrec
