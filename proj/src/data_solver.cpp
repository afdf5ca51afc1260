#include "heatrec/data_solver.hpp"

#include <stdexcept>

namespace heatrec {

Eigen::MatrixXd assemble_shape_matrix(const OperatorTables& t,
                                      const DensitySet& d,
                                      const QuadGrid& grid, int degree,
                                      int n) {
  if (t.shape.empty())
    throw std::invalid_argument(
        "assemble_shape_matrix: tables built without shape kernels");
  const int n2 = grid.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n2, n2);
  for (int m = 0; m <= n; ++m)
    p.noalias() += t.shape[n - m] * d.phi1[m].asDiagonal();

  Eigen::MatrixXd basis(n2, 2 * degree + 1);
  for (int k = 0; k < n2; ++k)
    for (int j = 0; j <= 2 * degree; ++j)
      basis(k, j) = trig_basis(degree, j, grid.node(k));

  return grid.smooth_weight() * (p * basis);
}

Eigen::VectorXd assemble_shape_rhs(const OperatorTables& t,
                                   const DensitySet& d,
                                   const Eigen::VectorXd& f_n, int n) {
  return f_n - trace_on_outer(t, d, n);
}

LinearSystem build_system(SolveMode mode,
                          const std::vector<Eigen::MatrixXd>& a_blocks,
                          const std::vector<Eigen::VectorXd>& b_blocks) {
  if (a_blocks.empty() || a_blocks.size() != b_blocks.size())
    throw std::invalid_argument("build_system: block count mismatch");
  if (mode == SolveMode::kFinalStep)
    return {a_blocks.back(), b_blocks.back()};
  const int rows_per = static_cast<int>(a_blocks.front().rows());
  const int cols = static_cast<int>(a_blocks.front().cols());
  const int nb = static_cast<int>(a_blocks.size());
  LinearSystem sys;
  sys.a.resize(nb * rows_per, cols);
  sys.b.resize(nb * rows_per);
  for (int i = 0; i < nb; ++i) {
    sys.a.middleRows(i * rows_per, rows_per) = a_blocks[i];
    sys.b.segment(i * rows_per, rows_per) = b_blocks[i];
  }
  return sys;
}

Eigen::VectorXd solve_tikhonov(const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& b, double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("solve_tikhonov: lambda must be > 0");
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_tikhonov: dimension mismatch");
  const int cols = static_cast<int>(a.cols());
  Eigen::MatrixXd normal = a.transpose() * a;
  normal.diagonal().array() += lambda;
  Eigen::LLT<Eigen::MatrixXd> llt(normal);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("solve_tikhonov: normal equations not SPD");
  Eigen::VectorXd q = llt.solve(a.transpose() * b);
  if (!q.allFinite() || q.size() != cols)
    throw std::runtime_error("solve_tikhonov: non-finite solution");
  return q;
}

}  // namespace heatrec
