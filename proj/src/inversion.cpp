#include "heatrec/inversion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace heatrec {

namespace {

double radial_profile(const Curve& c, double theta) {
  if (const auto* rad = dynamic_cast<const RadialCurveBase*>(&c))
    return rad->radius(theta);
  return starlike_radius(c, theta);
}

// Minimum of the radius over a fine check grid.
double min_radius(const Eigen::VectorXd& coeffs, int degree) {
  const int k = 512;
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    const double s = 2.0 * std::numbers::pi * i / k;
    double r = coeffs[0];
    for (int j = 1; j <= degree; ++j)
      r += coeffs[j] * std::cos(j * s) + coeffs[degree + j] * std::sin(j * s);
    mn = std::min(mn, r);
  }
  return mn;
}

}  // namespace

std::pair<double, double> radial_error(const Curve& a, const Curve& b) {
  const int k = 512;
  double linf = 0.0, sum2 = 0.0;
  for (int i = 0; i < k; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / k;
    const double diff = radial_profile(a, theta) - radial_profile(b, theta);
    linf = std::max(linf, std::fabs(diff));
    sum2 += diff * diff;
  }
  return {linf, std::sqrt(sum2 / k)};
}

ReconState reconstruct(const InversionConfig& cfg, const Curve& gamma2,
                       const std::vector<Eigen::VectorXd>& f,
                       const std::vector<Eigen::VectorXd>& g,
                       const Curve* truth) {
  if (cfg.r0 <= 0.0) throw std::invalid_argument("reconstruct: r0 <= 0");
  if (cfg.max_iters < 0)
    throw std::invalid_argument("reconstruct: max_iters < 0");
  const int n_ord = cfg.n_max + 1;
  if (static_cast<int>(f.size()) != n_ord ||
      static_cast<int>(g.size()) != n_ord)
    throw std::invalid_argument("reconstruct: data order count mismatch");
  const QuadGrid grid(cfg.m_half);
  for (int n = 0; n < n_ord; ++n)
    if (f[n].size() != grid.size() || g[n].size() != grid.size())
      throw std::invalid_argument("reconstruct: data size mismatch");

  const FundamentalSequence fund(cfg.kappa, cfg.alpha, cfg.n_max);
  const int n_coeff = 2 * cfg.degree + 1;

  ReconState state;
  state.coeffs = Eigen::VectorXd::Zero(n_coeff);
  state.coeffs[0] = cfg.r0;
  state.coeff_history.push_back(state.coeffs);

  const int n_nodes = grid.size();
  // Step size for the central-difference linearization; the trace map is
  // analytic in the coefficients, so with O(eps^2) truncation the Jacobian
  // is accurate to ~1e-9, which keeps the update equivariant under grid
  // rotations to below 1e-8.
  const double fd_eps = 1e-5;
  const int first = (cfg.mode == SolveMode::kFinalStep) ? cfg.n_max : 0;
  const bool normalized = (cfg.mode == SolveMode::kMultiStep);

  double fitted_norm2 = 0.0;
  for (int n = first; n < n_ord; ++n) fitted_norm2 += f[n].squaredNorm();
  const double fitted_norm = std::sqrt(fitted_norm2);
  const double discrepancy_target =
      cfg.delta > 0.0 ? cfg.discrepancy_tau * cfg.delta * fitted_norm : 0.0;

  double min_update = std::numeric_limits<double>::infinity();
  state.stop_reason = "max_iters";
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    const double lambda = cfg.lambda0 * std::pow(cfg.lambda_decay, iter - 1);
    const TrigRadialCurve gamma1(state.coeffs);
    const OperatorTables tables = build_operator_tables(
        gamma1, gamma2, fund, grid, /*with_shape=*/normalized);
    const FieldSystem field(tables);
    const DensitySet dens = field.solve_sequence(g);

    std::vector<Eigen::VectorXd> trace(n_ord);
    double resid2 = 0.0;
    for (int n = 0; n < n_ord; ++n) {
      trace[n] = trace_on_outer(tables, dens, n);
      if (n >= first) resid2 += (f[n] - trace[n]).squaredNorm();
    }
    const double rel_resid =
        fitted_norm > 0.0 ? std::sqrt(resid2) / fitted_norm : 0.0;
    if (cfg.delta > 0.0 && std::sqrt(resid2) <= discrepancy_target) {
      state.stop_reason = "discrepancy";
      state.converged = true;
      break;
    }

    // Linearize the data equation in the radial coefficients by
    // differencing through the field solve: each column re-solves the
    // densities on the perturbed curve, so the Jacobian carries both the
    // kernel change and the density response.
    std::vector<Eigen::MatrixXd> jac(
        n_ord, Eigen::MatrixXd(n_nodes, n_coeff));
    for (int j = 0; j < n_coeff; ++j) {
      std::vector<Eigen::VectorXd> trace_plus(n_ord), trace_minus(n_ord);
      for (const double sign : {1.0, -1.0}) {
        Eigen::VectorXd pert = state.coeffs;
        pert[j] += sign * fd_eps;
        const TrigRadialCurve curve_p(pert);
        const OperatorTables tables_p = build_operator_tables(
            curve_p, gamma2, fund, grid, /*with_shape=*/false);
        const FieldSystem field_p(tables_p);
        const DensitySet dens_p = field_p.solve_sequence(g);
        auto& out = (sign > 0) ? trace_plus : trace_minus;
        for (int n = 0; n < n_ord; ++n)
          out[n] = trace_on_outer(tables_p, dens_p, n);
      }
      for (int n = 0; n < n_ord; ++n)
        jac[n].col(j) = (trace_plus[n] - trace_minus[n]) / (2 * fd_eps);
    }

    std::vector<Eigen::MatrixXd> a_blocks;
    std::vector<Eigen::VectorXd> b_blocks;
    for (int n = first; n <= cfg.n_max; ++n) {
      double scale = 1.0;
      if (normalized) {
        const Eigen::MatrixXd shape_op =
            assemble_shape_matrix(tables, dens, grid, cfg.degree, n);
        const double jac_norm = jac[n].norm();
        if (jac_norm > 0.0) scale = shape_op.norm() / jac_norm;
      }
      a_blocks.push_back(scale * jac[n]);
      b_blocks.push_back(scale * (f[n] - trace[n]));
    }
    const LinearSystem sys = build_system(cfg.mode, a_blocks, b_blocks);
    Eigen::VectorXd update = solve_tikhonov(sys.a, sys.b, lambda);

    int halvings = 0;
    bool stuck = false;
    while (min_radius(state.coeffs + update, cfg.degree) <= 0.0) {
      if (++halvings > 10) {
        stuck = true;
        break;
      }
      update *= 0.5;
    }
    if (stuck) {
      state.stop_reason = "positivity";
      break;
    }
    const double update_norm = update.lpNorm<Eigen::Infinity>();
    if (update_norm >= cfg.stop_tol &&
        update_norm > cfg.update_growth_tol * min_update) {
      state.stop_reason = "update_growth";
      break;
    }
    min_update = std::min(min_update, update_norm);

    state.coeffs += update;
    state.coeff_history.push_back(state.coeffs);
    state.iterations = iter;

    IterationRecord rec;
    rec.iter = iter;
    rec.lambda = lambda;
    rec.update_norm = update_norm;
    rec.halvings = halvings;
    rec.resid = rel_resid;
    if (truth) {
      const TrigRadialCurve current(state.coeffs);
      const auto [einf, el2] = radial_error(current, *truth);
      rec.err_inf = einf;
      rec.err_l2 = el2;
    }
    state.history.push_back(rec);

    if (rec.update_norm < cfg.stop_tol) {
      state.stop_reason = "update_tol";
      state.converged = true;
      break;
    }
  }
  return state;
}

}  // namespace heatrec
