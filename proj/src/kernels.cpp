#include "heatrec/kernels.hpp"

#include "heatrec/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatrec {

namespace {

constexpr double kMinSeparation = 1e-12;

double diag_trace_h2(const FundamentalSequence& fund, int n, double speed) {
  return -2.0 * kEulerGamma - 1.0 -
         2.0 * std::log(fund.gamma() * speed / 2.0) +
         2.0 * fund.coeff(n, 1) / fund.gamma();
}

double diag_flux_q2(const CurveSample& cs) {
  const double cross = cs.d1.y() * cs.d2.x() - cs.d1.x() * cs.d2.y();
  return cross / (cs.speed * cs.speed * cs.speed);
}

// h_{k,l}(s,sigma) from precomputed pieces.
double h_factor(const Eigen::Vector2d& delta, const Eigen::Vector2d& d1_at_s,
                double r) {
  return (delta.x() * d1_at_s.y() - delta.y() * d1_at_s.x()) / r;
}

bool near_diagonal(double s, double sigma) {
  return std::fabs(std::sin(0.5 * (s - sigma))) < 1e-14;
}

}  // namespace

double log_weight_kernel(double s, double sigma) {
  const double sn = std::sin(0.5 * (s - sigma));
  return std::log((4.0 / std::numbers::e) * sn * sn);
}

double trace_kernel(const Curve& ck, const Curve& cl,
                    const FundamentalSequence& fund, int n, double s,
                    double sigma) {
  const Eigen::Vector2d x = ck.eval(s).point;
  const Eigen::Vector2d y = cl.eval(sigma).point;
  const double r = (x - y).norm();
  if (r < kMinSeparation)
    throw std::domain_error("trace_kernel: coincident points");
  return 2.0 * fund.phi(n, r);
}

std::pair<double, double> trace_kernel_split(const Curve& c,
                                             const FundamentalSequence& fund,
                                             int n, double s, double sigma) {
  const CurveSample cs = c.eval(s);
  if (near_diagonal(s, sigma))
    return {-1.0, diag_trace_h2(fund, n, cs.speed)};
  const Eigen::Vector2d y = c.eval(sigma).point;
  const double r = (cs.point - y).norm();
  const BesselQuad b = bessel_all(fund.gamma() * r);
  const double v = fund.poly_v(n, r), w = fund.poly_w(n, r);
  const double h = 2.0 * (b.k0 * v + b.k1 * w);
  const double h1 = -b.i0 * v + b.i1 * w;
  return {h1, h - h1 * log_weight_kernel(s, sigma)};
}

double flux_geometry_factor(const Curve& ck, const Curve& cl, double s,
                            double sigma) {
  const CurveSample cs = ck.eval(s);
  const Eigen::Vector2d delta = cs.point - cl.eval(sigma).point;
  const double r = delta.norm();
  if (r < kMinSeparation)
    throw std::domain_error("flux_geometry_factor: coincident points");
  return h_factor(delta, cs.d1, r);
}

double flux_kernel(const Curve& ck, const Curve& cl,
                   const FundamentalSequence& fund, int n, double s,
                   double sigma) {
  const CurveSample cs = ck.eval(s);
  const Eigen::Vector2d delta = cs.point - cl.eval(sigma).point;
  const double r = delta.norm();
  if (r < kMinSeparation)
    throw std::domain_error("flux_kernel: coincident points");
  return -2.0 * h_factor(delta, cs.d1, r) * fund.phi_tilde(n, r) / cs.speed;
}

std::pair<double, double> flux_kernel_split(const Curve& c,
                                            const FundamentalSequence& fund,
                                            int n, double s, double sigma) {
  const CurveSample cs = c.eval(s);
  if (near_diagonal(s, sigma)) return {0.0, diag_flux_q2(cs)};
  const Eigen::Vector2d delta = cs.point - c.eval(sigma).point;
  const double r = delta.norm();
  const double h = h_factor(delta, cs.d1, r);
  const BesselQuad b = bessel_all(fund.gamma() * r);
  const double vt = fund.poly_v_tilde(n, r), wt = fund.poly_w_tilde(n, r);
  const double phit = b.k1 * vt + b.k0 * wt;
  const double q = -2.0 * h * phit / cs.speed;
  const double q1 = -h * (b.i1 * vt - b.i0 * wt) / cs.speed;
  return {q1, q - q1 * log_weight_kernel(s, sigma)};
}

double shape_kernel(const Curve& c2, const Curve& c1,
                    const FundamentalSequence& fund, int n, double s,
                    double sigma) {
  const Eigen::Vector2d delta = c2.eval(s).point - c1.eval(sigma).point;
  const double r = delta.norm();
  if (r < kMinSeparation)
    throw std::domain_error("shape_kernel: coincident points");
  const Eigen::Vector2d dir{std::cos(sigma), std::sin(sigma)};
  return -delta.dot(dir) / r * fund.phi_tilde(n, r);
}

OperatorTables build_operator_tables(const Curve& g1, const Curve& g2,
                                     const FundamentalSequence& fund,
                                     const QuadGrid& grid, bool with_shape) {
  const int n2 = grid.size();
  const int n_ord = fund.n_max() + 1;
  const double gamma = fund.gamma();
  const double ws = grid.smooth_weight();

  std::vector<CurveSample> s1(n2), s2(n2);
  for (int i = 0; i < n2; ++i) {
    s1[i] = g1.eval(grid.node(i));
    s2[i] = g2.eval(grid.node(i));
  }

  OperatorTables t;
  t.m_half = grid.m_half();
  t.speed1.resize(n2);
  t.speed2.resize(n2);
  for (int i = 0; i < n2; ++i) {
    t.speed1[i] = s1[i].speed;
    t.speed2[i] = s2[i].speed;
  }
  auto alloc = [&](std::vector<Eigen::MatrixXd>& v) {
    v.assign(n_ord, Eigen::MatrixXd(n2, n2));
  };
  alloc(t.trace11);
  alloc(t.trace12);
  alloc(t.trace21);
  alloc(t.trace22);
  alloc(t.flux21);
  alloc(t.flux22);
  if (with_shape) alloc(t.shape);

  // Log factor by index difference (same-curve blocks).
  Eigen::VectorXd logk(n2);
  for (int d = 1; d < n2; ++d)
    logk[d] = log_weight_kernel(grid.node(d), 0.0);
  logk[0] = 0.0;  // unused

  // --- same-curve blocks (trace11 on g1, trace22 + flux22 on g2) ---
  auto same_curve = [&](const std::vector<CurveSample>& smp,
                        std::vector<Eigen::MatrixXd>& trace,
                        std::vector<Eigen::MatrixXd>* flux) {
    for (int i = 0; i < n2; ++i) {
      for (int j = i; j < n2; ++j) {
        if (i == j) {
          for (int n = 0; n < n_ord; ++n) {
            trace[n](i, i) = grid.log_weight(i, i) * (-1.0) +
                             ws * diag_trace_h2(fund, n, smp[i].speed);
            if (flux) (*flux)[n](i, i) = ws * diag_flux_q2(smp[i]);
          }
          continue;
        }
        const Eigen::Vector2d delta = smp[i].point - smp[j].point;
        const double r = delta.norm();
        if (r < kMinSeparation)
          throw std::runtime_error(
              "build_operator_tables: curve self-intersection on the grid");
        const BesselQuad b = bessel_all(gamma * r);
        const double lw = logk[j - i];
        const double rw = grid.log_weight(i, j);  // symmetric in (i,j)
        for (int n = 0; n < n_ord; ++n) {
          const double v = fund.poly_v(n, r), w = fund.poly_w(n, r);
          const double h = 2.0 * (b.k0 * v + b.k1 * w);
          const double h1 = -b.i0 * v + b.i1 * w;
          const double h2 = h - h1 * lw;
          const double entry = rw * h1 + ws * h2;
          trace[n](i, j) = entry;
          trace[n](j, i) = entry;
          if (flux) {
            const double vt = fund.poly_v_tilde(n, r);
            const double wt = fund.poly_w_tilde(n, r);
            const double phit = b.k1 * vt + b.k0 * wt;
            const double core = b.i1 * vt - b.i0 * wt;
            const double hij = h_factor(delta, smp[i].d1, r);
            const double hji = h_factor(-delta, smp[j].d1, r);
            const double q1ij = -hij * core / smp[i].speed;
            const double q1ji = -hji * core / smp[j].speed;
            const double q2ij = -2.0 * hij * phit / smp[i].speed - q1ij * lw;
            const double q2ji = -2.0 * hji * phit / smp[j].speed - q1ji * lw;
            (*flux)[n](i, j) = rw * q1ij + ws * q2ij;
            (*flux)[n](j, i) = rw * q1ji + ws * q2ji;
          }
        }
      }
    }
  };
  same_curve(s1, t.trace11, nullptr);
  same_curve(s2, t.trace22, &t.flux22);

  // --- cross blocks, one distance pass for (x2(s_i), x1(s_j)) ---
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) {
      const Eigen::Vector2d delta = s2[i].point - s1[j].point;
      const double r = delta.norm();
      if (r < kMinSeparation)
        throw std::runtime_error("build_operator_tables: curves touch");
      const BesselQuad b = bessel_all(gamma * r);
      const double h21 = h_factor(delta, s2[i].d1, r);
      const Eigen::Vector2d dir{std::cos(grid.node(j)),
                                std::sin(grid.node(j))};
      const double proj = delta.dot(dir) / r;
      for (int n = 0; n < n_ord; ++n) {
        const double v = fund.poly_v(n, r), w = fund.poly_w(n, r);
        const double tr = 2.0 * (b.k0 * v + b.k1 * w);
        t.trace21[n](i, j) = ws * tr;
        t.trace12[n](j, i) = ws * tr;  // distance is symmetric under swap
        const double vt = fund.poly_v_tilde(n, r);
        const double wt = fund.poly_w_tilde(n, r);
        const double phit = b.k1 * vt + b.k0 * wt;
        t.flux21[n](i, j) = ws * (-2.0 * h21 * phit / s2[i].speed);
        if (with_shape) t.shape[n](i, j) = -proj * phit;
      }
    }
  }

  return t;
}

}  // namespace heatrec
