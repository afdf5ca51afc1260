#include "heatrec/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace heatrec {

std::vector<double> default_dirichlet_data(double kappa, int n_max) {
  if (kappa <= 0.0)
    throw std::invalid_argument("default_dirichlet_data: kappa <= 0");
  if (n_max < 0)
    throw std::invalid_argument("default_dirichlet_data: n_max < 0");
  std::vector<double> f(n_max + 1);
  const double e = std::exp(1.0);
  for (int n = 0; n <= n_max; ++n)
    f[n] = e * (2.0 + kappa * n * (kappa * (n - 1) - 4.0)) /
           (4.0 * std::pow(kappa + 1.0, n + 3));
  return f;
}

DensitySet solve_direct(const OperatorTables& t,
                        const std::vector<Eigen::VectorXd>& f1,
                        const std::vector<Eigen::VectorXd>& f2) {
  const int n2 = static_cast<int>(t.speed1.size());
  const int n_ord = static_cast<int>(t.trace11.size());
  if (static_cast<int>(f1.size()) != n_ord ||
      static_cast<int>(f2.size()) != n_ord)
    throw std::invalid_argument("solve_direct: order count mismatch");

  Eigen::MatrixXd a(2 * n2, 2 * n2);
  a.topLeftCorner(n2, n2) = t.trace11[0];
  a.topRightCorner(n2, n2) = t.trace12[0];
  a.bottomLeftCorner(n2, n2) = t.trace21[0];
  a.bottomRightCorner(n2, n2) = t.trace22[0];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  if (lu.rcond() < 1e-14)
    throw std::runtime_error("solve_direct: singular Dirichlet system");

  DensitySet d;
  Eigen::VectorXd rhs(2 * n2);
  for (int n = 0; n < n_ord; ++n) {
    Eigen::VectorXd top = f1[n];
    Eigen::VectorXd bottom = f2[n];
    for (int m = 0; m < n; ++m) {
      const int p = n - m;
      top.noalias() -= t.trace11[p] * d.phi1[m];
      top.noalias() -= t.trace12[p] * d.phi2[m];
      bottom.noalias() -= t.trace21[p] * d.phi1[m];
      bottom.noalias() -= t.trace22[p] * d.phi2[m];
    }
    rhs.head(n2) = top;
    rhs.tail(n2) = bottom;
    const Eigen::VectorXd sol = lu.solve(rhs);
    if (!sol.allFinite())
      throw std::runtime_error("solve_direct: non-finite solution");
    d.phi1.push_back(sol.head(n2));
    d.phi2.push_back(sol.tail(n2));
  }
  return d;
}

CauchyData synthesize(const Curve& g1, const Curve& g2, double kappa,
                      double alpha, int n_max, int m_half) {
  const FundamentalSequence fund(kappa, alpha, n_max);
  const QuadGrid fine(2 * m_half);
  const OperatorTables t = build_operator_tables(g1, g2, fund, fine);

  const std::vector<double> f2c = default_dirichlet_data(kappa, n_max);
  std::vector<Eigen::VectorXd> f1(n_max + 1), f2(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    f1[n] = Eigen::VectorXd::Zero(fine.size());
    f2[n] = Eigen::VectorXd::Constant(fine.size(), f2c[n]);
  }
  const DensitySet d = solve_direct(t, f1, f2);

  CauchyData data;
  data.kappa = kappa;
  data.alpha = alpha;
  data.n_max = n_max;
  data.m_half = m_half;
  data.f.resize(n_max + 1);
  data.g.resize(n_max + 1);
  const int n2 = 2 * m_half;
  for (int n = 0; n <= n_max; ++n) {
    const Eigen::VectorXd flux = flux_on_outer(t, d, n);
    data.f[n] = Eigen::VectorXd::Constant(n2, f2c[n]);
    data.g[n].resize(n2);
    for (int i = 0; i < n2; ++i) data.g[n][i] = flux[2 * i];
  }
  return data;
}

namespace {

// Deterministic standard-normal stream: Box-Muller over raw mt19937_64
// words, independent of the standard library's distribution internals.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Eigen::VectorXd vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = next();
    return v;
  }

 private:
  double uniform() {
    // (0,1), never exactly 0 or 1.
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1p-53;
  }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

CauchyData add_noise(const CauchyData& clean, double delta,
                     std::uint64_t seed) {
  if (delta < 0.0) throw std::invalid_argument("add_noise: delta < 0");
  CauchyData noisy = clean;
  noisy.delta = delta;
  noisy.seed = seed;
  if (delta == 0.0) return noisy;

  NormalStream stream(seed);
  const int n2 = 2 * clean.m_half;
  for (int n = 0; n <= clean.n_max; ++n) {
    const Eigen::VectorXd u = stream.vector(n2);
    const Eigen::VectorXd v = stream.vector(n2);
    const double fn = clean.f[n].norm();
    if (fn > 0.0) noisy.f[n] += delta * (fn / u.norm()) * u;
    const double gn = clean.g[n].norm();
    if (gn > 0.0) noisy.g[n] += delta * (gn / v.norm()) * v;
  }
  return noisy;
}

}  // namespace heatrec
