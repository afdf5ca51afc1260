#include "heatrec/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace heatrec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CurveSample RadialCurveBase::eval(double s) const {
  const double r = radius(s);
  const double r1 = radius_d1(s);
  const double r2 = radius_d2(s);
  const double c = std::cos(s), sn = std::sin(s);
  CurveSample out;
  out.point = {r * c, r * sn};
  out.d1 = {r1 * c - r * sn, r1 * sn + r * c};
  out.d2 = {(r2 - r) * c - 2.0 * r1 * sn, (r2 - r) * sn + 2.0 * r1 * c};
  out.speed = out.d1.norm();
  if (!(out.speed > 0.0))
    throw std::runtime_error("curve: degenerate parametrization (|x'| = 0)");
  out.normal = {out.d1.y() / out.speed, -out.d1.x() / out.speed};
  return out;
}

CurveSample ParametricCurve::eval(double s) const {
  CurveSample out;
  out.point = p_(s);
  out.d1 = d1_(s);
  out.d2 = d2_(s);
  out.speed = out.d1.norm();
  if (!(out.speed > 0.0))
    throw std::runtime_error("curve: degenerate parametrization (|x'| = 0)");
  out.normal = {out.d1.y() / out.speed, -out.d1.x() / out.speed};
  return out;
}

double trig_basis(int degree, int j, double s) {
  if (degree < 0 || j < 0 || j > 2 * degree)
    throw std::invalid_argument("trig_basis: index out of range");
  if (j <= degree) return std::cos(j * s);
  return std::sin((j - degree) * s);
}

TrigRadialCurve::TrigRadialCurve(Eigen::VectorXd coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1 || coeffs_.size() % 2 == 0)
    throw std::invalid_argument(
        "TrigRadialCurve: coefficient vector must have odd length 2J+1");
  degree_ = (static_cast<int>(coeffs_.size()) - 1) / 2;
}

double TrigRadialCurve::radius(double s) const {
  double r = coeffs_[0];
  for (int j = 1; j <= degree_; ++j)
    r += coeffs_[j] * std::cos(j * s) + coeffs_[degree_ + j] * std::sin(j * s);
  return r;
}

double TrigRadialCurve::radius_d1(double s) const {
  double r = 0.0;
  for (int j = 1; j <= degree_; ++j)
    r += j * (-coeffs_[j] * std::sin(j * s) +
              coeffs_[degree_ + j] * std::cos(j * s));
  return r;
}

double TrigRadialCurve::radius_d2(double s) const {
  double r = 0.0;
  for (int j = 1; j <= degree_; ++j)
    r -= static_cast<double>(j) * j *
         (coeffs_[j] * std::cos(j * s) + coeffs_[degree_ + j] * std::sin(j * s));
  return r;
}

namespace {

std::unique_ptr<Curve> make_circle(double radius) {
  if (radius <= 0.0) throw std::invalid_argument("circle: radius must be > 0");
  return std::make_unique<FunctionRadialCurve>(
      [radius](double) { return radius; }, [](double) { return 0.0; },
      [](double) { return 0.0; });
}

std::unique_ptr<Curve> make_peanut() {
  // r(s) = sqrt(u), u = 0.0625 + 0.1875 cos^2 s
  auto u = [](double s) {
    const double c = std::cos(s);
    return 0.0625 + 0.1875 * c * c;
  };
  auto u1 = [](double s) { return -0.1875 * std::sin(2.0 * s); };
  auto u2 = [](double s) { return -0.375 * std::cos(2.0 * s); };
  return std::make_unique<FunctionRadialCurve>(
      [u](double s) { return std::sqrt(u(s)); },
      [u, u1](double s) { return u1(s) / (2.0 * std::sqrt(u(s))); },
      [u, u1, u2](double s) {
        const double us = u(s), u1s = u1(s);
        return u2(s) / (2.0 * std::sqrt(us)) -
               u1s * u1s / (4.0 * us * std::sqrt(us));
      });
}

std::unique_ptr<Curve> make_apple() {
  // r = p/q, p = 0.45 + 0.3 cos s - 0.1 sin 2s, q = 1 + 0.7 cos s
  auto p = [](double s) {
    return 0.45 + 0.3 * std::cos(s) - 0.1 * std::sin(2.0 * s);
  };
  auto p1 = [](double s) {
    return -0.3 * std::sin(s) - 0.2 * std::cos(2.0 * s);
  };
  auto p2 = [](double s) {
    return -0.3 * std::cos(s) + 0.4 * std::sin(2.0 * s);
  };
  auto q = [](double s) { return 1.0 + 0.7 * std::cos(s); };
  auto q1 = [](double s) { return -0.7 * std::sin(s); };
  auto q2 = [](double s) { return -0.7 * std::cos(s); };
  auto r = [p, q](double s) { return p(s) / q(s); };
  auto r1 = [p, p1, q, q1, r](double s) {
    return (p1(s) - r(s) * q1(s)) / q(s);
  };
  return std::make_unique<FunctionRadialCurve>(
      r, r1, [p2, q, q1, q2, r, r1](double s) {
        return (p2(s) - 2.0 * r1(s) * q1(s) - r(s) * q2(s)) / q(s);
      });
}

std::unique_ptr<Curve> make_rounded_rectangle() {
  // r = u^{-0.1}, u = cos^10 s + sin^10 s
  auto u = [](double s) {
    const double c = std::cos(s), sn = std::sin(s);
    return std::pow(c, 10) + std::pow(sn, 10);
  };
  auto u1 = [](double s) {
    const double c = std::cos(s), sn = std::sin(s);
    return 5.0 * std::sin(2.0 * s) * (std::pow(sn, 8) - std::pow(c, 8));
  };
  auto u2 = [](double s) {
    const double c = std::cos(s), sn = std::sin(s);
    const double s2 = std::sin(2.0 * s);
    return 10.0 * std::cos(2.0 * s) * (std::pow(sn, 8) - std::pow(c, 8)) +
           20.0 * s2 * s2 * (std::pow(sn, 6) + std::pow(c, 6));
  };
  return std::make_unique<FunctionRadialCurve>(
      [u](double s) { return std::pow(u(s), -0.1); },
      [u, u1](double s) { return -0.1 * std::pow(u(s), -1.1) * u1(s); },
      [u, u1, u2](double s) {
        const double us = u(s), u1s = u1(s);
        return 0.11 * std::pow(us, -2.1) * u1s * u1s -
               0.1 * std::pow(us, -1.1) * u2(s);
      });
}

std::unique_ptr<Curve> make_kite(double scale, double c2, double shift,
                                 double b) {
  // x(s) = scale * (cos s + c2 cos 2s + shift, b sin s)
  return std::make_unique<ParametricCurve>(
      [=](double s) -> Eigen::Vector2d {
        return {scale * (std::cos(s) + c2 * std::cos(2.0 * s) + shift),
                scale * b * std::sin(s)};
      },
      [=](double s) -> Eigen::Vector2d {
        return {scale * (-std::sin(s) - 2.0 * c2 * std::sin(2.0 * s)),
                scale * b * std::cos(s)};
      },
      [=](double s) -> Eigen::Vector2d {
        return {scale * (-std::cos(s) - 4.0 * c2 * std::cos(2.0 * s)),
                -scale * b * std::sin(s)};
      });
}

}  // namespace

std::unique_ptr<Curve> make_shape(const std::string& name,
                                  double circle_radius) {
  if (name == "circle") return make_circle(circle_radius);
  if (name == "peanut") return make_peanut();
  if (name == "apple") return make_apple();
  if (name == "rounded_rectangle") return make_rounded_rectangle();
  if (name == "kite1") return make_kite(1.0 / 3.0, 0.55, -0.5, 1.2);
  if (name == "kite2") return make_kite(1.0, 0.8, -0.5, 1.5);
  throw std::invalid_argument("make_shape: unknown shape '" + name + "'");
}

int winding_number(const Curve& c, const Eigen::Vector2d& x, int samples) {
  double total = 0.0;
  Eigen::Vector2d prev = c.eval(0.0).point - x;
  for (int k = 1; k <= samples; ++k) {
    const double s = kTwoPi * k / samples;
    const Eigen::Vector2d cur = c.eval(s).point - x;
    const double cross = prev.x() * cur.y() - prev.y() * cur.x();
    const double dot = prev.dot(cur);
    total += std::atan2(cross, dot);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double starlike_radius(const Curve& c, double theta) {
  const Eigen::Vector2d dir{std::cos(theta), std::sin(theta)};
  // cross(p(s), dir) changes sign where the ray direction is crossed.
  auto f = [&](double s) {
    const Eigen::Vector2d p = c.eval(s).point;
    return p.x() * dir.y() - p.y() * dir.x();
  };
  const int kScan = 2048;
  std::vector<double> roots;
  double s_prev = 0.0, f_prev = f(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double s = kTwoPi * k / kScan;
    const double fs = f(s);
    if (f_prev == 0.0 || f_prev * fs < 0.0) {
      double a = s_prev, b = s, fa = f_prev;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      const double root = 0.5 * (a + b);
      const Eigen::Vector2d p = c.eval(root).point;
      if (p.dot(dir) > 0.0) roots.push_back(p.norm());
      f_prev = fs;
      s_prev = s;
      continue;
    }
    f_prev = fs;
    s_prev = s;
  }
  if (roots.empty())
    throw std::runtime_error("starlike_radius: ray misses the curve");
  for (double r : roots)
    if (std::fabs(r - roots.front()) > 1e-9)
      throw std::runtime_error(
          "starlike_radius: curve not starlike about the origin");
  return roots.front();
}

}  // namespace heatrec
