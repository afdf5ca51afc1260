#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <string>

namespace heatrec {

// One point of a closed 2pi-periodic parametric curve, with derivatives.
struct CurveSample {
  Eigen::Vector2d point;
  Eigen::Vector2d d1;      // x'(s)
  Eigen::Vector2d d2;      // x''(s)
  double speed = 0.0;      // |x'(s)|
  Eigen::Vector2d normal;  // (x2', -x1')/|x'| -- outward for counterclockwise
};

class Curve {
 public:
  virtual ~Curve() = default;
  virtual CurveSample eval(double s) const = 0;
};

// Curves of the form x(s) = r(s)(cos s, sin s) with r > 0 (starlike about
// the origin, counterclockwise).
class RadialCurveBase : public Curve {
 public:
  virtual double radius(double s) const = 0;
  virtual double radius_d1(double s) const = 0;
  virtual double radius_d2(double s) const = 0;
  CurveSample eval(double s) const final;
};

// Radial curve from closures for r, r', r''.
class FunctionRadialCurve : public RadialCurveBase {
 public:
  FunctionRadialCurve(std::function<double(double)> r,
                      std::function<double(double)> r1,
                      std::function<double(double)> r2)
      : r_(std::move(r)), r1_(std::move(r1)), r2_(std::move(r2)) {}
  double radius(double s) const override { return r_(s); }
  double radius_d1(double s) const override { return r1_(s); }
  double radius_d2(double s) const override { return r2_(s); }

 private:
  std::function<double(double)> r_, r1_, r2_;
};

// Trigonometric basis of degree J:
//   tau_j(s) = cos(j s)        for 0 <= j <= J,
//   tau_j(s) = sin((j - J) s)  for J < j <= 2J.
double trig_basis(int degree, int j, double s);

// Radial curve r(s) = sum_j coeffs[j] tau_j(s), coeffs of length 2J+1.
class TrigRadialCurve : public RadialCurveBase {
 public:
  explicit TrigRadialCurve(Eigen::VectorXd coeffs);
  double radius(double s) const override;
  double radius_d1(double s) const override;
  double radius_d2(double s) const override;
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  int degree() const { return degree_; }

 private:
  Eigen::VectorXd coeffs_;
  int degree_;
};

// General closed curve from closures for x, x', x''.
class ParametricCurve : public Curve {
 public:
  ParametricCurve(std::function<Eigen::Vector2d(double)> p,
                  std::function<Eigen::Vector2d(double)> d1,
                  std::function<Eigen::Vector2d(double)> d2)
      : p_(std::move(p)), d1_(std::move(d1)), d2_(std::move(d2)) {}
  CurveSample eval(double s) const override;

 private:
  std::function<Eigen::Vector2d(double)> p_, d1_, d2_;
};

// Named shape catalogue: "circle" (uses radius), "peanut", "apple",
// "rounded_rectangle", "kite1", "kite2".  Unknown names throw
// std::invalid_argument.
std::unique_ptr<Curve> make_shape(const std::string& name,
                                  double circle_radius = 1.0);

// Winding number of the curve around x (sampled polygon, robust for the
// shapes used here).
int winding_number(const Curve& c, const Eigen::Vector2d& x,
                   int samples = 1024);

// Radius of the curve in polar direction theta about the origin, by ray
// intersection.  Throws std::runtime_error if the ray meets the curve in
// more than one point (curve not starlike about the origin) or not at all.
double starlike_radius(const Curve& c, double theta);

}  // namespace heatrec
