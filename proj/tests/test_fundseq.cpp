#include "heatrec/fundseq.hpp"

#include "heatrec/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace heatrec;

TEST_CASE("coefficient table at unit parameters") {
  // kappa = alpha = 1 => beta = gamma = 1.
  const FundamentalSequence fund(1.0, 1.0, 4);
  CHECK(fund.beta() == 1.0);
  CHECK(fund.gamma() == 1.0);
  for (int n = 0; n <= 4; ++n) CHECK(fund.coeff(n, 0) == 1.0);
  // a(1,1) = -beta/(2 gamma) * a(0,0) = -1/2.
  CHECK(fund.coeff(1, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  // a(2,2) = -beta/(4 gamma) * a(1,1) = 1/8.
  CHECK(fund.coeff(2, 2) == doctest::Approx(0.125).epsilon(1e-15));
  // a(2,1) = (1/2)[4 a(2,2) - (a(0,0) + a(1,0))] = (1/2)(1/2 - 2) = -3/4.
  CHECK(fund.coeff(2, 1) == doctest::Approx(-0.75).epsilon(1e-15));
  // Outside the triangle the table reads as zero.
  CHECK(fund.coeff(0, 1) == 0.0);
  CHECK(fund.coeff(3, 4) == 0.0);
  CHECK(fund.coeff(2, -1) == 0.0);
}

TEST_CASE("diagonal recursion at non-unit parameters") {
  // kappa = 2, alpha = 0.5 => beta = 4, gamma = 2.
  const FundamentalSequence fund(2.0, 0.5, 3);
  CHECK(fund.beta() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(fund.gamma() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(fund.coeff(1, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(fund.coeff(2, 2) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("low-order polynomial factors") {
  const FundamentalSequence fund(1.0, 1.0, 3);
  for (double r : {0.2, 1.0, 2.7}) {
    CAPTURE(r);
    CHECK(fund.poly_v(0, r) == 1.0);
    CHECK(fund.poly_w(0, r) == 0.0);
    CHECK(fund.poly_v(1, r) == 1.0);
    CHECK(fund.poly_w(1, r) == doctest::Approx(-r / 2).epsilon(1e-15));
    // v~_0 = gamma, w~_0 = 0; w~_1 = gamma a(1,1) r = -r/2 at gamma = 1.
    CHECK(fund.poly_v_tilde(0, r) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fund.poly_w_tilde(0, r) == 0.0);
    CHECK(fund.poly_w_tilde(1, r) == doctest::Approx(-r / 2).epsilon(1e-15));
  }
}

TEST_CASE("order zero reduces to the K0 fundamental solution") {
  const FundamentalSequence fund(1.0, 1.0, 2);
  for (double d : {0.3, 1.0, 4.2}) {
    CAPTURE(d);
    CHECK(fund.phi(0, d) == doctest::Approx(bessel_k0(d)).epsilon(1e-14));
    CHECK(fund.phi_tilde(0, d) ==
          doctest::Approx(bessel_k1(d)).epsilon(1e-14));
  }
}

TEST_CASE("phi_tilde is the negative radial derivative") {
  const FundamentalSequence fund(1.0, 1.0, 5);
  const double h = 1e-5;
  for (int n = 0; n <= 5; ++n)
    for (double d : {0.3, 0.8, 1.5, 3.0}) {
      CAPTURE(n);
      CAPTURE(d);
      const double fd = (fund.phi(n, d - h) - fund.phi(n, d + h)) / (2 * h);
      CHECK(fund.phi_tilde(n, d) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("the sequence satisfies the coupled equation chain") {
  // Delta u - gamma^2 u = beta sum_{m<n} u_m with u_n(x) = Phi_n(|x|):
  // radial Laplacian residual by central differences, h = 1e-4.
  const FundamentalSequence fund(1.0, 1.0, 5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.4, 2.5);
  const double h = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    const double r = dist(rng);
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      CAPTURE(r);
      const double up = fund.phi(n, r + h);
      const double u0 = fund.phi(n, r);
      const double um = fund.phi(n, r - h);
      const double lap = (up - 2 * u0 + um) / (h * h) + (up - um) / (2 * h * r);
      double rhs = 0.0;
      for (int m = 0; m < n; ++m) rhs += fund.phi(m, r);
      CHECK(std::abs(lap - u0 - rhs) <= 1e-4);
    }
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(FundamentalSequence(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FundamentalSequence(1.0, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FundamentalSequence(1.0, 1.0, -1), std::invalid_argument);
}
