#include "heatrec/specfun.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace heatrec {

namespace {

constexpr int kMaxSeriesIndex = 60;
constexpr double kRelTol = 1e-15;
// Above this argument the double-precision K series has lost too many digits
// to cancellation; switch to extended precision.  e^{2z}*eps at z = 5 is
// ~2e-12 relative, comfortably inside the 1e-10 accuracy budget.
constexpr double kDoubleLimit = 5.0;
constexpr double kValidatedLimit = 30.0;

std::atomic<bool> g_range_warned{false};

void warn_range(double z) {
  if (!g_range_warned.exchange(true)) {
    std::fprintf(stderr,
                 "heatrec: bessel argument %.3g exceeds validated range "
                 "[0, 30]; series accuracy degrades (warning emitted once)\n",
                 z);
  }
}

// Double-precision pass.  K terms are regrouped as
//   K0 = sum_n (psi(n) - lg) t_n,            t_n = (z/2)^{2n} / (n!)^2
//   K1 = 1/z + sum_n (lg - (psi(n+1)+psi(n))/2) u_n,
//                                             u_n = (z/2)^{2n+1} / (n!(n+1)!)
// with lg = ln(z/2) + C -- the same series, summed term-by-term so the
// truncation test can watch the assembled function value.
BesselQuad series_double(double z) {
  const double h = 0.5 * z;
  const double q = h * h;
  const double lg = std::log(h) + kEulerGamma;

  double t = 1.0, u = h;          // t_n, u_n
  double i0 = 1.0, i1 = h;
  double k0 = -lg;                // n = 0 term: (psi(0) - lg) * 1
  double k1 = 1.0 / z + (lg - 0.5) * h;
  double psi = 0.0, psi1 = 1.0;   // psi(n), psi(n+1)
  bool di0 = false, di1 = false, dk0 = false, dk1 = false;

  for (int n = 1; n <= kMaxSeriesIndex && !(di0 && di1 && dk0 && dk1); ++n) {
    t *= q / (static_cast<double>(n) * n);
    u *= q / (static_cast<double>(n) * (n + 1));
    psi = psi1;
    psi1 += 1.0 / (n + 1);
    if (!di0) {
      i0 += t;
      di0 = t < kRelTol * std::fabs(i0);
    }
    if (!di1) {
      i1 += u;
      di1 = u < kRelTol * std::fabs(i1);
    }
    if (!dk0) {
      const double term = (psi - lg) * t;
      k0 += term;
      dk0 = std::fabs(term) < kRelTol * std::fabs(k0);
    }
    if (!dk1) {
      const double term = (lg - 0.5 * (psi1 + psi)) * u;
      k1 += term;
      dk1 = std::fabs(term) < kRelTol * std::fabs(k1);
    }
  }
  return {i0, i1, k0, k1};
}

// Same series at 320-bit working precision.  Truncation decisions are made
// on double-rounded magnitudes so both paths follow the same rule.
BesselQuad series_mpfr(double z) {
  constexpr mpfr_prec_t kPrec = 320;
  mpfr_t h, q, t, u, s0, s1, k0, k1, psi, psi1, lg, tmp;
  mpfr_inits2(kPrec, h, q, t, u, s0, s1, k0, k1, psi, psi1, lg, tmp,
              static_cast<mpfr_ptr>(nullptr));

  mpfr_set_d(h, z, MPFR_RNDN);
  mpfr_div_ui(h, h, 2, MPFR_RNDN);
  mpfr_sqr(q, h, MPFR_RNDN);
  mpfr_log(lg, h, MPFR_RNDN);
  mpfr_const_euler(tmp, MPFR_RNDN);
  mpfr_add(lg, lg, tmp, MPFR_RNDN);

  mpfr_set_ui(t, 1, MPFR_RNDN);
  mpfr_set_ui(s0, 1, MPFR_RNDN);
  mpfr_set(u, h, MPFR_RNDN);
  mpfr_set(s1, h, MPFR_RNDN);
  mpfr_neg(k0, lg, MPFR_RNDN);
  // k1 = 1/z + (lg - 1/2) * h
  mpfr_set_d(tmp, 0.5, MPFR_RNDN);
  mpfr_sub(tmp, lg, tmp, MPFR_RNDN);
  mpfr_mul(tmp, tmp, h, MPFR_RNDN);
  mpfr_set_d(k1, z, MPFR_RNDN);
  mpfr_ui_div(k1, 1, k1, MPFR_RNDN);
  mpfr_add(k1, k1, tmp, MPFR_RNDN);
  mpfr_set_ui(psi, 0, MPFR_RNDN);
  mpfr_set_ui(psi1, 1, MPFR_RNDN);

  bool di0 = false, di1 = false, dk0 = false, dk1 = false;
  for (int n = 1; n <= kMaxSeriesIndex && !(di0 && di1 && dk0 && dk1); ++n) {
    mpfr_mul(t, t, q, MPFR_RNDN);
    mpfr_div_ui(t, t, static_cast<unsigned long>(n) * n, MPFR_RNDN);
    mpfr_mul(u, u, q, MPFR_RNDN);
    mpfr_div_ui(u, u, static_cast<unsigned long>(n) * (n + 1), MPFR_RNDN);
    mpfr_set(psi, psi1, MPFR_RNDN);
    mpfr_set_ui(tmp, 1, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, n + 1, MPFR_RNDN);
    mpfr_add(psi1, psi1, tmp, MPFR_RNDN);
    if (!di0) {
      mpfr_add(s0, s0, t, MPFR_RNDN);
      di0 = mpfr_get_d(t, MPFR_RNDN) <
            kRelTol * std::fabs(mpfr_get_d(s0, MPFR_RNDN));
    }
    if (!di1) {
      mpfr_add(s1, s1, u, MPFR_RNDN);
      di1 = mpfr_get_d(u, MPFR_RNDN) <
            kRelTol * std::fabs(mpfr_get_d(s1, MPFR_RNDN));
    }
    if (!dk0) {
      mpfr_sub(tmp, psi, lg, MPFR_RNDN);
      mpfr_mul(tmp, tmp, t, MPFR_RNDN);
      mpfr_add(k0, k0, tmp, MPFR_RNDN);
      dk0 = std::fabs(mpfr_get_d(tmp, MPFR_RNDN)) <
            kRelTol * std::fabs(mpfr_get_d(k0, MPFR_RNDN));
    }
    if (!dk1) {
      mpfr_add(tmp, psi1, psi, MPFR_RNDN);
      mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
      mpfr_sub(tmp, lg, tmp, MPFR_RNDN);
      mpfr_mul(tmp, tmp, u, MPFR_RNDN);
      mpfr_add(k1, k1, tmp, MPFR_RNDN);
      dk1 = std::fabs(mpfr_get_d(tmp, MPFR_RNDN)) <
            kRelTol * std::fabs(mpfr_get_d(k1, MPFR_RNDN));
    }
  }

  BesselQuad out{mpfr_get_d(s0, MPFR_RNDN), mpfr_get_d(s1, MPFR_RNDN),
                 mpfr_get_d(k0, MPFR_RNDN), mpfr_get_d(k1, MPFR_RNDN)};
  mpfr_clears(h, q, t, u, s0, s1, k0, k1, psi, psi1, lg, tmp,
              static_cast<mpfr_ptr>(nullptr));
  return out;
}

BesselQuad series_all(double z) {
  if (z > kValidatedLimit) warn_range(z);
  return z <= kDoubleLimit ? series_double(z) : series_mpfr(z);
}

}  // namespace

double harmonic(int n) {
  if (n < 0) throw std::domain_error("harmonic: negative index");
  double s = 0.0;
  for (int m = 1; m <= n; ++m) s += 1.0 / m;
  return s;
}

double bessel_i0(double z) {
  if (z < 0.0) throw std::domain_error("bessel_i0: negative argument");
  if (z == 0.0) return 1.0;
  return series_all(z).i0;
}

double bessel_i1(double z) {
  if (z < 0.0) throw std::domain_error("bessel_i1: negative argument");
  if (z == 0.0) return 0.0;
  return series_all(z).i1;
}

double bessel_k0(double z) {
  if (z <= 0.0) throw std::domain_error("bessel_k0: argument must be > 0");
  return series_all(z).k0;
}

double bessel_k1(double z) {
  if (z <= 0.0) throw std::domain_error("bessel_k1: argument must be > 0");
  return series_all(z).k1;
}

BesselQuad bessel_all(double z) {
  if (z <= 0.0) throw std::domain_error("bessel_all: argument must be > 0");
  return series_all(z);
}

}  // namespace heatrec
