#pragma once

namespace heatrec {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Harmonic number psi(n) = sum_{m=1..n} 1/m, psi(0) = 0.
double harmonic(int n);

// Modified Bessel functions of integer order 0 and 1, evaluated by their
// ascending power series about z = 0:
//
//   I0(z) = sum_n (z/2)^{2n} / (n!)^2
//   I1(z) = sum_n (z/2)^{2n+1} / (n! (n+1)!)
//   K0(z) = -(ln(z/2) + C) I0(z) + sum_{n>=1} psi(n)/(n!)^2 (z/2)^{2n}
//   K1(z) = 1/z + (ln(z/2) + C) I1(z)
//           - (1/2) sum_{n>=0} (psi(n+1)+psi(n))/(n!(n+1)!) (z/2)^{2n+1}
//
// Terms are accumulated until the next term falls below 1e-15 of the
// function's partial value, with a hard cap at series index 60.  The K
// series suffer catastrophic cancellation between the logarithmic part and
// the psi sums for large z (relative error ~ e^{2z} * eps), so arguments
// above an internal threshold are summed in extended precision and rounded
// to double on return; results are bit-deterministic either way.
//
// The series are intended for arguments in [0, 30]; larger z triggers a
// one-time warning to stderr (the 60-term cap limits attainable accuracy
// there) but still returns the series value.
//
// bessel_i0/bessel_i1 require z >= 0; bessel_k0/bessel_k1 require z > 0.
// Violations throw std::domain_error.
double bessel_i0(double z);
double bessel_i1(double z);
double bessel_k0(double z);
double bessel_k1(double z);

// All four functions at once, sharing one series pass.  Cheaper than four
// separate calls when a kernel needs the full quadruple at the same point.
struct BesselQuad {
  double i0, i1, k0, k1;
};
BesselQuad bessel_all(double z);

}  // namespace heatrec
