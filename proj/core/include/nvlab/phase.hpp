#pragma once

#include <cmath>
#include <complex>

#include "nvlab/grid.hpp"
#include "nvlab/util.hpp"

namespace nvlab {

using cplx = std::complex<double>;

// Dispersion phase phi(xi,eta) = xi^3 - 3 xi eta^2, exact in 64-bit integers.
// Overflow is detected and reported, never wrapped.
inline i64 phase(FrequencyPair z) {
  i128 xi = z.xi, eta = z.eta;
  i128 v = xi * xi * xi - 3 * xi * eta * eta;
  return narrow_checked(v, "phase");
}

struct PhaseParams {
  double phi0 = 0.0;  // mean parameter; 0 selects the plain phase
};

// Modified phase phi~(z) = phi(z) * (1 + 3*phi0 / |z|^2); undefined at the origin.
inline double phase_modified(FrequencyPair z, const PhaseParams& p) {
  if (z.is_zero()) throw std::domain_error("phase_modified: undefined at the zero mode");
  double d = double(z.xi) * double(z.xi) + double(z.eta) * double(z.eta);
  return double(phase(z)) * (1.0 + 3.0 * p.phi0 / d);
}

namespace detail {
// Split of 2pi into three doubles, hi + mid + lo (hi is the rounded double of 2pi).
constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiMid = 2.449293598294706414e-16;
constexpr double kTwoPiLo = -5.989539619436679332e-33;

// a*b as an exact double-double via FMA.
inline void two_prod(double a, double b, double& hi, double& lo) {
  hi = a * b;
  lo = std::fma(a, b, -hi);
}
}  // namespace detail

// e^{-i t k} for integer k, with the argument t*k reduced mod 2pi in compensated
// arithmetic. Plain double evaluation loses ~1e-10 of phase at |t*k| ~ 1e6, which
// would break the 1e-12 group-law and 2pi-periodicity guarantees; this holds ~1e-15.
inline cplx phase_factor(double t, double k) {
  double p, e;
  detail::two_prod(t, k, p, e);
  double n = std::nearbyint(p / detail::kTwoPiHi);
  double qh, ql;
  detail::two_prod(n, detail::kTwoPiHi, qh, ql);
  double r = ((p - qh) - ql) - n * detail::kTwoPiMid - n * detail::kTwoPiLo + e;
  return {std::cos(r), -std::sin(r)};
}

inline cplx phase_factor(double t, i64 k) { return phase_factor(t, double(k)); }

// Free-evolution multiplier e^{-i t phi~(z)}; the zero mode is propagated unchanged.
// For phi0 != 0 the correction is applied as a separate small rotation so the exact
// integer-phase reduction still does the heavy lifting.
inline cplx free_factor(FrequencyPair z, double t, const PhaseParams& p) {
  if (z.is_zero()) return {1.0, 0.0};
  i64 k = phase(z);
  cplx base = phase_factor(t, k);
  if (p.phi0 == 0.0) return base;
  double d = double(z.xi) * double(z.xi) + double(z.eta) * double(z.eta);
  double corr = t * double(k) * 3.0 * p.phi0 / d;
  return base * cplx{std::cos(corr), -std::sin(corr)};
}

}  // namespace nvlab
