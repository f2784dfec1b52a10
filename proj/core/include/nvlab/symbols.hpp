#pragma once

#include "nvlab/phase.hpp"

namespace nvlab {

// Convolution symbol of the nonlinearity and the resonance function, for input
// frequencies z1, z2 and output z = z1 + z2:
//   m = xi * sum_i (xi_i^2 - eta_i^2)/|z_i|^2  -  eta * sum_i 2 xi_i eta_i/|z_i|^2
//   r = 3 * ( xi (xi1 xi2 - eta1 eta2) - eta (xi1 eta2 + xi2 eta1) )
// r equals phi(z1+z2) - phi(z1) - phi(z2), and m = (2/3) * dot(z1,z2)/(|z1|^2 |z2|^2) * r.

inline double symbol_m(FrequencyPair z1, FrequencyPair z2) {
  if (z1.is_zero() || z2.is_zero())
    throw std::domain_error("symbol_m: undefined for zero input frequency");
  double x1 = double(z1.xi), y1 = double(z1.eta), x2 = double(z2.xi), y2 = double(z2.eta);
  double d1 = x1 * x1 + y1 * y1, d2 = x2 * x2 + y2 * y2;
  double xi = x1 + x2, eta = y1 + y2;
  return xi * ((x1 * x1 - y1 * y1) / d1 + (x2 * x2 - y2 * y2) / d2) -
         eta * (2.0 * x1 * y1 / d1 + 2.0 * x2 * y2 / d2);
}

inline i64 resonance_r(FrequencyPair z1, FrequencyPair z2) {
  i128 x1 = z1.xi, y1 = z1.eta, x2 = z2.xi, y2 = z2.eta;
  i128 xi = x1 + x2, eta = y1 + y2;
  i128 v = 3 * (xi * (x1 * x2 - y1 * y2) - eta * (x1 * y2 + x2 * y1));
  return narrow_checked(v, "resonance_r");
}

// Exact integer check of 3 * m * |z1|^2 |z2|^2 == 2 * dot(z1,z2) * r, the identity
// with denominators cleared. Valid for |coords| <= ~1e6 without overflow (128-bit).
inline bool m_r_identity_exact(FrequencyPair z1, FrequencyPair z2) {
  i128 x1 = z1.xi, y1 = z1.eta, x2 = z2.xi, y2 = z2.eta;
  i128 d1 = x1 * x1 + y1 * y1, d2 = x2 * x2 + y2 * y2;
  i128 a1 = x1 * x1 - y1 * y1, a2 = x2 * x2 - y2 * y2;
  i128 b1 = 2 * x1 * y1, b2 = 2 * x2 * y2;
  i128 xi = x1 + x2, eta = y1 + y2;
  i128 m_times_d1d2 = xi * (a1 * d2 + a2 * d1) - eta * (b1 * d2 + b2 * d1);
  i128 dot = x1 * x2 + y1 * y2;
  i128 r = 3 * (xi * (x1 * x2 - y1 * y2) - eta * (x1 * y2 + x2 * y1));
  return 3 * m_times_d1d2 == 2 * dot * r;
}

}  // namespace nvlab
