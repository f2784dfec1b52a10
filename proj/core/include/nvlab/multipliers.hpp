#pragma once

#include "nvlab/field.hpp"
#include "nvlab/phase.hpp"

namespace nvlab {

// Fourier multiplier of dbar^{-1} d: (xi^2 - eta^2 - 2 i xi eta) / (xi^2 + eta^2);
// modulus 1 away from the origin, value 0 at the origin by convention.
inline cplx multiplier_dbar_inv_d(FrequencyPair z) {
  if (z.is_zero()) return {0.0, 0.0};
  double xi = double(z.xi), eta = double(z.eta);
  double d = xi * xi + eta * eta;
  return {(xi * xi - eta * eta) / d, -2.0 * xi * eta / d};
}

// Conjugate multiplier, d^{-1} dbar.
inline cplx multiplier_d_inv_dbar(FrequencyPair z) { return std::conj(multiplier_dbar_inv_d(z)); }

// Real multipliers of (dx^2 - dy^2)/Lap and 2 dx dy / Lap (zero at the origin).
inline double multiplier_op1(FrequencyPair z) {
  if (z.is_zero()) return 0.0;
  double xi = double(z.xi), eta = double(z.eta);
  return (xi * xi - eta * eta) / (xi * xi + eta * eta);
}
inline double multiplier_op2(FrequencyPair z) {
  if (z.is_zero()) return 0.0;
  double xi = double(z.xi), eta = double(z.eta);
  return 2.0 * xi * eta / (xi * xi + eta * eta);
}

// Wirtinger symbols: d = (dx - i dy)/2 acts as (i xi + eta)/2, dbar as (i xi - eta)/2.
inline cplx wirtinger_d(FrequencyPair z) { return {double(z.eta) / 2.0, double(z.xi) / 2.0}; }
inline cplx wirtinger_dbar(FrequencyPair z) { return {-double(z.eta) / 2.0, double(z.xi) / 2.0}; }

template <class Symbol>
SpectralField apply_multiplier(const SpectralField& u, Symbol&& symbol) {
  SpectralField out(u.grid(), u.mean_zero(), false);
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = cplx(symbol(u.grid().freq_at(i))) * u[i];
  return out;
}

// e^{-i t phi}(D) u0 (phi replaced by the modified phase when p.phi0 != 0).
// Exactly norm preserving mode by mode; the zero mode is propagated unchanged.
inline SpectralField free_evolve(const SpectralField& u0, double t, const PhaseParams& p = {}) {
  SpectralField out = u0;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= free_factor(out.grid().freq_at(i), t, p);
  return out;
}

// Two-thirds rule: zero every mode with 3|xi| > nx or 3|eta| > ny.
inline void dealias(SpectralField& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    FrequencyPair z = u.grid().freq_at(i);
    if (3 * std::abs(z.xi) > u.grid().nx || 3 * std::abs(z.eta) > u.grid().ny) u[i] = 0.0;
  }
}

// Projection onto the modes with xi = 0 (the line the phase degenerates on).
inline SpectralField project_xi_zero(const SpectralField& u, bool keep) {
  SpectralField out(u.grid(), u.mean_zero(), false);
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool on_line = u.grid().freq_at(i).xi == 0;
    out[i] = (on_line == keep) ? u[i] : cplx{0.0, 0.0};
  }
  return out;
}

}  // namespace nvlab
