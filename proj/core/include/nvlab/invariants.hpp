#pragma once

#include <map>
#include <string>
#include <vector>

#include "nvlab/evolution.hpp"
#include "nvlab/multipliers.hpp"

namespace nvlab {

// (2pi)^2 * u^(0,0), i.e. Int u.
cplx mean_functional(const SpectralField& u);

// Conserved pairing P(u) = (2pi)^2 Sum u^(-z) * mult_dbar_inv_d(z) * u^(z), the
// discrete Int u (dbar^{-1} d) u. Bilinear (not sesquitive) on purpose: the sum runs
// over modes whose partner -z is representable.
cplx l2_pairing(const SpectralField& u);

// (2pi)^2 Sum_{z != 0} |z|^{-2} |u^(z)|^2. Under scaling_transform with factor lambda
// this multiplies by exactly lambda^2; the invariant combination is the sum / lambda^2.
double hminus1_sum(const SpectralField& u);

// u_lambda with u_lambda^(lambda z) = lambda^2 u^(z) (integer dilation on the same
// grid); throws if the dilated support leaves the grid.
SpectralField scaling_transform(const SpectralField& u, long lambda);

// Shared refinement-harness report shape.
struct RefinementReport {
  std::string check_name;
  std::map<std::string, double> parameters;
  std::vector<double> dt_list;
  std::vector<double> error_series;
  std::vector<double> refinement_orders;  // log2(e_k / e_{k+1})
  bool pass = false;
};

// Simulates u from u0 to time lambda^3 * t and v from scaling_transform(u0, lambda) to
// time t with the same cfg (same dt; the base run takes lambda^3 as many steps), and
// reports d = ||v(t) - scaling_transform(u(lambda^3 t), lambda)|| / ||v(t)|| for each
// dt in dt_list (halvings of cfg.dt when empty). linear_only disables the nonlinearity,
// where the symmetry is exact to roundoff.
RefinementReport scaling_symmetry_check(const SpectralField& u0, long lambda, double t,
                                        SimConfig cfg, std::vector<double> dt_list = {},
                                        bool linear_only = false, double tol = 1e-6);

void write_diagnostics_csv(const std::vector<DiagnosticsRow>& rows, const std::string& path);

}  // namespace nvlab
