#pragma once

#include <vector>

#include "nvlab/field.hpp"

namespace nvlab {

// Transform convention:
//   u^(z) = (2pi)^-2 Int_T2 e^{-i(x xi + y eta)} u dx dy,   u = Sum_z u^(z) e^{i(x xi + y eta)}
// so to_physical is the unnormalized inverse DFT (samples at x_a = 2pi a/nx) and
// from_physical divides the forward DFT by nx*ny. Parseval in this normalization:
//   (2pi)^2 Sum |u^|^2 = Int |u|^2.
// Backed by FFTW (complex-to-complex); plans are cached per grid size.

// Physical samples, flat layout a*ny + b for the point (2pi a/nx, 2pi b/ny).
std::vector<cplx> to_physical(const SpectralField& u);

// Inverse of to_physical; flags of the result default to false.
SpectralField from_physical(const TorusGrid& g, const std::vector<cplx>& samples);

// L2(T^2) norm, 2pi * sqrt(Sum |u^|^2).
double l2_norm(const SpectralField& u);

// H1-type proxy used for blow-up detection: 2pi * sqrt(Sum (1+|z|^2) |u^|^2).
double h1_proxy(const SpectralField& u);

}  // namespace nvlab
