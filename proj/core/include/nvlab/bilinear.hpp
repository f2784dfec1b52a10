#pragma once

#include "nvlab/multipliers.hpp"
#include "nvlab/transform.hpp"

namespace nvlab {

// Symmetrized bilinear form of the nonlinearity,
//   B(u,v) = dx[(Op1 u) v + u (Op1 v)] - dy[(Op2 u) v + u (Op2 v)],
// Op1 = (dx^2-dy^2)/Lap, Op2 = 2 dx dy/Lap (zero-mode convention 0). Computed by the
// physical-space route: 6 inverse transforms, pointwise products, 2 forward transforms,
// derivative factors i*xi / i*eta. With dealias on, inputs and output are truncated by
// the two-thirds rule. Inputs must be mean-zero.
SpectralField bilinear_B(const SpectralField& u, const SpectralField& v, bool dealias_products = true);

// Independent route: true (unwrapped) convolution over the grid frequency set,
//   out(z) = i * Sum_{z1+z2=z, z1,z2 != 0} m(z1,z2) u^(z1) v^(z2),
// O(n^4); intended for small grids and as the oracle for the physical path. The factor
// i reflects the outer derivatives under the chosen transform convention.
SpectralField bilinear_B_convolution(const SpectralField& u, const SpectralField& v);

// N(u) = (1/2) B(u,u).
SpectralField nonlinearity_N(const SpectralField& u, bool dealias_products = true);

// Divergence-form evaluation dx(u Op1 u) - dy(u Op2 u); equals N(u) identically and is
// kept as the cross-check of the symmetrization.
SpectralField nonlinearity_direct(const SpectralField& u, bool dealias_products = true);

// Q(u,v): convolution of the coefficient arrays with the factor (1 - delta_{xi,0}
// delta_{xi1,0}), killing exactly the pairs where both the output and the first input
// frequency lie on the degenerate line xi = 0. True convolution, O(n^4).
SpectralField apply_Q(const SpectralField& u, const SpectralField& v);

}  // namespace nvlab
