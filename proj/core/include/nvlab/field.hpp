#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "nvlab/grid.hpp"
#include "nvlab/phase.hpp"

namespace nvlab {

// A field on the torus held by its Fourier coefficients (layout per TorusGrid).
// mean_zero / real_valued are metadata tags; operations that require them check or
// enforce the corresponding coefficient constraints explicitly.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(TorusGrid g, bool mean_zero = false, bool real_valued = false)
      : grid_(g), coeff_(g.size()), mean_zero_(mean_zero), real_valued_(real_valued) {}

  const TorusGrid& grid() const { return grid_; }
  std::size_t size() const { return coeff_.size(); }

  cplx& operator[](std::size_t i) { return coeff_[i]; }
  const cplx& operator[](std::size_t i) const { return coeff_[i]; }
  cplx& at(FrequencyPair z) { return coeff_[grid_.flat(z)]; }
  const cplx& at(FrequencyPair z) const { return coeff_[grid_.flat(z)]; }

  std::vector<cplx>& coeff() { return coeff_; }
  const std::vector<cplx>& coeff() const { return coeff_; }

  bool mean_zero() const { return mean_zero_; }
  bool real_valued() const { return real_valued_; }
  void set_mean_zero(bool v) { mean_zero_ = v; }
  void set_real_valued(bool v) { real_valued_ = v; }

  void project_mean() {
    coeff_[grid_.flat({0, 0})] = 0.0;
    mean_zero_ = true;
  }

  // Zeroes the Nyquist rows xi = nx/2 and eta = ny/2 (they have no conjugate partner).
  void zero_nyquist() {
    for (int iy = 0; iy < grid_.ny; ++iy) coeff_[std::size_t(grid_.nx / 2) * grid_.ny + iy] = 0.0;
    for (int ix = 0; ix < grid_.nx; ++ix) coeff_[std::size_t(ix) * grid_.ny + grid_.ny / 2] = 0.0;
  }

  // Largest |u^(-z) - conj(u^(z))| over modes whose partner -z is representable.
  double realness_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      FrequencyPair z = grid_.freq_at(i);
      if (!grid_.contains(-z)) continue;
      double d = std::abs(at(-z) - std::conj(coeff_[i]));
      if (d > worst) worst = d;
    }
    return worst;
  }

 private:
  TorusGrid grid_;
  std::vector<cplx> coeff_;
  bool mean_zero_ = false;
  bool real_valued_ = false;
};

// NVF1 snapshot format (little-endian):
//   bytes 0..3   magic "NVF1"
//   bytes 4..7   u32 nx
//   bytes 8..11  u32 ny
//   byte  12     flags: bit0 mean_zero, bit1 real_valued
//   then nx*ny coefficient pairs (re,im) as float64, flat index ix*ny+iy.
void write_nvf1(const SpectralField& u, std::ostream& out);
void write_nvf1_file(const SpectralField& u, const std::string& path);
SpectralField read_nvf1(std::istream& in);
SpectralField read_nvf1_file(const std::string& path);

}  // namespace nvlab
