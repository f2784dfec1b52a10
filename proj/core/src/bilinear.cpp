#include "nvlab/bilinear.hpp"

#include "nvlab/symbols.hpp"

namespace nvlab {

namespace {

std::vector<cplx> pointwise(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

SpectralField outer_divergence(const TorusGrid& g, const std::vector<cplx>& p1,
                               const std::vector<cplx>& p2) {
  SpectralField f1 = from_physical(g, p1), f2 = from_physical(g, p2);
  SpectralField out(g, true, false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    FrequencyPair z = g.freq_at(i);
    out[i] = cplx{0.0, double(z.xi)} * f1[i] - cplx{0.0, double(z.eta)} * f2[i];
  }
  return out;
}

}  // namespace

SpectralField bilinear_B(const SpectralField& u, const SpectralField& v, bool dealias_products) {
  if (u.grid() != v.grid()) throw std::invalid_argument("bilinear_B: grid mismatch");
  SpectralField ud = u, vd = v;
  if (dealias_products) {
    dealias(ud);
    dealias(vd);
  }
  std::vector<cplx> up = to_physical(ud), vp = to_physical(vd);
  std::vector<cplx> o1u = to_physical(apply_multiplier(ud, multiplier_op1));
  std::vector<cplx> o1v = to_physical(apply_multiplier(vd, multiplier_op1));
  std::vector<cplx> o2u = to_physical(apply_multiplier(ud, multiplier_op2));
  std::vector<cplx> o2v = to_physical(apply_multiplier(vd, multiplier_op2));

  std::vector<cplx> p1(up.size()), p2(up.size());
  for (std::size_t i = 0; i < up.size(); ++i) {
    p1[i] = o1u[i] * vp[i] + up[i] * o1v[i];
    p2[i] = o2u[i] * vp[i] + up[i] * o2v[i];
  }
  SpectralField out = outer_divergence(u.grid(), p1, p2);
  if (dealias_products) dealias(out);
  if (u.real_valued() && v.real_valued()) {
    out.zero_nyquist();
    out.set_real_valued(true);
  }
  return out;
}

SpectralField bilinear_B_convolution(const SpectralField& u, const SpectralField& v) {
  if (u.grid() != v.grid()) throw std::invalid_argument("bilinear_B_convolution: grid mismatch");
  const TorusGrid& g = u.grid();
  SpectralField out(g, true, false);
  for (std::size_t i1 = 0; i1 < u.size(); ++i1) {
    if (u[i1] == cplx{}) continue;
    FrequencyPair z1 = g.freq_at(i1);
    if (z1.is_zero()) continue;
    for (std::size_t i2 = 0; i2 < v.size(); ++i2) {
      if (v[i2] == cplx{}) continue;
      FrequencyPair z2 = g.freq_at(i2);
      if (z2.is_zero()) continue;
      FrequencyPair z = z1 + z2;
      if (!g.contains(z)) continue;
      out.at(z) += cplx{0.0, 1.0} * symbol_m(z1, z2) * u[i1] * v[i2];
    }
  }
  return out;
}

SpectralField nonlinearity_N(const SpectralField& u, bool dealias_products) {
  SpectralField out = bilinear_B(u, u, dealias_products);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= 0.5;
  return out;
}

SpectralField nonlinearity_direct(const SpectralField& u, bool dealias_products) {
  SpectralField ud = u;
  if (dealias_products) dealias(ud);
  std::vector<cplx> up = to_physical(ud);
  std::vector<cplx> o1 = to_physical(apply_multiplier(ud, multiplier_op1));
  std::vector<cplx> o2 = to_physical(apply_multiplier(ud, multiplier_op2));
  SpectralField out = outer_divergence(u.grid(), pointwise(up, o1), pointwise(up, o2));
  if (dealias_products) dealias(out);
  if (u.real_valued()) {
    out.zero_nyquist();
    out.set_real_valued(true);
  }
  return out;
}

SpectralField apply_Q(const SpectralField& u, const SpectralField& v) {
  if (u.grid() != v.grid()) throw std::invalid_argument("apply_Q: grid mismatch");
  const TorusGrid& g = u.grid();
  SpectralField out(g, false, false);
  for (std::size_t i1 = 0; i1 < u.size(); ++i1) {
    if (u[i1] == cplx{}) continue;
    FrequencyPair z1 = g.freq_at(i1);
    for (std::size_t i2 = 0; i2 < v.size(); ++i2) {
      if (v[i2] == cplx{}) continue;
      FrequencyPair z2 = g.freq_at(i2);
      FrequencyPair z = z1 + z2;
      if (!g.contains(z)) continue;
      if (z.xi == 0 && z1.xi == 0) continue;
      out.at(z) += u[i1] * v[i2];
    }
  }
  return out;
}

}  // namespace nvlab
