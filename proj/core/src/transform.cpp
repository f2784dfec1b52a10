#include "nvlab/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace nvlab {

namespace {

// One cached plan pair per grid size. FFTW planning is not thread safe; execution on
// the shared buffers is serialized by the same mutex (transform cost dominates, and the
// callers that parallelize do so across whole runs, not single transforms).
struct PlanEntry {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr, bwd = nullptr;
  std::size_t n = 0;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

PlanEntry& plan_for(const TorusGrid& g) {
  static std::map<std::pair<int, int>, PlanEntry> cache;
  auto key = std::make_pair(g.nx, g.ny);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PlanEntry e;
  e.n = g.size();
  e.buf = fftw_alloc_complex(e.n);
  e.fwd = fftw_plan_dft_2d(g.nx, g.ny, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  e.bwd = fftw_plan_dft_2d(g.nx, g.ny, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  return cache.emplace(key, e).first->second;
}

}  // namespace

std::vector<cplx> to_physical(const SpectralField& u) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  PlanEntry& e = plan_for(u.grid());
  for (std::size_t i = 0; i < e.n; ++i) {
    e.buf[i][0] = u[i].real();
    e.buf[i][1] = u[i].imag();
  }
  fftw_execute(e.bwd);
  std::vector<cplx> out(e.n);
  for (std::size_t i = 0; i < e.n; ++i) out[i] = {e.buf[i][0], e.buf[i][1]};
  return out;
}

SpectralField from_physical(const TorusGrid& g, const std::vector<cplx>& samples) {
  if (samples.size() != g.size())
    throw std::invalid_argument("from_physical: sample count does not match grid");
  std::lock_guard<std::mutex> lock(plan_mutex());
  PlanEntry& e = plan_for(g);
  for (std::size_t i = 0; i < e.n; ++i) {
    e.buf[i][0] = samples[i].real();
    e.buf[i][1] = samples[i].imag();
  }
  fftw_execute(e.fwd);
  SpectralField out(g);
  double scale = 1.0 / double(e.n);
  for (std::size_t i = 0; i < e.n; ++i) out[i] = cplx{e.buf[i][0], e.buf[i][1]} * scale;
  return out;
}

double l2_norm(const SpectralField& u) {
  double s = 0.0;
  for (const cplx& c : u.coeff()) s += std::norm(c);
  return 2.0 * M_PI * std::sqrt(s);
}

double h1_proxy(const SpectralField& u) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    FrequencyPair z = u.grid().freq_at(i);
    double w = 1.0 + double(z.xi) * double(z.xi) + double(z.eta) * double(z.eta);
    s += w * std::norm(u[i]);
  }
  return 2.0 * M_PI * std::sqrt(s);
}

}  // namespace nvlab
