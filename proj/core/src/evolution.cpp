#include "nvlab/evolution.hpp"

#include <cmath>

#include "nvlab/invariants.hpp"

namespace nvlab {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::blowup_detected: return "blowup_detected";
    case Termination::step_underflow: return "step_underflow";
  }
  return "unknown";
}

namespace {

// phi1..phi3 with phi_k(z) = sum_j z^j / (j+k)!; series used for small |z|.
void phi_weights(cplx z, cplx& p1, cplx& p2, cplx& p3) {
  if (std::abs(z) < 1e-2) {
    double f[12];
    f[0] = 1.0;
    for (int k = 1; k < 12; ++k) f[k] = f[k - 1] * k;
    auto series = [&](int shift) {
      cplx acc = 0.0;
      for (int j = 8; j >= 0; --j) acc = acc * z + 1.0 / f[j + shift];
      return acc;
    };
    p1 = series(1);
    p2 = series(2);
    p3 = series(3);
    return;
  }
  cplx ez = std::exp(z);
  p1 = (ez - 1.0) / z;
  p2 = (ez - 1.0 - z) / (z * z);
  p3 = (ez - 1.0 - z - 0.5 * z * z) / (z * z * z);
}

cplx linear_symbol(FrequencyPair z, const PhaseParams& p) {
  if (z.is_zero()) return {0.0, 0.0};
  double ph = p.phi0 == 0.0 ? double(phase(z)) : phase_modified(z, p);
  return {0.0, -ph};
}

void check_finite(const SpectralField& u, const char* where) {
  for (const cplx& c : u.coeff())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw NumericFailure(std::string(where) + ": non-finite coefficient");
}

}  // namespace

Etdrk4Stepper::Etdrk4Stepper(TorusGrid g, PhaseParams p, NonlinearOp nl)
    : grid_(g), params_(p), nl_(std::move(nl)) {}

const Etdrk4Stepper::Tables& Etdrk4Stepper::tables_for(double dt) {
  auto it = cache_.find(dt);
  if (it != cache_.end()) return it->second;
  Tables t;
  std::size_t n = grid_.size();
  t.e_full.resize(n);
  t.e_half.resize(n);
  t.half_weight.resize(n);
  t.f1.resize(n);
  t.f2.resize(n);
  t.f3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    FrequencyPair zf = grid_.freq_at(i);
    // The pure phase factors use the compensated reduction; the phi-weights are smooth
    // in z and tolerate plain evaluation.
    t.e_full[i] = free_factor(zf, dt, params_);
    t.e_half[i] = free_factor(zf, dt / 2.0, params_);
    cplx z = linear_symbol(zf, params_) * dt;
    cplx p1h, p2h, p3h;
    phi_weights(z / 2.0, p1h, p2h, p3h);
    t.half_weight[i] = (dt / 2.0) * p1h;
    cplx p1, p2, p3;
    phi_weights(z, p1, p2, p3);
    t.f1[i] = dt * (p1 - 3.0 * p2 + 4.0 * p3);
    t.f2[i] = dt * (p2 - 2.0 * p3);
    t.f3[i] = dt * (4.0 * p3 - p2);
  }
  return cache_.emplace(dt, std::move(t)).first->second;
}

SpectralField Etdrk4Stepper::step(const SpectralField& u, double dt) {
  const Tables& tb = tables_for(dt);
  std::size_t n = u.size();
  SpectralField k1 = nl_(u);
  SpectralField a = u;
  for (std::size_t i = 0; i < n; ++i) a[i] = tb.e_half[i] * u[i] + tb.half_weight[i] * k1[i];
  SpectralField k2 = nl_(a);
  SpectralField b = u;
  for (std::size_t i = 0; i < n; ++i) b[i] = tb.e_half[i] * u[i] + tb.half_weight[i] * k2[i];
  SpectralField k3 = nl_(b);
  SpectralField c = u;
  for (std::size_t i = 0; i < n; ++i)
    c[i] = tb.e_half[i] * a[i] + tb.half_weight[i] * (2.0 * k3[i] - k1[i]);
  SpectralField k4 = nl_(c);
  SpectralField out = u;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = tb.e_full[i] * u[i] + tb.f1[i] * k1[i] + 2.0 * tb.f2[i] * (k2[i] + k3[i]) +
             tb.f3[i] * k4[i];
  return out;
}

Splitstep2Stepper::Splitstep2Stepper(TorusGrid g, PhaseParams p, NonlinearOp nl)
    : grid_(g), params_(p), nl_(std::move(nl)) {}

SpectralField Splitstep2Stepper::step(const SpectralField& u, double dt) {
  SpectralField w = free_evolve(u, dt / 2.0, params_);
  SpectralField k1 = nl_(w);
  SpectralField mid = w;
  for (std::size_t i = 0; i < w.size(); ++i) mid[i] = w[i] + (dt / 2.0) * k1[i];
  SpectralField k2 = nl_(mid);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += dt * k2[i];
  return free_evolve(w, dt / 2.0, params_);
}

namespace {

NonlinearOp nv_nonlinearity(bool dealias_products) {
  return [dealias_products](const SpectralField& u) {
    return nonlinearity_N(u, dealias_products);
  };
}

}  // namespace

SpectralField step_etdrk4(const SpectralField& u, double dt, const PhaseParams& p,
                          bool dealias_products) {
  Etdrk4Stepper s(u.grid(), p, nv_nonlinearity(dealias_products));
  return s.step(u, dt);
}

SpectralField step_splitstep2(const SpectralField& u, double dt, const PhaseParams& p,
                              bool dealias_products) {
  Splitstep2Stepper s(u.grid(), p, nv_nonlinearity(dealias_products));
  return s.step(u, dt);
}

Trajectory simulate(const SpectralField& u0, const SimConfig& cfg) {
  return simulate_with(u0, cfg, nv_nonlinearity(cfg.dealias_products));
}

Trajectory simulate_with(const SpectralField& u0, const SimConfig& cfg, const NonlinearOp& nl,
                         bool enforce_mean_zero) {
  if (u0.grid() != cfg.grid) throw std::invalid_argument("simulate: datum grid mismatch");
  if (!(cfg.t_end > 0.0) || !(cfg.dt > 0.0))
    throw std::invalid_argument("simulate: t_end and dt must be positive");
  SpectralField u = u0;
  if (enforce_mean_zero && std::abs(u.at({0, 0})) != 0.0)
    throw std::invalid_argument("simulate: datum must be mean-zero");
  if (u.real_valued()) u.zero_nyquist();

  Etdrk4Stepper etd(cfg.grid, cfg.phase_params, nl);
  Splitstep2Stepper ss(cfg.grid, cfg.phase_params, nl);
  auto take = [&](const SpectralField& v, double h) {
    return cfg.scheme == Scheme::etdrk4 ? etd.step(v, h) : ss.step(v, h);
  };
  const double order = cfg.scheme == Scheme::etdrk4 ? 4.0 : 2.0;
  const double richardson = std::pow(2.0, order) - 1.0;

  Trajectory traj;
  auto record = [&](long step, double t, double h) {
    cplx mean = mean_functional(u);
    cplx pairing = l2_pairing(u);
    traj.diagnostics.push_back({step, t, h, l2_norm(u), h1_proxy(u), mean.real(), mean.imag(),
                                pairing.real(), pairing.imag(),
                                u.real_valued() ? u.realness_defect() : 0.0});
  };

  double t = 0.0, dt = cfg.dt;
  long accepted = 0;
  record(0, 0.0, dt);
  const double dt_min = 1e-12 * std::max(cfg.t_end, 1.0);
  bool done = false;
  while (!done) {
    double h = dt;
    bool clamped = false;
    if (t + h >= cfg.t_end - 1e-15 * cfg.t_end) {
      h = cfg.t_end - t;
      clamped = true;
    }
    SpectralField next(cfg.grid);
    if (!cfg.adaptive) {
      next = take(u, h);
    } else {
      SpectralField big = take(u, h);
      SpectralField small = take(take(u, h / 2.0), h / 2.0);
      double diff = 0.0, ref = 0.0;
      for (std::size_t i = 0; i < small.size(); ++i) {
        diff += std::norm(small[i] - big[i]);
        ref += std::norm(small[i]);
      }
      double err = std::sqrt(diff) / (richardson * std::max(std::sqrt(ref), 1e-300));
      if (err > cfg.adapt_tol) {
        dt /= 2.0;
        if (dt < dt_min) {
          traj.terminated_by = Termination::step_underflow;
          break;
        }
        continue;
      }
      next = small;
      if (err < cfg.adapt_tol / std::pow(2.0, order + 2.0) && !clamped) dt *= 2.0;
    }
    check_finite(next, "simulate");
    u = next;
    t += h;
    ++accepted;
    record(accepted, t, h);
    if (cfg.snapshot_every > 0 && accepted % cfg.snapshot_every == 0 && !clamped) {
      traj.times.push_back(t);
      traj.states.push_back(u);
    }
    if (h1_proxy(u) > cfg.blowup_threshold) {
      traj.terminated_by = Termination::blowup_detected;
      done = true;
    }
    if (clamped) done = true;
  }
  traj.t_final = t;
  if (traj.times.empty() || traj.times.back() != t) {
    traj.times.push_back(t);
    traj.states.push_back(u);
  }
  return traj;
}

}  // namespace nvlab
