#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nvlab/bilinear.hpp"

namespace nvlab {

// Raised on NaN/Inf contamination; the CLI maps it to the numeric-failure exit code.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Scheme { etdrk4, splitstep2 };
enum class Termination { completed, blowup_detected, step_underflow };

const char* to_string(Termination t);

struct SimConfig {
  TorusGrid grid;
  double t_end = 1.0;
  double dt = 1e-3;
  Scheme scheme = Scheme::etdrk4;
  bool dealias_products = true;
  bool adaptive = false;
  double adapt_tol = 1e-8;        // relative per-step error target (step doubling)
  double blowup_threshold = 1e10;  // on the H1 proxy norm
  int snapshot_every = 0;          // store every k-th accepted state; 0 = final only
  PhaseParams phase_params{};
};

struct DiagnosticsRow {
  long step = 0;
  double t = 0, dt = 0, l2 = 0, h1 = 0, mean_re = 0, mean_im = 0, pairing_re = 0, pairing_im = 0,
         realness_defect = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<DiagnosticsRow> diagnostics;
  Termination terminated_by = Termination::completed;
  double t_final = 0.0;
  const SpectralField& final_state() const { return states.back(); }
};

using NonlinearOp = std::function<SpectralField(const SpectralField&)>;

// Exponential time differencing (4th order, Cox-Matthews weights) for
//   du^/dt = -i phi~(z) u^ + nl(u)^.
// The weights are evaluated from the closed forms, switching to the series expansion
// for |phi~ * dt| < 1e-2 (the resonant set xi = 0 makes tiny phases common, and the
// closed forms cancel catastrophically there). Weight tables are cached per step size.
class Etdrk4Stepper {
 public:
  Etdrk4Stepper(TorusGrid g, PhaseParams p, NonlinearOp nl);
  SpectralField step(const SpectralField& u, double dt);

 private:
  struct Tables {
    std::vector<cplx> e_full, e_half, half_weight, f1, f2, f3;
  };
  const Tables& tables_for(double dt);

  TorusGrid grid_;
  PhaseParams params_;
  NonlinearOp nl_;
  std::map<double, Tables> cache_;
};

// Strang splitting: exact half linear flow, explicit-midpoint nonlinear step, half
// linear flow. Second order.
class Splitstep2Stepper {
 public:
  Splitstep2Stepper(TorusGrid g, PhaseParams p, NonlinearOp nl);
  SpectralField step(const SpectralField& u, double dt);

 private:
  TorusGrid grid_;
  PhaseParams params_;
  NonlinearOp nl_;
};

// One step of the configured scheme with the NV nonlinearity N(u) = B(u,u)/2.
SpectralField step_etdrk4(const SpectralField& u, double dt, const PhaseParams& p,
                          bool dealias_products = true);
SpectralField step_splitstep2(const SpectralField& u, double dt, const PhaseParams& p,
                              bool dealias_products = true);

// Time-steps du^/dt = -i phi u^ + N^(u) from a mean-zero datum. Fixed steps by default;
// cfg.adaptive enables step-doubling control with factor-of-2 step changes. Integration
// lands exactly on t_end (one clamped final step when needed). Diagnostics are recorded
// per accepted step; blow-up (H1 proxy above threshold) is a normal termination.
Trajectory simulate(const SpectralField& u0, const SimConfig& cfg);

// Same driver with a caller-supplied nonlinearity (used by the mNV solver).
Trajectory simulate_with(const SpectralField& u0, const SimConfig& cfg, const NonlinearOp& nl,
                         bool enforce_mean_zero = true);

}  // namespace nvlab
