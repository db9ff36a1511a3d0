#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "caflow/types.hpp"
#include "caflow/vessel_tree.hpp"

namespace caflow::hemo {

enum class AgeProfile { young, elderly };

/// Inflow waveform family: raised baseline plus wrapped Gaussian pulses,
/// normalized so the cycle mean equals q_mean exactly (analytic integral).
/// The elderly profile carries a secondary systolic pulse; the seed jitters
/// pulse timing/width within bounds that preserve the peak count.
struct WaveformParams {
  double q_mean = 4.0;        // ml/s
  double cycle_length = 0.8;  // s
  AgeProfile profile = AgeProfile::young;
  std::uint64_t seed = 0;
};

struct InjectionParams {
  double q_max = 2.5;   // ml/s, maximum injector flow
  double t_start = 0.5; // s, T_S
  double t_lag = 0.25;  // s, T_L exponential lag
  double mixing = 0.3;  // m, fraction of injected flow added to total
};

struct TransportConfig {
  double diffusion = 1e-3;  // mm^2/s
  double t_end = 2.0;       // s
  double max_dt = 1e-3;     // s
  double frame_rate = 60.0; // frames per second
  int n_frames = 0;         // 0 = derive from t_end (floor(t_end*fps)+1)
  bool clamp = true;        // clamp state to [0,1] each step (magnitude logged)
};

/// P x T cross-section-mean concentrations plus the sampling instants.
struct ConcentrationMap {
  MatrixXd values;       // P x T, volume fraction in [0,1]
  VectorXd frame_times;  // T, seconds, uniform at 1/frame_rate
};

struct TransportDiagnostics {
  double injected_mass = 0.0;  // mm^3 of CA through the inlet
  double outflow_mass = 0.0;   // mm^3 of CA through the leaves
  double stored_mass = 0.0;    // mm^3 of CA in the tree at t_end
  double clamped_mass = 0.0;   // net mm^3 added/removed by clamping
  long long n_steps = 0;
  double residual() const {
    return injected_mass - outflow_mass - stored_mass + clamped_mass;
  }
};

double waveform(const WaveformParams& params, double t);
double injection_rate(const InjectionParams& inj, double t);

inline double total_flow(double q_b, double q_ca, double m) {
  return q_b + m * q_ca;
}

double inlet_concentration(const InjectionParams& inj,
                           const WaveformParams& wave, double t);

/// Time-dependent boundary conditions for the solver. The standard pipeline
/// drive is built by make_drive; tests substitute constant-flow or
/// initial-value variants.
struct TransportDrive {
  std::function<double(double)> total_flow;  // Q_T(t), ml/s
  std::function<double(double)> inlet_conc;  // c_inlet(t), [0,1]
  VectorXd initial;                          // per-node c(0); empty = zeros
};

TransportDrive make_drive(const WaveformParams& wave, const InjectionParams& inj);

/// Finite-volume upwind advection + central diffusion on the branch grids.
/// Velocity u_i(t) = 1000*Q_T(t)*flow_fraction/(pi r_i^2) mm/s; bifurcations
/// pass the parent's distal flux to the children split by flow_fraction with
/// concentration continuity. Adaptive dt = min(max_dt, 0.9 h/max|u|,
/// 0.45 h^2/D). Throws on non-finite state with step diagnostics.
ConcentrationMap simulate_transport(const tree::VesselTree& tr,
                                    const TransportDrive& drive,
                                    const TransportConfig& cfg,
                                    TransportDiagnostics* diag = nullptr);

ConcentrationMap simulate_transport(const tree::VesselTree& tr,
                                    const WaveformParams& wave,
                                    const InjectionParams& inj,
                                    const TransportConfig& cfg,
                                    TransportDiagnostics* diag = nullptr);

}  // namespace caflow::hemo
