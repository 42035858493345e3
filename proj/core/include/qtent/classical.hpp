#pragma once

#include <cstdint>
#include <vector>

#include "qtent/common.hpp"

namespace qtent {

/// Point of the classical map; theta is kept reduced mod 2pi, p is left
/// unreduced during evolution (reduce mod 2pi/T only when plotting).
struct PhasePoint {
    double theta = 0.0;
    double p = 0.0;
};

struct ClassicalMapParams {
    double k = 1.0;  // kick strength
    double T = 1.0;  // rotation period between kicks
    double chaos_parameter() const { return k * T; }  // K = kT
};

/// Two-branch kick potential; branch seam at theta = pi.
double kick_potential(double theta, double k);
/// Tent-shaped derivative; continuous at both seams.
double kick_potential_derivative(double theta, double k);

/// One map step: p' = p - V'(theta) + xi, theta' = theta + p' T (mod 2pi),
/// with xi uniform in [-noise_amp, noise_amp] (no draw when noise_amp == 0).
PhasePoint classical_step(PhasePoint pt, const ClassicalMapParams& params,
                          double noise_amp, Rng& rng);
PhasePoint classical_step(PhasePoint pt, const ClassicalMapParams& params);

/// Inverse step (noise again enters the momentum update).
PhasePoint classical_step_back(PhasePoint pt, const ClassicalMapParams& params,
                               double noise_amp, Rng& rng);
PhasePoint classical_step_back(PhasePoint pt, const ClassicalMapParams& params);

/// Iterates n_traj random starts for n_steps, emitting every visited point
/// (including the start) with p reduced mod 2pi/T.
std::vector<PhasePoint> poincare_section(const ClassicalMapParams& params, int n_traj,
                                         int n_steps, std::uint64_t seed);

struct DiffusionResult {
    double measured = 0.0;           // <(p-p0)^2>/t
    double theory = 0.0;             // pi^2 k^2 / 12
    bool random_phase_valid = true;  // false when K < 4
    int n_traj = 0;
    int t = 0;
};

DiffusionResult diffusion_estimate(double k, double T, int n_traj, int t,
                                   std::uint64_t seed);

} // namespace qtent
