#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qtent/fidelity.hpp"

namespace qtent {

/// Shared configuration of the experiment drivers; each cmd_* reads the
/// fields it needs and echoes the effective values into every output header.
struct ExperimentConfig {
    std::vector<int> n_qs{10};
    std::vector<double> eps_list;
    ChannelKind channel = ChannelKind::static_disorder;
    std::uint64_t seed = 1;
    int realizations = 1;
    std::filesystem::path out_dir = "out";
    double K = 1.7;
    int cells = 1;
    long t_max_cap = 0;
    double f_stop = 0.5;
    double sigma = 0.65;

    // poincare
    std::vector<double> k_values{0.53, 4.0 / 3.0, 1.7};
    int n_traj = 100;
    int n_steps = 500;

    // husimi
    std::string state_kind = "circle";  // "circle" or "coherent"
    double theta0 = 0.5 * pi;
    double p0 = 0.0;
    int circle_points = 100;
    long t_forward = 100;
    long t_backward = 0;
    std::vector<std::string> variants{"gaussian"};

    // theory tables
    double s_max = 5.0;
    int samples = 500;
};

/// Classical Poincare sections (one CSV per K value).
std::vector<std::filesystem::path> cmd_poincare(const ExperimentConfig& cfg);

/// Fidelity traces over the (n_q, eps) grid plus theoretical/fitted collapse
/// tables and the chi-curve overlay.
std::vector<std::filesystem::path> cmd_fidelity(const ExperimentConfig& cfg);

/// Fitted versus theoretical time scales (t_c, t_H, t_f) per (n_q, eps).
std::vector<std::filesystem::path> cmd_timescales(const ExperimentConfig& cfg);

/// Husimi pipelines: evolve the initial state t_forward iterations under the
/// channel, optionally t_backward inverse iterations, render the requested
/// variants as CSV + PPM at each stage.
std::vector<std::filesystem::path> cmd_husimi(const ExperimentConfig& cfg);

/// Closed-form theory tables: (tau, b2) and (s, chi, delta_chi) for both beta,
/// plus characteristic time scales for the configured grid.
std::vector<std::filesystem::path> cmd_theory(const ExperimentConfig& cfg);

} // namespace qtent
