#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtent/husimi.hpp"
#include "qtent/imperfections.hpp"
#include "qtent/tent_map.hpp"

namespace qtent {

enum class ChannelKind { none, noise, static_disorder };

const char* channel_name(ChannelKind kind);
ChannelKind channel_from_name(const std::string& name);

struct TraceParams {
    TentMapParams map;
    ChannelKind channel = ChannelKind::none;
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    CoherentSpec initial{0.5 * pi, 0.0};  // near the saddle (chaotic component)
    double sigma = 0.65;
    double f_stop = 0.5;     // stop recording once f < f_stop
    long t_max_cap = 0;      // 0: default cap 20 * sigma * t_H
};

/// f(t) for t = 0..t_end (f[0] = 1 exactly), one map iteration per step.
/// Every iteration is recorded.
struct FidelityTrace {
    TraceParams params;
    std::vector<double> f;

    long t_end() const { return static_cast<long>(f.size()) - 1; }
};

/// Co-evolves the ideal and perturbed states from the same coherent packet,
/// recording f(t) = |<psi_eps(t)|psi(t)>|^2 each iteration. Deterministic for
/// fixed seed.
FidelityTrace run_fidelity(const TraceParams& params);

struct FitResult {
    double a0 = 0.0;              // linear coefficient of y = a0 t + a1 t^2
    double a1 = 0.0;
    double t_c_fit = 0.0;         // 1/a0
    double t_h_fit = 0.0;         // a0/a1
    double weighted_residual = 0.0;
    bool valid = false;           // >= 5 usable points and a0 > 0
    bool t_h_resolved = false;    // a1 > 0 and quadratic term non-negligible
    std::string diagnostic;
};

/// Weighted least squares of y(t) = a0 t + a1 t^2 with w(t) = 1/(t y^2(t)).
/// Points with y <= 1e-12 (and t = 0) are excluded.
FitResult fit_timescales(std::span<const double> t, std::span<const double> y);
FitResult fit_timescales(const FidelityTrace& trace);

struct CollapsePoint {
    double x = 0.0;  // t / t_H   (or t / t_H_fit in fitted mode)
    double y = 0.0;  // -ln f * t_c / t_H  (or the fitted analogue)
    int n_q = 0;
    double epsilon = 0.0;
};

enum class CollapseMode { theoretical, fitted };

/// Rescales traces onto the Fig.-5-style collapse: theoretical mode uses
/// t_c = 1/(eps^2 n_q n_g^2) and t_H = 2^{n_q}; fitted mode uses the
/// per-trace fit results (failed/degenerate fits propagate as an error).
std::vector<CollapsePoint> scaling_collapse(std::span<const FidelityTrace> traces,
                                            CollapseMode mode);

/// First crossing f(t_f) = threshold, linearly interpolated in (t, ln f).
std::optional<double> measure_tf(const FidelityTrace& trace, double threshold = 0.9);

struct EnsembleStats {
    int n_realizations = 0;
    double a0_mean = 0.0, a0_stderr = 0.0;
    double a1_mean = 0.0, a1_stderr = 0.0;
    double t_c_agg = 0.0;  // <t_c_fit^{-1}>^{-1} = 1/<a0>
    double t_h_agg = 0.0;  // <a0>/<a1>
    std::vector<FitResult> fits;
    std::vector<std::optional<double>> t_f;
};

/// Runs n_realizations independent disorder/noise realizations of `base`
/// (seeds derived from base.seed), fits each trace, and aggregates the fit
/// coefficients the way Figs. 6-7 do.
EnsembleStats ensemble_average(const TraceParams& base, int n_realizations);

/// Seed used for realization index i of an ensemble.
std::uint64_t realization_seed(std::uint64_t base_seed, int index);

} // namespace qtent
