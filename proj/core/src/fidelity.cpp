#include "qtent/fidelity.hpp"

#include <cmath>
#include <stdexcept>

#include "qtent/common.hpp"
#include "qtent/rmt_theory.hpp"

namespace qtent {

const char* channel_name(ChannelKind kind)
{
    switch (kind) {
    case ChannelKind::none: return "none";
    case ChannelKind::noise: return "noise";
    case ChannelKind::static_disorder: return "static";
    }
    return "?";
}

ChannelKind channel_from_name(const std::string& name)
{
    if (name == "none") return ChannelKind::none;
    if (name == "noise") return ChannelKind::noise;
    if (name == "static") return ChannelKind::static_disorder;
    throw std::invalid_argument("unknown channel '" + name + "'");
}

std::uint64_t realization_seed(std::uint64_t base_seed, int index)
{
    return mix_seed(base_seed, static_cast<std::uint64_t>(index));
}

FidelityTrace run_fidelity(const TraceParams& params)
{
    params.map.validate();
    const GateSequence seq = build_map_sequence(params.map, MapDirection::forward);
    StateVector ideal = coherent_state(params.map.n_q, params.initial);
    StateVector perturbed = ideal;

    Channel channel{NoChannel{}};
    if (params.channel == ChannelKind::static_disorder)
        channel = StaticKick(sample_static_disorder(params.epsilon, params.map.n_q,
                                                    params.seed));
    else if (params.channel == ChannelKind::noise)
        channel = NoiseChannel(NoiseConfig{params.epsilon, params.seed});

    const double t_h = static_cast<double>(params.map.dim());
    long cap = params.t_max_cap;
    if (cap <= 0) cap = static_cast<long>(std::ceil(20.0 * params.sigma * t_h));

    FidelityTrace trace;
    trace.params = params;
    trace.f.reserve(static_cast<std::size_t>(std::min(cap, 1L << 22)) + 1);
    trace.f.push_back(1.0);
    for (long t = 1; t <= cap; ++t) {
        apply_sequence(ideal, seq);
        run_perturbed_map(perturbed, seq, channel);
        const double f = fidelity(perturbed, ideal);
        trace.f.push_back(f);
        if (f < params.f_stop) break;
    }
    return trace;
}

FitResult fit_timescales(std::span<const double> t, std::span<const double> y)
{
    FitResult res;
    double s11 = 0.0, s12 = 0.0, s22 = 0.0, b1 = 0.0, b2 = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0.0 || y[i] <= 1e-12) continue;
        const double w = 1.0 / (t[i] * y[i] * y[i]);
        const double t2 = t[i] * t[i];
        s11 += w * t2;
        s12 += w * t2 * t[i];
        s22 += w * t2 * t2;
        b1 += w * t[i] * y[i];
        b2 += w * t2 * y[i];
        ++used;
    }
    if (used < 5) {
        res.diagnostic = "fewer than 5 usable points";
        return res;
    }
    const double det = s11 * s22 - s12 * s12;
    if (det == 0.0) {
        res.diagnostic = "singular normal equations";
        return res;
    }
    res.a0 = (s22 * b1 - s12 * b2) / det;
    res.a1 = (s11 * b2 - s12 * b1) / det;
    double t_last = 0.0;
    double resid = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= 0.0 || y[i] <= 1e-12) continue;
        const double w = 1.0 / (t[i] * y[i] * y[i]);
        const double d = y[i] - res.a0 * t[i] - res.a1 * t[i] * t[i];
        resid += w * d * d;
        t_last = std::max(t_last, t[i]);
    }
    res.weighted_residual = resid;
    if (res.a0 <= 0.0) {
        res.diagnostic = "non-positive linear coefficient";
        return res;
    }
    res.valid = true;
    res.t_c_fit = 1.0 / res.a0;
    // quadratic term must be positive and contribute at least 1e-3 of the
    // linear term at the last fitted time to count as resolved
    if (res.a1 > 0.0 && res.a1 * t_last >= 1e-3 * res.a0) {
        res.t_h_resolved = true;
        res.t_h_fit = res.a0 / res.a1;
    } else {
        res.diagnostic = "quadratic term unresolved";
    }
    return res;
}

FitResult fit_timescales(const FidelityTrace& trace)
{
    std::vector<double> t, y;
    t.reserve(trace.f.size());
    y.reserve(trace.f.size());
    for (std::size_t i = 1; i < trace.f.size(); ++i) {
        t.push_back(static_cast<double>(i));
        y.push_back(-std::log(trace.f[i]));
    }
    return fit_timescales(t, y);
}

std::vector<CollapsePoint> scaling_collapse(std::span<const FidelityTrace> traces,
                                            CollapseMode mode)
{
    if (traces.empty()) throw std::invalid_argument("scaling_collapse: no traces");
    std::vector<CollapsePoint> out;
    for (const FidelityTrace& trace : traces) {
        double t_c, t_h;
        if (mode == CollapseMode::theoretical) {
            const Timescales ts =
                characteristic_timescales(trace.params.epsilon, trace.params.map.n_q,
                                          trace.params.sigma);
            t_c = ts.t_c;
            t_h = ts.t_heisenberg;
        } else {
            const FitResult fit = fit_timescales(trace);
            if (!fit.valid || !fit.t_h_resolved)
                throw std::runtime_error("scaling_collapse: fit failed (" +
                                         fit.diagnostic + ")");
            t_c = fit.t_c_fit;
            t_h = fit.t_h_fit;
        }
        bool any = false;
        for (std::size_t i = 1; i < trace.f.size(); ++i) {
            const double y = -std::log(trace.f[i]);
            if (y <= 1e-12) continue;
            out.push_back({static_cast<double>(i) / t_h, y * t_c / t_h,
                           trace.params.map.n_q, trace.params.epsilon});
            any = true;
        }
        if (!any)
            throw std::runtime_error("scaling_collapse: trace carries no decay (y == 0)");
    }
    return out;
}

std::optional<double> measure_tf(const FidelityTrace& trace, double threshold)
{
    if (threshold <= 0.0 || threshold >= 1.0)
        throw std::invalid_argument("measure_tf: threshold must be in (0,1)");
    for (std::size_t i = 1; i < trace.f.size(); ++i) {
        if (trace.f[i] <= threshold) {
            const double la = std::log(trace.f[i - 1]);
            const double lb = std::log(trace.f[i]);
            const double lt = std::log(threshold);
            if (lb == la) return static_cast<double>(i);
            return static_cast<double>(i - 1) + (lt - la) / (lb - la);
        }
    }
    return std::nullopt;
}

EnsembleStats ensemble_average(const TraceParams& base, int n_realizations)
{
    if (n_realizations < 1)
        throw std::invalid_argument("ensemble_average: n_realizations < 1");
    EnsembleStats stats;
    stats.n_realizations = n_realizations;
    stats.fits.resize(n_realizations);
    stats.t_f.resize(n_realizations);
    parallel_for_index(static_cast<std::size_t>(n_realizations), [&](std::size_t i) {
        TraceParams p = base;
        p.seed = realization_seed(base.seed, static_cast<int>(i));
        const FidelityTrace trace = run_fidelity(p);
        stats.fits[i] = fit_timescales(trace);
        stats.t_f[i] = measure_tf(trace);
    });
    double a0_sum = 0.0, a1_sum = 0.0, a0_sq = 0.0, a1_sq = 0.0;
    for (const FitResult& fit : stats.fits) {
        a0_sum += fit.a0;
        a1_sum += fit.a1;
        a0_sq += fit.a0 * fit.a0;
        a1_sq += fit.a1 * fit.a1;
    }
    const double n = static_cast<double>(n_realizations);
    stats.a0_mean = a0_sum / n;
    stats.a1_mean = a1_sum / n;
    if (n_realizations > 1) {
        stats.a0_stderr = std::sqrt(std::max(0.0, a0_sq / n - stats.a0_mean * stats.a0_mean) /
                                    (n - 1.0));
        stats.a1_stderr = std::sqrt(std::max(0.0, a1_sq / n - stats.a1_mean * stats.a1_mean) /
                                    (n - 1.0));
    }
    stats.t_c_agg = stats.a0_mean > 0.0 ? 1.0 / stats.a0_mean : 0.0;
    stats.t_h_agg = stats.a1_mean > 0.0 ? stats.a0_mean / stats.a1_mean : 0.0;
    return stats;
}

} // namespace qtent
