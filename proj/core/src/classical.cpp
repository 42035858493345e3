#include "qtent/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qtent {

namespace {

double wrap_2pi(double x)
{
    x = std::fmod(x, 2.0 * pi);
    if (x < 0.0) x += 2.0 * pi;
    return x;
}

} // namespace

double kick_potential(double theta, double k)
{
    const double th = wrap_2pi(theta);
    if (th < pi) return -0.5 * k * th * (th - pi);
    return 0.5 * k * (th - pi) * (th - 2.0 * pi);
}

double kick_potential_derivative(double theta, double k)
{
    const double th = wrap_2pi(theta);
    if (th < pi) return k * (0.5 * pi - th);
    return k * (th - 1.5 * pi);
}

PhasePoint classical_step(PhasePoint pt, const ClassicalMapParams& params,
                          double noise_amp, Rng& rng)
{
    const double xi = noise_amp > 0.0 ? rng.uniform(-noise_amp, noise_amp) : 0.0;
    const double p_new = pt.p - kick_potential_derivative(pt.theta, params.k) + xi;
    return {wrap_2pi(pt.theta + p_new * params.T), p_new};
}

PhasePoint classical_step(PhasePoint pt, const ClassicalMapParams& params)
{
    const double p_new = pt.p - kick_potential_derivative(pt.theta, params.k);
    return {wrap_2pi(pt.theta + p_new * params.T), p_new};
}

PhasePoint classical_step_back(PhasePoint pt, const ClassicalMapParams& params,
                               double noise_amp, Rng& rng)
{
    const double theta_prev = wrap_2pi(pt.theta - pt.p * params.T);
    const double xi = noise_amp > 0.0 ? rng.uniform(-noise_amp, noise_amp) : 0.0;
    const double p_prev = pt.p + kick_potential_derivative(theta_prev, params.k) + xi;
    return {theta_prev, p_prev};
}

PhasePoint classical_step_back(PhasePoint pt, const ClassicalMapParams& params)
{
    const double theta_prev = wrap_2pi(pt.theta - pt.p * params.T);
    const double p_prev = pt.p + kick_potential_derivative(theta_prev, params.k);
    return {theta_prev, p_prev};
}

std::vector<PhasePoint> poincare_section(const ClassicalMapParams& params, int n_traj,
                                         int n_steps, std::uint64_t seed)
{
    if (n_traj < 0 || n_steps < 0)
        throw std::invalid_argument("poincare_section: negative counts");
    const double p_cell = 2.0 * pi / params.T;
    std::vector<PhasePoint> cloud;
    cloud.reserve(static_cast<std::size_t>(n_traj) * (n_steps + 1));
    for (int i = 0; i < n_traj; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        PhasePoint pt{rng.uniform(0.0, 2.0 * pi), rng.uniform(0.0, p_cell)};
        cloud.push_back({pt.theta, std::fmod(pt.p, p_cell)});
        for (int s = 0; s < n_steps; ++s) {
            pt = classical_step(pt, params);
            double pm = std::fmod(pt.p, p_cell);
            if (pm < 0.0) pm += p_cell;
            cloud.push_back({pt.theta, pm});
        }
    }
    return cloud;
}

DiffusionResult diffusion_estimate(double k, double T, int n_traj, int t,
                                   std::uint64_t seed)
{
    if (n_traj < 1 || t < 1) throw std::invalid_argument("diffusion_estimate: bad counts");
    const ClassicalMapParams params{k, T};
    double acc = 0.0;
    for (int i = 0; i < n_traj; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        PhasePoint pt{rng.uniform(0.0, 2.0 * pi), rng.uniform(0.0, 2.0 * pi / T)};
        const double p0 = pt.p;
        for (int s = 0; s < t; ++s) pt = classical_step(pt, params);
        const double d = pt.p - p0;
        acc += d * d;
    }
    DiffusionResult r;
    r.measured = acc / n_traj / t;
    r.theory = pi * pi * k * k / 12.0;
    r.random_phase_valid = params.chaos_parameter() >= 4.0;
    r.n_traj = n_traj;
    r.t = t;
    return r;
}

} // namespace qtent
