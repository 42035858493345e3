#include "qtent/rmt_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "qtent/tent_map.hpp"

namespace qtent {

namespace {

void check_beta(int beta)
{
    if (beta != 1 && beta != 2)
        throw std::invalid_argument("beta must be 1 (orthogonal) or 2 (unitary)");
}

} // namespace

double b2_form_factor(double tau, int beta)
{
    check_beta(beta);
    const double t = std::abs(tau);
    if (beta == 2) return t <= 1.0 ? 1.0 - t : 0.0;
    if (t <= 1.0) return 1.0 - 2.0 * t + t * std::log(2.0 * t + 1.0);
    return -1.0 + t * std::log((2.0 * t + 1.0) / (2.0 * t - 1.0));
}

double delta_chi(double s, int beta)
{
    check_beta(beta);
    if (s < 0.0) throw std::invalid_argument("delta_chi: s < 0");
    if (beta == 2) {
        if (s <= 1.0) return -s * s + s * s * s / 3.0;
        return -s + 1.0 / 3.0;
    }
    if (s <= 1.0) {
        return (-3.0 * s - 24.0 * s * s + 17.0 * s * s * s) / 18.0 +
               (1.0 + 3.0 * s - 4.0 * s * s * s) * std::log(2.0 * s + 1.0) / 12.0;
    }
    return -5.0 / 9.0 + (2.0 - 3.0 * s + s * s) / 3.0 +
           (1.0 - 3.0 * s + 4.0 * s * s * s) * std::log(2.0 * s - 1.0) / 12.0 +
           (1.0 + 3.0 * s - 4.0 * s * s * s) * std::log(2.0 * s + 1.0) / 12.0;
}

double chi(double s, int beta)
{
    return s + (2.0 / beta) * s * s + delta_chi(s, beta);
}

double ln_fidelity_theory(double t, const TheoryParams& params, FidelityLawMode mode)
{
    if (t < 0.0) throw std::invalid_argument("ln_fidelity_theory: t < 0");
    if (t == 0.0) return 0.0;
    const double n_eff = params.sigma * params.t_heisenberg;
    if (mode == FidelityLawMode::full)
        return n_eff / params.t_c * chi(t / n_eff, params.beta);
    return t / params.t_c +
           (2.0 / params.sigma) * t * t / (params.t_c * params.t_heisenberg);
}

double delta_chi_diffusive(double s, double g, int dimension, int beta)
{
    check_beta(beta);
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("delta_chi_diffusive: dimension must be 1, 2 or 3");
    if (!(s > 0.0) || !(g > 0.0))
        throw std::invalid_argument("delta_chi_diffusive: s and g must be positive");
    const double hd = 0.5 * dimension;
    return (4.0 / beta) * std::pow(s, 3.0 - hd) /
           ((2.0 - hd) * (3.0 - hd) * std::pow(4.0 * pi * g, hd));
}

double reliability_time(double t_c, double t_heisenberg, double sigma)
{
    const double ln109 = std::log(10.0 / 9.0);
    const double disc = 1.0 + (8.0 / sigma) * (t_c / t_heisenberg) * ln109;
    return 2.0 * t_c * ln109 / (1.0 + std::sqrt(disc));
}

Timescales characteristic_timescales(double epsilon, int n_q, double sigma)
{
    if (!(epsilon > 0.0)) throw std::invalid_argument("timescales: epsilon must be > 0");
    if (n_q < 2) throw std::invalid_argument("timescales: n_q < 2");
    const double n_g = static_cast<double>(map_gate_count(n_q));
    Timescales ts;
    ts.t_c = 1.0 / (epsilon * epsilon * n_q * n_g * n_g);
    ts.t_r = 1.0 / (0.095 * epsilon * epsilon * n_q * n_q);
    ts.t_heisenberg = std::ldexp(1.0, n_q);
    ts.eps_chaos = std::exp2(-0.5 * n_q) / (n_g * std::sqrt(static_cast<double>(n_q)));
    ts.t_f = reliability_time(ts.t_c, ts.t_heisenberg, sigma);
    return ts;
}

} // namespace qtent
