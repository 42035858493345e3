#pragma once

namespace qtent {

/// Inputs of the universal fidelity-decay law. beta is the Wigner-Dyson
/// symmetry class (1 orthogonal, 2 unitary); sigma the chaotic phase-space
/// fraction; g, dimension enter the diffusive correction only.
struct TheoryParams {
    int beta = 1;
    double sigma = 0.65;
    double t_heisenberg = 1024.0;  // 2^{n_q}
    double t_c = 1.0;
    double g = 1.0;
    int dimension = 1;
};

/// Wigner-Dyson two-level form factor b2(tau) for beta in {1,2}.
double b2_form_factor(double tau, int beta);

/// delta_chi(s) = -2 * integral_0^s (s - tau) b2(tau) dtau, in closed form.
/// For s > 1 the closed forms are the quadrature-consistent ones:
/// beta=2 gives -s + 1/3 (constant slope -1), beta=1 tends to
/// -s + ln(2s)/6 + 1/3.
double delta_chi(double s, int beta);

/// chi(s) = s + (2/beta) s^2 + delta_chi(s).
double chi(double s, int beta);

enum class FidelityLawMode { full, quadratic };

/// -<ln f(t)>: full mode (sigma t_H / t_c) chi(t / (sigma t_H)); quadratic mode
/// drops delta_chi: t/t_c + (2/sigma) t^2/(t_c t_H).
double ln_fidelity_theory(double t, const TheoryParams& params, FidelityLawMode mode);

/// Altshuler-Shklovskii diffusive correction to chi(s) in the continuum limit:
/// (4/beta) s^{3-d/2} / ((2-d/2)(3-d/2)(4 pi g)^{d/2}).
double delta_chi_diffusive(double s, double g, int dimension, int beta);

struct Timescales {
    double t_c;           // 1/(eps^2 n_q n_g^2)
    double t_r;           // 1/(0.095 eps^2 n_q^2), random-noise decay time
    double t_heisenberg;  // 2^{n_q}
    double eps_chaos;     // 2^{-n_q/2}/(n_g sqrt(n_q))
    double t_f;           // f(t_f) = 0.9 horizon from the quadratic law
};

Timescales characteristic_timescales(double epsilon, int n_q, double sigma = 0.65);

/// t_f solving t/t_c + (2/sigma) t^2/(t_c t_H) = ln(10/9); tends to
/// t_c ln(10/9) for t_c << t_H.
double reliability_time(double t_c, double t_heisenberg, double sigma = 0.65);

} // namespace qtent
