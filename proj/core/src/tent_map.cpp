#include "qtent/tent_map.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtent/classical.hpp"

namespace qtent {

void TentMapParams::validate() const
{
    if (n_q < 2 || n_q > 30) throw std::invalid_argument("TentMapParams: n_q out of range");
    if (cells < 1) throw std::invalid_argument("TentMapParams: cells must be >= 1");
    if (!(K >= 0.0)) throw std::invalid_argument("TentMapParams: K must be non-negative");
}

long map_gate_count(int n_q)
{
    return (9L * n_q * n_q - 11L * n_q + 8L) / 2L;
}

namespace {

void append_qft(GateSequence& seq, int n_q, int direction)
{
    for_each_qft_gate(
        0, n_q, direction,
        [&](int j, int k, double angle) { seq.add_controlled_phase(j, k, angle); },
        [&](int j) { seq.add_half_turn_a(j); });
    seq.add_bit_reversal();
}

/// Three-qubit phase e^{i phi a_j a_k a_l} as 5 two-qubit gates:
/// B2_jl(phi/2) B2_jk(phi/2) C_kl B2_jk(-phi/2) C_kl, rightmost applied first.
void append_b3(GateSequence& seq, int j, int k, int l, double phi)
{
    seq.add_cnot(k, l);
    seq.add_controlled_phase(j, k, -0.5 * phi);
    seq.add_cnot(k, l);
    seq.add_controlled_phase(j, k, 0.5 * phi);
    seq.add_controlled_phase(j, l, 0.5 * phi);
}

} // namespace

GateSequence build_kinetic_sequence(const TentMapParams& params)
{
    params.validate();
    const int n_q = params.n_q;
    const double T = params.period();
    GateSequence seq(n_q);
    for (int j = 0; j < n_q; ++j)
        for (int k = j + 1; k < n_q; ++k)
            seq.add_controlled_phase(j, k, -T * std::ldexp(1.0, j + k));
    for (int j = 0; j < n_q; ++j)
        seq.add_phase_shift(j, -T * std::ldexp(1.0, 2 * j - 1));
    return seq;
}

GateSequence build_potential_sequence(const TentMapParams& params)
{
    params.validate();
    const int n_q = params.n_q;
    const int l = n_q - 1;
    const double kpi2 = params.kick_strength() * pi * pi;
    GateSequence seq(n_q);
    append_qft(seq, n_q, +1);
    for (int j = 0; j + 1 < n_q; ++j) {
        for (int k = j + 1; k + 1 < n_q; ++k) {
            append_b3(seq, j, k, l, -kpi2 * std::ldexp(1.0, j + k - 2 * n_q + 3));
            seq.add_controlled_phase(j, k, kpi2 * std::ldexp(1.0, j + k - 2 * n_q + 2));
        }
    }
    for (int j = 0; j + 1 < n_q; ++j) {
        // Top-qubit pair angle carries 2^{j-n_q+1}; together with the B1 below it
        // realizes the sign flip of the kick phase polynomial on the upper branch.
        const double scale = std::ldexp(1.0, j - n_q + 1) - 1.0;
        seq.add_controlled_phase(j, l, -kpi2 * std::ldexp(1.0, j - n_q + 1) * scale);
        seq.add_phase_shift(j, kpi2 * std::ldexp(1.0, j - n_q) * scale);
    }
    append_qft(seq, n_q, -1);
    return seq;
}

GateSequence build_map_sequence(const TentMapParams& params, MapDirection direction)
{
    GateSequence seq = build_potential_sequence(params);
    seq.append(build_kinetic_sequence(params));
    if (direction == MapDirection::inverse) return seq.inverted();
    return seq;
}

namespace {

/// Direct O(N^2) discrete Fourier transform, sign +1 for U_QFT of Eq-style
/// convention <q|F|p> = e^{+2 pi i p q / N} / sqrt(N).
void dft_direct(StateVector& state, int sign)
{
    const std::uint64_t n = state.dim();
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    const double unit = sign * 2.0 * pi / static_cast<double>(n);
    for (std::uint64_t q = 0; q < n; ++q) {
        cplx acc{0.0, 0.0};
        for (std::uint64_t p = 0; p < n; ++p) {
            const double arg = unit * static_cast<double>((p * q) % n);
            acc += std::polar(1.0, arg) * state[p];
        }
        out[q] = norm * acc;
    }
    for (std::uint64_t q = 0; q < n; ++q) state[q] = out[q];
}

} // namespace

void direct_map_oracle(StateVector& state, const TentMapParams& params,
                       MapDirection direction)
{
    params.validate();
    if (state.n_qubits() != params.n_q)
        throw std::invalid_argument("direct_map_oracle: dimension mismatch");
    const std::uint64_t n = state.dim();
    const double T = params.period();
    const double k = params.kick_strength();
    const double sgn = direction == MapDirection::forward ? 1.0 : -1.0;
    if (direction == MapDirection::inverse) {
        // inverse map: undo kinetic phase first, then the kick factor
        for (std::uint64_t p = 0; p < n; ++p) {
            const double pv = static_cast<double>(p);
            state[p] *= std::polar(1.0, 0.5 * T * pv * pv);
        }
    }
    dft_direct(state, +1);
    for (std::uint64_t p = 0; p < n; ++p) {
        const double theta = 2.0 * pi * static_cast<double>(p) / static_cast<double>(n);
        state[p] *= std::polar(1.0, -sgn * kick_potential(theta, k));
    }
    dft_direct(state, -1);
    if (direction == MapDirection::forward) {
        for (std::uint64_t p = 0; p < n; ++p) {
            const double pv = static_cast<double>(p);
            state[p] *= std::polar(1.0, -0.5 * T * pv * pv);
        }
    }
}

} // namespace qtent
