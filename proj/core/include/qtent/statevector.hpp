#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qtent/common.hpp"

namespace qtent {

/// Unit axis on the Bloch sphere; ideal sigma-x gates sit at {1,0,0}.
struct Axis3 {
    double x = 1.0, y = 0.0, z = 0.0;
};

/// Dense amplitudes of an n_q-qubit register. Index p is the momentum
/// eigenvalue with binary digits alpha_j: p = sum_j alpha_j 2^j.
class StateVector {
public:
    explicit StateVector(int n_qubits);
    static StateVector basis_state(int n_qubits, std::uint64_t p);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }

    cplx& operator[](std::uint64_t p) { return amps_[p]; }
    const cplx& operator[](std::uint64_t p) const { return amps_[p]; }
    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    double squared_norm() const;
    void normalize();

    /// B1_j(phi): multiplies amps[p] by e^{i phi} when alpha_j = 1.
    void apply_phase_shift(int j, double phi);
    /// B2_jk(phi): multiplies amps[p] by e^{i phi} when alpha_j = alpha_k = 1.
    void apply_controlled_phase(int j, int k, double phi);
    /// C^N_{kl}: flips bit k (target) when alpha_l = 1 (control).
    void apply_cnot(int target, int control);
    /// A_j = (1/sqrt2) [[1,1],[1,-1]] on qubit j.
    void apply_half_turn_a(int j);
    /// n·sigma on qubit j; reduces to A_j for n = (e_x+e_z)/sqrt2.
    void apply_axis_half_turn(int j, const Axis3& n);
    /// Controlled n·sigma; reduces to C^N for n = e_x.
    void apply_controlled_axis_flip(int target, int control, const Axis3& n);

    /// Reverses the binary digits of every index (alpha_j <-> alpha_{n_q-1-j}).
    void apply_bit_reversal();
    /// Same restricted to the qubit window [first, first+count).
    void apply_bit_reversal(int first, int count);

private:
    void check_qubit(int j) const;

    int n_qubits_;
    std::vector<cplx> amps_;
};

enum class QftSpan { all, first_half };

/// U_QFT^{direction} built from half-turn and controlled-phase gates plus one
/// bit reversal; first_half acts on qubits 0..n_q/2-1 and needs even n_q.
void apply_qft(StateVector& state, int direction, QftSpan span = QftSpan::all);

/// Enumerates the QFT gate stream in application order:
/// emit_cphase(j, k, angle) and emit_half_turn(j) on absolute qubit indices,
/// followed by one bit reversal over [first, first+count) supplied by the caller.
template <class CPhase, class HalfTurn>
void for_each_qft_gate(int first, int count, int direction, CPhase&& emit_cphase,
                       HalfTurn&& emit_half_turn)
{
    for (int j = count - 1; j >= 0; --j) {
        for (int k = count - 1; k > j; --k) {
            const double angle = direction * pi * std::ldexp(1.0, j - k);
            emit_cphase(first + j, first + k, angle);
        }
        emit_half_turn(first + j);
    }
}

cplx inner_product(const StateVector& a, const StateVector& b);

/// f = |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

} // namespace qtent
