#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtent/statevector.hpp"

namespace qtent {

enum class GateKind {
    phase_shift,       // B1_j(phi)
    controlled_phase,  // B2_jk(phi)
    controlled_not,    // C^N_{kl}, a = target k, b = control l
    half_turn,         // A_j
    bit_reversal,      // R (bookkeeping, not an elementary gate)
};

struct ElementaryGate {
    GateKind kind;
    int a = -1;          // j / target
    int b = -1;          // k / control
    double angle = 0.0;  // phase kinds only

    bool is_elementary() const { return kind != GateKind::bit_reversal; }
};

/// Ordered gate stream for one (partial) circuit. Immutable once built;
/// the stream order is the imperfection-interleaving order.
class GateSequence {
public:
    explicit GateSequence(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<ElementaryGate>& gates() const { return gates_; }

    void add_phase_shift(int j, double phi);
    void add_controlled_phase(int j, int k, double phi);
    void add_cnot(int target, int control);
    void add_half_turn_a(int j);
    void add_bit_reversal();
    void append(const GateSequence& tail);

    /// Count excluding BitReversal markers; this is the paper's n_g accounting.
    std::size_t elementary_count() const { return elementary_count_; }
    std::size_t bit_reversal_count() const { return gates_.size() - elementary_count_; }

    /// Gates in reversed order with negated phase angles (A, C^N, R are involutions).
    GateSequence inverted() const;

    /// Line-oriented text: `KIND j [k] [angle]`, one gate per line.
    std::string to_text() const;
    static GateSequence from_text(int n_qubits, const std::string& text);

private:
    int n_qubits_;
    std::vector<ElementaryGate> gates_;
    std::size_t elementary_count_ = 0;
};

void apply_gate(StateVector& state, const ElementaryGate& g);

void apply_sequence(StateVector& state, const GateSequence& seq);

/// Invokes hook(state, gate, index) before every elementary gate (never before
/// a BitReversal marker); index counts elementary gates from 0.
template <class Hook>
void apply_sequence(StateVector& state, const GateSequence& seq, Hook&& hook)
{
    if (state.n_qubits() != seq.n_qubits())
        throw std::invalid_argument("apply_sequence: dimension mismatch");
    std::size_t index = 0;
    for (const ElementaryGate& g : seq.gates()) {
        if (g.is_elementary()) hook(state, g, index++);
        apply_gate(state, g);
    }
}

} // namespace qtent
