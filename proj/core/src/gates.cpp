#include "qtent/gates.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qtent {

GateSequence::GateSequence(int n_qubits) : n_qubits_(n_qubits)
{
    if (n_qubits < 1) throw std::invalid_argument("GateSequence: bad qubit count");
}

void GateSequence::add_phase_shift(int j, double phi)
{
    if (j < 0 || j >= n_qubits_) throw std::invalid_argument("add_phase_shift: bad qubit");
    gates_.push_back({GateKind::phase_shift, j, -1, phi});
    ++elementary_count_;
}

void GateSequence::add_controlled_phase(int j, int k, double phi)
{
    if (j < 0 || j >= n_qubits_ || k < 0 || k >= n_qubits_ || j == k)
        throw std::invalid_argument("add_controlled_phase: bad qubits");
    gates_.push_back({GateKind::controlled_phase, j, k, phi});
    ++elementary_count_;
}

void GateSequence::add_cnot(int target, int control)
{
    if (target < 0 || target >= n_qubits_ || control < 0 || control >= n_qubits_ ||
        target == control)
        throw std::invalid_argument("add_cnot: bad qubits");
    gates_.push_back({GateKind::controlled_not, target, control, 0.0});
    ++elementary_count_;
}

void GateSequence::add_half_turn_a(int j)
{
    if (j < 0 || j >= n_qubits_) throw std::invalid_argument("add_half_turn_a: bad qubit");
    gates_.push_back({GateKind::half_turn, j, -1, 0.0});
    ++elementary_count_;
}

void GateSequence::add_bit_reversal()
{
    gates_.push_back({GateKind::bit_reversal, -1, -1, 0.0});
}

void GateSequence::append(const GateSequence& tail)
{
    if (tail.n_qubits_ != n_qubits_) throw std::invalid_argument("append: dimension mismatch");
    gates_.insert(gates_.end(), tail.gates_.begin(), tail.gates_.end());
    elementary_count_ += tail.elementary_count_;
}

GateSequence GateSequence::inverted() const
{
    GateSequence inv(n_qubits_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        ElementaryGate g = *it;
        if (g.kind == GateKind::phase_shift || g.kind == GateKind::controlled_phase)
            g.angle = -g.angle;
        inv.gates_.push_back(g);
    }
    inv.elementary_count_ = elementary_count_;
    return inv;
}

std::string GateSequence::to_text() const
{
    std::string out;
    char line[96];
    for (const ElementaryGate& g : gates_) {
        switch (g.kind) {
        case GateKind::phase_shift:
            std::snprintf(line, sizeof line, "B1 %d %.17g\n", g.a, g.angle);
            break;
        case GateKind::controlled_phase:
            std::snprintf(line, sizeof line, "B2 %d %d %.17g\n", g.a, g.b, g.angle);
            break;
        case GateKind::controlled_not:
            std::snprintf(line, sizeof line, "CN %d %d\n", g.a, g.b);
            break;
        case GateKind::half_turn:
            std::snprintf(line, sizeof line, "A %d\n", g.a);
            break;
        case GateKind::bit_reversal:
            std::snprintf(line, sizeof line, "R\n");
            break;
        }
        out += line;
    }
    return out;
}

GateSequence GateSequence::from_text(int n_qubits, const std::string& text)
{
    GateSequence seq(n_qubits);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "B1") {
            int j; double phi;
            if (!(ls >> j >> phi)) throw std::runtime_error("from_text: bad B1 line");
            seq.add_phase_shift(j, phi);
        } else if (kind == "B2") {
            int j, k; double phi;
            if (!(ls >> j >> k >> phi)) throw std::runtime_error("from_text: bad B2 line");
            seq.add_controlled_phase(j, k, phi);
        } else if (kind == "CN") {
            int t, c;
            if (!(ls >> t >> c)) throw std::runtime_error("from_text: bad CN line");
            seq.add_cnot(t, c);
        } else if (kind == "A") {
            int j;
            if (!(ls >> j)) throw std::runtime_error("from_text: bad A line");
            seq.add_half_turn_a(j);
        } else if (kind == "R") {
            seq.add_bit_reversal();
        } else {
            throw std::runtime_error("from_text: unknown gate kind '" + kind + "'");
        }
    }
    return seq;
}

void apply_gate(StateVector& state, const ElementaryGate& g)
{
    switch (g.kind) {
    case GateKind::phase_shift: state.apply_phase_shift(g.a, g.angle); break;
    case GateKind::controlled_phase: state.apply_controlled_phase(g.a, g.b, g.angle); break;
    case GateKind::controlled_not: state.apply_cnot(g.a, g.b); break;
    case GateKind::half_turn: state.apply_half_turn_a(g.a); break;
    case GateKind::bit_reversal: state.apply_bit_reversal(); break;
    }
}

void apply_sequence(StateVector& state, const GateSequence& seq)
{
    if (state.n_qubits() != seq.n_qubits())
        throw std::invalid_argument("apply_sequence: dimension mismatch");
    for (const ElementaryGate& g : seq.gates()) apply_gate(state, g);
}

} // namespace qtent
