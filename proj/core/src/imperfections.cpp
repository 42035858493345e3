#include "qtent/imperfections.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qtent {

std::string StaticDisorder::to_text() const
{
    std::string out;
    char buf[40];
    for (std::size_t i = 0; i < delta.size(); ++i) {
        std::snprintf(buf, sizeof buf, i ? " %.17g" : "%.17g", delta[i]);
        out += buf;
    }
    out += ";";
    for (std::size_t i = 0; i < coupling.size(); ++i) {
        std::snprintf(buf, sizeof buf, " %.17g", coupling[i]);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "; %.17g; %llu", epsilon,
                  static_cast<unsigned long long>(seed));
    out += buf;
    return out;
}

StaticDisorder StaticDisorder::from_text(const std::string& text)
{
    StaticDisorder d;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::runtime_error("StaticDisorder::from_text: bad format");
    auto parse_list = [](const std::string& s) {
        std::vector<double> v;
        std::istringstream in(s);
        double x;
        while (in >> x) v.push_back(x);
        return v;
    };
    d.delta = parse_list(parts[0]);
    d.coupling = parse_list(parts[1]);
    d.epsilon = std::stod(parts[2]);
    d.seed = std::stoull(parts[3]);
    if (d.delta.empty() || d.coupling.size() + 1 != d.delta.size())
        throw std::runtime_error("StaticDisorder::from_text: inconsistent sizes");
    return d;
}

StaticDisorder sample_static_disorder(double epsilon, int n_q, std::uint64_t seed)
{
    if (epsilon < 0.0) throw std::invalid_argument("sample_static_disorder: epsilon < 0");
    if (n_q < 2) throw std::invalid_argument("sample_static_disorder: n_q < 2");
    StaticDisorder d;
    d.epsilon = epsilon;
    d.seed = seed;
    d.delta.resize(n_q);
    d.coupling.resize(n_q - 1);
    Rng rng(seed);
    const double bound = std::sqrt(3.0) * epsilon;
    for (double& x : d.delta) x = rng.uniform(-bound, bound);
    for (double& x : d.coupling) x = rng.uniform(-bound, bound);
    return d;
}

StaticKick::StaticKick(const StaticDisorder& disorder) : disorder_(disorder)
{
    const int n_q = disorder.n_qubits();
    if (n_q < 2) throw std::invalid_argument("StaticKick: disorder too small");
    const std::uint64_t n = std::uint64_t{1} << n_q;
    half_diagonal_.resize(n);
    for (std::uint64_t p = 0; p < n; ++p) {
        double phase = 0.0;
        for (int j = 0; j < n_q; ++j)
            phase += disorder.delta[j] * ((p >> j) & 1 ? -1.0 : 1.0);
        half_diagonal_[p] = std::polar(1.0, 0.5 * phase);
    }
    bonds_.reserve(n_q - 1);
    for (int j = 0; j + 1 < n_q; ++j) {
        Bond b;
        b.flip_mask = (std::uint64_t{3} << j);
        b.high_bit = std::uint64_t{1} << (j + 1);
        b.c = std::cos(2.0 * disorder.coupling[j]);
        b.s = std::sin(2.0 * disorder.coupling[j]);
        bonds_.push_back(b);
    }
}

void StaticKick::apply(StateVector& state) const
{
    if (state.n_qubits() != disorder_.n_qubits())
        throw std::invalid_argument("StaticKick::apply: dimension mismatch");
    auto amps = state.amplitudes();
    const std::uint64_t n = amps.size();
    for (std::uint64_t p = 0; p < n; ++p) amps[p] *= half_diagonal_[p];
    for (const Bond& b : bonds_) {
        for (std::uint64_t p = 0; p < n; ++p) {
            if (p & b.high_bit) continue;
            const std::uint64_t q = p ^ b.flip_mask;
            const cplx u = amps[p];
            const cplx v = amps[q];
            amps[p] = b.c * u + cplx{0.0, b.s} * v;
            amps[q] = b.c * v + cplx{0.0, b.s} * u;
        }
    }
    for (std::uint64_t p = 0; p < n; ++p) amps[p] *= half_diagonal_[p];
}

Axis3 ideal_axis(GateKind kind)
{
    if (kind == GateKind::half_turn) {
        const double r = std::sqrt(0.5);
        return {r, 0.0, r};
    }
    return {1.0, 0.0, 0.0};
}

Axis3 sample_axis_in_cap(const Axis3& axis, double radius, Rng& rng)
{
    if (radius <= 0.0) return axis;
    // |n - axis|^2 = 2 - 2 cos(gamma) <= radius^2, cos(gamma) uniform on the cap
    const double cmin = std::max(-1.0, 1.0 - 0.5 * radius * radius);
    const double c = rng.uniform(cmin, 1.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double az = rng.uniform(0.0, 2.0 * pi);
    // orthonormal frame (e1, e2, axis)
    Axis3 h = std::abs(axis.x) < 0.9 ? Axis3{1.0, 0.0, 0.0} : Axis3{0.0, 1.0, 0.0};
    Axis3 e1{axis.y * h.z - axis.z * h.y, axis.z * h.x - axis.x * h.z,
             axis.x * h.y - axis.y * h.x};
    const double n1 = std::sqrt(e1.x * e1.x + e1.y * e1.y + e1.z * e1.z);
    e1 = {e1.x / n1, e1.y / n1, e1.z / n1};
    const Axis3 e2{axis.y * e1.z - axis.z * e1.y, axis.z * e1.x - axis.x * e1.z,
                   axis.x * e1.y - axis.y * e1.x};
    const double ca = std::cos(az), sa = std::sin(az);
    return {c * axis.x + s * (ca * e1.x + sa * e2.x),
            c * axis.y + s * (ca * e1.y + sa * e2.y),
            c * axis.z + s * (ca * e1.z + sa * e2.z)};
}

PerturbedGate perturb_gate(const ElementaryGate& gate, const NoiseConfig& cfg, Rng& rng)
{
    PerturbedGate out{gate, ideal_axis(gate.kind)};
    if (cfg.epsilon <= 0.0) return out;
    const double half = 0.5 * cfg.epsilon;
    switch (gate.kind) {
    case GateKind::phase_shift:
    case GateKind::controlled_phase:
        out.gate.angle += rng.uniform(-half, half);
        break;
    case GateKind::controlled_not:
    case GateKind::half_turn:
        out.axis = sample_axis_in_cap(out.axis, half, rng);
        break;
    case GateKind::bit_reversal:
        break;
    }
    return out;
}

void apply_perturbed_gate(StateVector& state, const PerturbedGate& g)
{
    switch (g.gate.kind) {
    case GateKind::phase_shift:
        state.apply_phase_shift(g.gate.a, g.gate.angle);
        break;
    case GateKind::controlled_phase:
        state.apply_controlled_phase(g.gate.a, g.gate.b, g.gate.angle);
        break;
    case GateKind::controlled_not:
        state.apply_controlled_axis_flip(g.gate.a, g.gate.b, g.axis);
        break;
    case GateKind::half_turn:
        state.apply_axis_half_turn(g.gate.a, g.axis);
        break;
    case GateKind::bit_reversal:
        state.apply_bit_reversal();
        break;
    }
}

void run_perturbed_map(StateVector& state, const GateSequence& seq, Channel& channel)
{
    if (state.n_qubits() != seq.n_qubits())
        throw std::invalid_argument("run_perturbed_map: dimension mismatch");
    if (std::holds_alternative<NoChannel>(channel)) {
        apply_sequence(state, seq);
        return;
    }
    if (auto* kick = std::get_if<StaticKick>(&channel)) {
        for (const ElementaryGate& g : seq.gates()) {
            if (g.is_elementary()) kick->apply(state);
            apply_gate(state, g);
        }
        return;
    }
    auto& noise = std::get<NoiseChannel>(channel);
    if (noise.cfg.epsilon <= 0.0) {
        apply_sequence(state, seq);  // bit-identical to the ideal map
        return;
    }
    for (const ElementaryGate& g : seq.gates()) {
        if (!g.is_elementary()) {
            apply_gate(state, g);
            continue;
        }
        apply_perturbed_gate(state, perturb_gate(g, noise.cfg, noise.rng));
    }
}

} // namespace qtent
