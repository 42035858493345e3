#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qtent/gates.hpp"
#include "qtent/statevector.hpp"

namespace qtent {

/// One frozen realization of the static-imperfection Hamiltonian
/// dH = sum_j delta_j sz_j + 2 sum_j J_j sx_j sx_{j+1},
/// with delta_j, J_j iid uniform on [-sqrt(3) eps, sqrt(3) eps] (variance eps^2).
struct StaticDisorder {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> delta;     // n_q detunings
    std::vector<double> coupling;  // n_q - 1 nearest-neighbour couplings J_j

    int n_qubits() const { return static_cast<int>(delta.size()); }

    /// `delta_0 ... delta_{n_q-1}; J_0 ... J_{n_q-2}; epsilon; seed`
    std::string to_text() const;
    static StaticDisorder from_text(const std::string& text);
};

StaticDisorder sample_static_disorder(double epsilon, int n_q, std::uint64_t seed);

/// Prepared applier of e^{i dH} via the symmetric split
/// e^{iA/2} e^{iB} e^{iA/2} with A the sz part (diagonal) and B the sx-sx part
/// (mutually commuting bond rotations). Every factor is exactly unitary; the
/// splitting error per application is O(eps^3).
class StaticKick {
public:
    explicit StaticKick(const StaticDisorder& disorder);

    void apply(StateVector& state) const;
    const StaticDisorder& disorder() const { return disorder_; }

private:
    struct Bond {
        std::uint64_t flip_mask;  // bits j and j+1
        std::uint64_t high_bit;   // bit j+1, clear on the canonical pair index
        double c, s;              // cos(2 J_j), sin(2 J_j)
    };
    StaticDisorder disorder_;
    std::vector<cplx> half_diagonal_;  // e^{iA/2} phases, one per basis state
    std::vector<Bond> bonds_;
};

struct NoiseConfig {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

/// Gate with jittered parameters; `axis` replaces the sigma-x direction of
/// C^N / A gates, `gate.angle` carries the jittered phase for phase gates.
struct PerturbedGate {
    ElementaryGate gate;
    Axis3 axis;
};

/// Ideal rotation axes: e_x for the controlled flip, (e_x+e_z)/sqrt(2) for A.
Axis3 ideal_axis(GateKind kind);

/// Unit vector uniform on the spherical cap {|n - axis| <= radius}.
Axis3 sample_axis_in_cap(const Axis3& axis, double radius, Rng& rng);

/// Random-noise model: phase gates get phi -> phi + dphi with dphi uniform on
/// [-eps/2, eps/2]; sigma-x bearing gates get a fresh axis within a cap of
/// radius eps/2 about the ideal axis. Every draw is fresh per application and
/// the perturbed gate stays exactly unitary. With these widths the fidelity
/// decay follows t_r = 1/(0.095 eps^2 n_q^2).
PerturbedGate perturb_gate(const ElementaryGate& gate, const NoiseConfig& cfg, Rng& rng);

void apply_perturbed_gate(StateVector& state, const PerturbedGate& g);

/// Error channels for run_perturbed_map. NoiseChannel owns the RNG stream so
/// draws stay fresh across map iterations.
struct NoChannel {};

struct NoiseChannel {
    explicit NoiseChannel(const NoiseConfig& c) : cfg(c), rng(c.seed) {}
    NoiseConfig cfg;
    Rng rng;
};

using Channel = std::variant<NoChannel, StaticKick, NoiseChannel>;

/// Applies `seq` under the chosen channel: static = e^{i dH} before every
/// elementary gate (never before a BitReversal); noise = every gate replaced by
/// its perturbed version; none = ideal application, bit-identical to
/// apply_sequence.
void run_perturbed_map(StateVector& state, const GateSequence& seq, Channel& channel);

} // namespace qtent
