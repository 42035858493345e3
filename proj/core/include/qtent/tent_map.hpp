#pragma once

#include <cstdint>

#include "qtent/gates.hpp"
#include "qtent/statevector.hpp"

namespace qtent {

/// Quantized tent map on one (or `cells`) classical cells: K = kT is the
/// chaos parameter, T = 2*pi*cells/N the kick period, k = K/T the kick strength.
struct TentMapParams {
    int n_q = 10;
    double K = 1.7;
    int cells = 1;  // L in T = 2*pi*L/N

    std::uint64_t dim() const { return std::uint64_t{1} << n_q; }
    double period() const { return 2.0 * pi * cells / static_cast<double>(dim()); }
    double kick_strength() const { return K / period(); }
    void validate() const;
};

/// n_g = (9/2) n_q^2 - (11/2) n_q + 4, the elementary-gate count of one map
/// iteration (BitReversal markers excluded).
long map_gate_count(int n_q);

/// Diagonal kinetic factor e^{-i T p^2/2} as controlled-phase/phase gates.
GateSequence build_kinetic_sequence(const TentMapParams& params);

/// Kick factor e^{-i V(theta)}: QFT, the diagonal phase ladder (three-qubit
/// phases expanded into 5 two-qubit gates each), inverse QFT.
GateSequence build_potential_sequence(const TentMapParams& params);

enum class MapDirection { forward, inverse };

/// One full map iteration U = e^{-iT p^2/2} e^{-iV(theta)} (or its inverse:
/// reversed stream with negated phase angles).
GateSequence build_map_sequence(const TentMapParams& params,
                                MapDirection direction = MapDirection::forward);

/// One map iteration computed without the gate decomposition: direct O(N^2)
/// Fourier sums and diagonal phases. Validation reference for the circuits.
void direct_map_oracle(StateVector& state, const TentMapParams& params,
                       MapDirection direction = MapDirection::forward);

} // namespace qtent
