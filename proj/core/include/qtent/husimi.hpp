#pragma once

#include <vector>

#include "qtent/statevector.hpp"

namespace qtent {

/// Center of a minimal coherent wave packet; the width a = sqrt(N/12) is fixed
/// so the relative p and theta spreads match (both ~ 0.29/sqrt(N)).
struct CoherentSpec {
    double theta0 = 0.0;
    double p0 = 0.0;
};

/// amps[p] ~ e^{-(p-p0)^2/(4a^2) - i theta0 p}, periodized over images
/// p + mN (|m| <= 1), then normalized.
StateVector coherent_state(int n_q, const CoherentSpec& spec);

/// Normalized superposition of coherent states on a circle centered at
/// (theta, p) = (pi, N/2) with the given diameter relative to the phase space.
StateVector circle_state(int n_q, double diameter_rel = 0.7, int n_points = 100);

enum class HusimiVariant { gaussian, modified_p, modified_theta };

/// sqrt(N) x sqrt(N) phase-space density over the grid p0 in {0, rN, 2 rN, ...}
/// (rN = sqrt(N)) and theta0 = 2 pi l / rN. Values are stored row-major with
/// the p0 index as the row.
struct HusimiGrid {
    HusimiVariant variant = HusimiVariant::gaussian;
    int n_q = 0;
    int size = 0;
    std::vector<double> values;

    double& at(int ip0, int il) { return values[static_cast<std::size_t>(ip0) * size + il]; }
    double at(int ip0, int il) const
    {
        return values[static_cast<std::size_t>(ip0) * size + il];
    }
    double p0_of_row(int ip0) const { return static_cast<double>(ip0) * size; }
    double theta0_of_col(int il) const { return 2.0 * pi * il / size; }
    double max_value() const;
    double total() const;
};

/// Gaussian Husimi |<phi(p0,theta0)|psi>|^2, evaluated per p0 row with a
/// windowed (|p-p0| <= 4 sqrt(N)) fold and one length-sqrt(N) FFT per row.
HusimiGrid husimi_gaussian(const StateVector& state);

/// Box-in-p variant |<p0+l| U~_QFT |psi>|^2 (half-register QFT readout).
HusimiGrid husimi_modified_p(const StateVector& state);

/// Box-in-theta variant |<p| U~_QFT^{-1} U_QFT |psi>|^2 with
/// p = N theta0/(2 pi) + p0/sqrt(N).
HusimiGrid husimi_modified_theta(const StateVector& state);

namespace detail {
/// In-place radix-2 FFT, n a power of two; sign +1 sums e^{+2 pi i j k / n}.
void fft_pow2(std::vector<cplx>& data, int sign);
} // namespace detail

} // namespace qtent
