#include "qtent/husimi.hpp"

#include <cmath>
#include <stdexcept>

namespace qtent {

double HusimiGrid::max_value() const
{
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

double HusimiGrid::total() const
{
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

StateVector coherent_state(int n_q, const CoherentSpec& spec)
{
    if (n_q < 2) throw std::invalid_argument("coherent_state: n_q < 2");
    StateVector state(n_q);
    const double n = static_cast<double>(state.dim());
    const double inv4a2 = 3.0 / n;  // 1/(4 a^2), a^2 = N/12
    auto amps = state.amplitudes();
    for (std::uint64_t p = 0; p < state.dim(); ++p) {
        cplx acc{0.0, 0.0};
        for (int m = -1; m <= 1; ++m) {
            const double pm = static_cast<double>(p) + m * n;
            const double d = pm - spec.p0;
            const double w = std::exp(-d * d * inv4a2);
            if (w > 0.0) acc += w * std::polar(1.0, -spec.theta0 * pm);
        }
        amps[p] = acc;
    }
    state.normalize();
    return state;
}

StateVector circle_state(int n_q, double diameter_rel, int n_points)
{
    if (n_points < 1) throw std::invalid_argument("circle_state: n_points < 1");
    StateVector sum(n_q);
    auto acc = sum.amplitudes();
    for (auto& a : acc) a = cplx{0.0, 0.0};
    const double n = static_cast<double>(sum.dim());
    const double r = 0.5 * diameter_rel;
    for (int i = 0; i < n_points; ++i) {
        const double az = 2.0 * pi * i / n_points;
        const CoherentSpec c{pi + r * 2.0 * pi * std::cos(az),
                             0.5 * n + r * n * std::sin(az)};
        StateVector packet = coherent_state(n_q, c);
        auto pa = packet.amplitudes();
        for (std::uint64_t p = 0; p < sum.dim(); ++p) acc[p] += pa[p];
    }
    sum.normalize();
    return sum;
}

namespace detail {

void fft_pow2(std::vector<cplx>& data, int sign)
{
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: length must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / static_cast<double>(len);
        const cplx wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = data[i + j];
                const cplx v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

} // namespace detail

namespace {

int grid_size(const StateVector& state)
{
    if (state.n_qubits() % 2 != 0)
        throw std::invalid_argument("husimi: even qubit count required");
    return 1 << (state.n_qubits() / 2);
}

HusimiGrid grid_from_probabilities(const StateVector& transformed, HusimiVariant variant,
                                   bool p0_in_high_bits)
{
    const int rn = grid_size(transformed);
    HusimiGrid grid;
    grid.variant = variant;
    grid.n_q = transformed.n_qubits();
    grid.size = rn;
    grid.values.assign(static_cast<std::size_t>(rn) * rn, 0.0);
    const auto amps = transformed.amplitudes();
    for (std::uint64_t p = 0; p < amps.size(); ++p) {
        const int lo = static_cast<int>(p & static_cast<std::uint64_t>(rn - 1));
        const int hi = static_cast<int>(p >> (transformed.n_qubits() / 2));
        const int ip0 = p0_in_high_bits ? hi : lo;
        const int il = p0_in_high_bits ? lo : hi;
        grid.at(ip0, il) = std::norm(amps[p]);
    }
    return grid;
}

} // namespace

HusimiGrid husimi_gaussian(const StateVector& state)
{
    const int rn = grid_size(state);
    const std::uint64_t n = state.dim();
    const double inv4a2 = 3.0 / static_cast<double>(n);
    const int window = 4 * rn;
    // weights of the folded gaussian, shared by every p0 row
    std::vector<double> weight(2 * window + 1);
    for (int d = -window; d <= window; ++d)
        weight[d + window] = std::exp(-static_cast<double>(d) * d * inv4a2);
    // squared norm of the periodized packet (theta0-independent on the grid)
    std::vector<double> folded_weight(n, 0.0);
    for (int d = -window; d <= window; ++d) {
        const std::uint64_t p = (static_cast<std::uint64_t>(d + static_cast<int>(n)) +
                                 n) % n;
        folded_weight[p] += weight[d + window];
    }
    double norm2 = 0.0;
    for (double w : folded_weight) norm2 += w * w;
    const double inv_norm2 = 1.0 / norm2;

    HusimiGrid grid;
    grid.variant = HusimiVariant::gaussian;
    grid.n_q = state.n_qubits();
    grid.size = rn;
    grid.values.assign(static_cast<std::size_t>(rn) * rn, 0.0);
    const auto amps = state.amplitudes();
    std::vector<cplx> folded(rn);
    for (int ip0 = 0; ip0 < rn; ++ip0) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(ip0) * rn;
        for (auto& h : folded) h = cplx{0.0, 0.0};
        for (int d = -window; d <= window; ++d) {
            const std::uint64_t p =
                (p0 + static_cast<std::uint64_t>(d + 8 * static_cast<int>(n))) % n;
            folded[((d % rn) + rn) % rn] += weight[d + window] * amps[p];
        }
        // <phi|psi>(l) = A sum_r folded[r] e^{+2 pi i l r / rN}
        detail::fft_pow2(folded, +1);
        for (int il = 0; il < rn; ++il)
            grid.at(ip0, il) = std::norm(folded[il]) * inv_norm2;
    }
    return grid;
}

HusimiGrid husimi_modified_p(const StateVector& state)
{
    (void)grid_size(state);
    StateVector work = state;
    apply_qft(work, +1, QftSpan::first_half);
    return grid_from_probabilities(work, HusimiVariant::modified_p, true);
}

HusimiGrid husimi_modified_theta(const StateVector& state)
{
    (void)grid_size(state);
    StateVector work = state;
    apply_qft(work, +1, QftSpan::all);
    apply_qft(work, -1, QftSpan::first_half);
    // p = N theta0/(2 pi) + p0/sqrt(N): theta0 index in the high bits
    return grid_from_probabilities(work, HusimiVariant::modified_theta, false);
}

} // namespace qtent
