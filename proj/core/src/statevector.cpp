#include "qtent/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qtent {

namespace {

std::uint64_t reverse_bits(std::uint64_t p, int first, int count)
{
    const std::uint64_t window_mask = ((std::uint64_t{1} << count) - 1) << first;
    std::uint64_t window = (p >> first) & ((std::uint64_t{1} << count) - 1);
    std::uint64_t rev = 0;
    for (int j = 0; j < count; ++j) {
        rev = (rev << 1) | (window & 1);
        window >>= 1;
    }
    return (p & ~window_mask) | (rev << first);
}

} // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits)
{
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("StateVector: qubit count out of range");
    amps_.assign(std::uint64_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = cplx{1.0, 0.0};
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t p)
{
    StateVector s(n_qubits);
    if (p >= s.dim()) throw std::invalid_argument("basis_state: index out of range");
    s.amps_[0] = cplx{0.0, 0.0};
    s.amps_[p] = cplx{1.0, 0.0};
    return s;
}

double StateVector::squared_norm() const
{
    double acc = 0.0;
    for (const cplx& a : amps_) acc += std::norm(a);
    return acc;
}

void StateVector::normalize()
{
    const double n = std::sqrt(squared_norm());
    if (n == 0.0) throw std::runtime_error("normalize: zero state");
    for (cplx& a : amps_) a /= n;
}

void StateVector::check_qubit(int j) const
{
    if (j < 0 || j >= n_qubits_)
        throw std::invalid_argument("qubit index out of range");
}

void StateVector::apply_phase_shift(int j, double phi)
{
    check_qubit(j);
    const cplx w = std::polar(1.0, phi);
    const std::uint64_t bit = std::uint64_t{1} << j;
    const std::uint64_t n = dim();
    for (std::uint64_t p = 0; p < n; ++p)
        if (p & bit) amps_[p] *= w;
}

void StateVector::apply_controlled_phase(int j, int k, double phi)
{
    check_qubit(j);
    check_qubit(k);
    if (j == k) throw std::invalid_argument("apply_controlled_phase: j == k");
    const cplx w = std::polar(1.0, phi);
    const std::uint64_t mask = (std::uint64_t{1} << j) | (std::uint64_t{1} << k);
    const std::uint64_t n = dim();
    for (std::uint64_t p = 0; p < n; ++p)
        if ((p & mask) == mask) amps_[p] *= w;
}

void StateVector::apply_cnot(int target, int control)
{
    check_qubit(target);
    check_qubit(control);
    if (target == control) throw std::invalid_argument("apply_cnot: target == control");
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t n = dim();
    for (std::uint64_t p = 0; p < n; ++p)
        if ((p & cbit) && !(p & tbit)) std::swap(amps_[p], amps_[p | tbit]);
}

void StateVector::apply_half_turn_a(int j)
{
    check_qubit(j);
    const std::uint64_t bit = std::uint64_t{1} << j;
    const std::uint64_t low = bit - 1;
    const std::uint64_t half = dim() >> 1;
    const double r = std::sqrt(0.5);
    for (std::uint64_t h = 0; h < half; ++h) {
        const std::uint64_t i0 = ((h & ~low) << 1) | (h & low);
        const std::uint64_t i1 = i0 | bit;
        const cplx u = amps_[i0];
        const cplx v = amps_[i1];
        amps_[i0] = r * (u + v);
        amps_[i1] = r * (u - v);
    }
}

void StateVector::apply_axis_half_turn(int j, const Axis3& n)
{
    check_qubit(j);
    const std::uint64_t bit = std::uint64_t{1} << j;
    const std::uint64_t low = bit - 1;
    const std::uint64_t half = dim() >> 1;
    const cplx off_lo{n.x, n.y};  // acts on |1> component of the pair
    const cplx off_hi{n.x, -n.y};
    for (std::uint64_t h = 0; h < half; ++h) {
        const std::uint64_t i0 = ((h & ~low) << 1) | (h & low);
        const std::uint64_t i1 = i0 | bit;
        const cplx u = amps_[i0];
        const cplx v = amps_[i1];
        amps_[i0] = n.z * u + off_hi * v;
        amps_[i1] = off_lo * u - n.z * v;
    }
}

void StateVector::apply_controlled_axis_flip(int target, int control, const Axis3& n)
{
    check_qubit(target);
    check_qubit(control);
    if (target == control)
        throw std::invalid_argument("apply_controlled_axis_flip: target == control");
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t dimn = dim();
    const cplx off_lo{n.x, n.y};
    const cplx off_hi{n.x, -n.y};
    for (std::uint64_t p = 0; p < dimn; ++p) {
        if ((p & cbit) && !(p & tbit)) {
            const std::uint64_t q = p | tbit;
            const cplx u = amps_[p];
            const cplx v = amps_[q];
            amps_[p] = n.z * u + off_hi * v;
            amps_[q] = off_lo * u - n.z * v;
        }
    }
}

void StateVector::apply_bit_reversal()
{
    apply_bit_reversal(0, n_qubits_);
}

void StateVector::apply_bit_reversal(int first, int count)
{
    if (first < 0 || count < 1 || first + count > n_qubits_)
        throw std::invalid_argument("apply_bit_reversal: window out of range");
    const std::uint64_t n = dim();
    for (std::uint64_t p = 0; p < n; ++p) {
        const std::uint64_t q = reverse_bits(p, first, count);
        if (q > p) std::swap(amps_[p], amps_[q]);
    }
}

void apply_qft(StateVector& state, int direction, QftSpan span)
{
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("apply_qft: direction must be +1 or -1");
    int first = 0;
    int count = state.n_qubits();
    if (span == QftSpan::first_half) {
        if (count % 2 != 0)
            throw std::invalid_argument("apply_qft: first_half requires even qubit count");
        count /= 2;
    }
    for_each_qft_gate(
        first, count, direction,
        [&](int j, int k, double angle) { state.apply_controlled_phase(j, k, angle); },
        [&](int j) { state.apply_half_turn_a(j); });
    state.apply_bit_reversal(first, count);
}

cplx inner_product(const StateVector& a, const StateVector& b)
{
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("inner_product: dimension mismatch");
    cplx acc{0.0, 0.0};
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::uint64_t p = 0; p < av.size(); ++p) acc += std::conj(av[p]) * bv[p];
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b)
{
    return std::norm(inner_product(a, b));
}

} // namespace qtent
