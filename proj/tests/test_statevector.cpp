#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qtent/statevector.hpp"
#include "support/oracles.hpp"

using namespace qtent;

namespace {

StateVector random_state(int n_q, unsigned seed)
{
    std::mt19937 gen(seed);
    std::normal_distribution<double> normal;
    StateVector s(n_q);
    for (auto& a : s.amplitudes()) a = cplx{normal(gen), normal(gen)};
    s.normalize();
    return s;
}

} // namespace

TEST_CASE("phase shift acts on the alpha_j = 1 subspace")
{
    StateVector s = StateVector::basis_state(2, 3);
    s.apply_phase_shift(0, pi / 2);
    CHECK(std::abs(s[3] - cplx{0.0, 1.0}) < 1e-15);  // multiplied by i

    StateVector t = StateVector::basis_state(2, 2);  // alpha_0 = 0
    t.apply_phase_shift(0, 1.234);
    CHECK(std::abs(t[2] - cplx{1.0, 0.0}) < 1e-15);

    StateVector u = random_state(4, 7);
    StateVector v = u;
    v.apply_phase_shift(2, 0.0);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(u[p] == v[p]);
}

TEST_CASE("controlled phase needs both control bits")
{
    StateVector s = StateVector::basis_state(2, 3);
    s.apply_controlled_phase(0, 1, pi);
    CHECK(std::abs(s[3] + cplx{1.0, 0.0}) < 1e-15);  // negated

    StateVector t = StateVector::basis_state(2, 1);  // alpha_1 = 0
    t.apply_controlled_phase(0, 1, 2.5);
    CHECK(std::abs(t[1] - cplx{1.0, 0.0}) < 1e-15);

    StateVector u = random_state(5, 3);
    StateVector v = u;
    v.apply_controlled_phase(1, 3, 0.7);
    v.apply_controlled_phase(1, 3, -0.7);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(std::abs(u[p] - v[p]) < 1e-15);

    CHECK_THROWS_AS(u.apply_controlled_phase(2, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(u.apply_phase_shift(9, 0.1), std::invalid_argument);
}

TEST_CASE("cnot matches the controlled-exchange matrix")
{
    // |alpha_1 alpha_0> = |10> i.e. p = 2; control 1, target 0 -> |11>
    StateVector s = StateVector::basis_state(2, 2);
    s.apply_cnot(0, 1);
    CHECK(std::abs(s[3] - cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(s[2]) == 0.0);

    StateVector t = StateVector::basis_state(2, 1);  // control bit 0 -> identity
    t.apply_cnot(0, 1);
    CHECK(std::abs(t[1] - cplx{1.0, 0.0}) < 1e-15);

    StateVector u = random_state(4, 11);
    StateVector v = u;
    v.apply_cnot(2, 0);
    v.apply_cnot(2, 0);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(u[p] == v[p]);
}

TEST_CASE("half turn A")
{
    StateVector s(1);
    s.apply_half_turn_a(0);
    CHECK(std::abs(s[0] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(s[1] - std::sqrt(0.5)) < 1e-15);

    StateVector u = random_state(3, 5);
    StateVector v = u;
    v.apply_half_turn_a(1);
    CHECK(v.squared_norm() == doctest::Approx(1.0).epsilon(1e-13));
    v.apply_half_turn_a(1);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(std::abs(u[p] - v[p]) < 1e-15);
}

TEST_CASE("bit reversal permutes binary digits")
{
    StateVector s = StateVector::basis_state(3, 1);
    s.apply_bit_reversal();
    CHECK(std::abs(s[4] - cplx{1.0, 0.0}) < 1e-15);

    StateVector t = StateVector::basis_state(3, 5);  // 101 palindromic
    t.apply_bit_reversal();
    CHECK(std::abs(t[5] - cplx{1.0, 0.0}) < 1e-15);

    StateVector u = random_state(5, 19);
    StateVector v = u;
    v.apply_bit_reversal();
    v.apply_bit_reversal();
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(u[p] == v[p]);
}

TEST_CASE("qft on |0> gives the uniform superposition")
{
    StateVector s(4);
    apply_qft(s, +1);
    const double expect = 1.0 / std::sqrt(16.0);
    for (std::uint64_t p = 0; p < s.dim(); ++p)
        CHECK(std::abs(s[p] - cplx{expect, 0.0}) < 1e-13);
}

TEST_CASE("qft then inverse qft is the identity")
{
    StateVector u = random_state(6, 23);
    StateVector v = u;
    apply_qft(v, +1);
    apply_qft(v, -1);
    double m = 0.0;
    for (std::uint64_t p = 0; p < u.dim(); ++p) m = std::max(m, std::abs(u[p] - v[p]));
    CHECK(m < 1e-12);
}

TEST_CASE("qft gate sequence equals the discrete Fourier matrix")
{
    for (int dir : {+1, -1}) {
        const auto built =
            oracles::matrix_of(4, [&](StateVector& s) { apply_qft(s, dir); });
        const auto expect = oracles::dft_matrix(16, dir);
        CHECK(oracles::max_abs_diff(built, expect) < 1e-12);
    }
}

TEST_CASE("half-register qft transforms only the low qubits")
{
    // acting on |p> with p = hi*4 + lo, the low half must follow the 2-qubit DFT
    StateVector s = StateVector::basis_state(4, 4 * 2 + 1);
    apply_qft(s, +1, QftSpan::first_half);
    const auto f = oracles::dft_matrix(4, +1);
    for (std::uint64_t lo = 0; lo < 4; ++lo)
        CHECK(std::abs(s[4 * 2 + lo] - f[lo][1]) < 1e-13);
    StateVector odd(3);
    CHECK_THROWS_AS(apply_qft(odd, +1, QftSpan::first_half), std::invalid_argument);
}

TEST_CASE("inner product basics")
{
    StateVector u = random_state(5, 31);
    CHECK(std::abs(inner_product(u, u) - cplx{1.0, 0.0}) < 1e-13);

    StateVector a = StateVector::basis_state(3, 2);
    StateVector b = StateVector::basis_state(3, 6);
    CHECK(std::abs(inner_product(a, b)) == 0.0);

    StateVector v = random_state(5, 37);
    CHECK(std::abs(inner_product(u, v) - std::conj(inner_product(v, u))) < 1e-14);

    StateVector w(4);
    CHECK_THROWS_AS(inner_product(u, w), std::invalid_argument);
}

TEST_CASE("norm stays put over 1e5 gate applications")
{
    StateVector s = random_state(6, 41);
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> qubit(0, 5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 0; i < 100000; ++i) {
        const int j = qubit(gen);
        int k = qubit(gen);
        if (k == j) k = (k + 1) % 6;
        switch (kind(gen)) {
        case 0: s.apply_phase_shift(j, angle(gen)); break;
        case 1: s.apply_controlled_phase(j, k, angle(gen)); break;
        case 2: s.apply_cnot(j, k); break;
        default: s.apply_half_turn_a(j); break;
        }
    }
    CHECK(std::abs(s.squared_norm() - 1.0) < 1e-9);
}

TEST_CASE("diagonal gates commute")
{
    struct DiagGate { int j, k; double phi; };
    std::vector<DiagGate> run = {{0, -1, 0.3}, {1, 3, -0.9}, {2, -1, 1.7},
                                 {0, 2, 2.2},  {3, -1, -2.8}, {1, 2, 0.55}};
    StateVector base = random_state(4, 53);
    auto apply_run = [&](const std::vector<DiagGate>& gates) {
        StateVector s = base;
        for (const auto& g : gates) {
            if (g.k < 0) s.apply_phase_shift(g.j, g.phi);
            else s.apply_controlled_phase(g.j, g.k, g.phi);
        }
        return s;
    };
    const StateVector ref = apply_run(run);
    std::mt19937 gen(7);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(run.begin(), run.end(), gen);
        const StateVector s = apply_run(run);
        for (std::uint64_t p = 0; p < s.dim(); ++p)
            CHECK(std::abs(s[p] - ref[p]) < 1e-12);
    }
}

TEST_CASE("assembled gate matrices are unitary")
{
    for (int n_q = 2; n_q <= 6; n_q += 2) {
        const auto m = oracles::matrix_of(n_q, [&](StateVector& s) {
            s.apply_half_turn_a(0);
            s.apply_cnot(1, 0);
            s.apply_controlled_phase(0, n_q - 1, 0.83);
            s.apply_phase_shift(n_q - 1, -1.2);
            s.apply_bit_reversal();
        });
        CHECK(oracles::unitarity_defect(m) < 1e-10);
    }
}

TEST_CASE("axis gates reduce to their ideal forms")
{
    StateVector u = random_state(3, 61);
    StateVector v = u;
    u.apply_half_turn_a(1);
    const double r = std::sqrt(0.5);
    v.apply_axis_half_turn(1, Axis3{r, 0.0, r});
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(std::abs(u[p] - v[p]) < 1e-15);

    StateVector a = random_state(3, 67);
    StateVector b = a;
    a.apply_cnot(0, 2);
    b.apply_controlled_axis_flip(0, 2, Axis3{1.0, 0.0, 0.0});
    for (std::uint64_t p = 0; p < a.dim(); ++p) CHECK(std::abs(a[p] - b[p]) < 1e-15);
}
