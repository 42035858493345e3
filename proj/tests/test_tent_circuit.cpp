#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qtent/classical.hpp"
#include "qtent/tent_map.hpp"
#include "support/oracles.hpp"

using namespace qtent;

namespace {

double wrap_phase(double x)
{
    x = std::fmod(x, 2.0 * pi);
    if (x < 0.0) x += 2.0 * pi;
    return x;
}

double phase_distance(double a, double b)
{
    double d = std::abs(wrap_phase(a) - wrap_phase(b));
    return std::min(d, 2.0 * pi - d);
}

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

TEST_CASE("kinetic sequence term count")
{
    const TentMapParams params{2, 1.7, 1};
    const GateSequence seq = build_kinetic_sequence(params);
    CHECK(seq.elementary_count() == 3);  // one B2, two B1
    CHECK(seq.bit_reversal_count() == 0);
}

TEST_CASE("kinetic sequence reproduces the quadratic phase")
{
    const TentMapParams params{5, 1.7, 1};
    const GateSequence seq = build_kinetic_sequence(params);
    const double T = params.period();
    std::mt19937 gen(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, params.dim() - 1);
    for (int trial = 0; trial < 8; ++trial) {
        const std::uint64_t p = pick(gen);
        StateVector s = StateVector::basis_state(params.n_q, p);
        apply_sequence(s, seq);
        const double expect = -0.5 * T * static_cast<double>(p) * static_cast<double>(p);
        CHECK(phase_distance(std::arg(s[p]), expect) < 1e-12);
        CHECK(std::abs(std::abs(s[p]) - 1.0) < 1e-12);
    }
    StateVector zero = StateVector::basis_state(params.n_q, 0);
    apply_sequence(zero, seq);
    CHECK(std::abs(zero[0] - cplx{1.0, 0.0}) < 1e-13);
}

TEST_CASE("potential sequence acts as e^{-iV(theta)} in the angle basis")
{
    const TentMapParams params{4, 1.7, 1};
    const std::size_t n = params.dim();
    const GateSequence seq = build_potential_sequence(params);
    const auto built =
        oracles::matrix_of(params.n_q, [&](StateVector& s) { apply_sequence(s, seq); });
    // oracle: F^{-1} diag(e^{-iV(2 pi p / N)}) F from direct Fourier sums
    auto diag = oracles::zeros(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double theta = 2.0 * pi * static_cast<double>(p) / static_cast<double>(n);
        diag[p][p] = std::polar(1.0, -kick_potential(theta, params.kick_strength()));
    }
    const auto oracle = oracles::mat_mult(
        oracles::dft_matrix(n, -1), oracles::mat_mult(diag, oracles::dft_matrix(n, +1)));
    CHECK(oracles::max_abs_diff(built, oracle) < 1e-10);
}

TEST_CASE("zero kick strength gives an identity potential factor")
{
    const TentMapParams params{3, 0.0, 1};
    const GateSequence seq = build_potential_sequence(params);
    StateVector u = random_state(3, 17);
    StateVector v = u;
    apply_sequence(v, seq);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(std::abs(u[p] - v[p]) < 1e-12);
}

TEST_CASE("potential interior gate count")
{
    for (int n_q : {2, 3, 5, 8}) {
        const TentMapParams params{n_q, 1.7, 1};
        const GateSequence seq = build_potential_sequence(params);
        const long qft_gates = 2L * (n_q * (n_q + 1) / 2);
        const long interior = static_cast<long>(seq.elementary_count()) - qft_gates;
        CHECK(interior == 3L * (n_q - 1) * (n_q - 2) + 2L * (n_q - 1));
        CHECK(seq.bit_reversal_count() == 2);
    }
}

TEST_CASE("map gate count law")
{
    CHECK(map_gate_count(10) == 399);
    CHECK(map_gate_count(6) == 133);
    for (int n_q = 2; n_q <= 20; ++n_q) {
        const TentMapParams params{n_q, 1.7, 1};
        const GateSequence seq = build_map_sequence(params);
        CHECK(static_cast<long>(seq.elementary_count()) == map_gate_count(n_q));
        CHECK(seq.bit_reversal_count() == 2);
    }
}

TEST_CASE("forward then inverse map restores the state")
{
    const TentMapParams params{6, 1.7, 1};
    const GateSequence fwd = build_map_sequence(params, MapDirection::forward);
    const GateSequence inv = build_map_sequence(params, MapDirection::inverse);
    StateVector u = random_state(6, 29);
    StateVector v = u;
    apply_sequence(v, fwd);
    apply_sequence(v, inv);
    CHECK(fidelity(u, v) > 1.0 - 1e-10);
}

TEST_CASE("hundredfold forward plus inverse iterations stay reversible")
{
    const TentMapParams params{6, 1.7, 1};
    const GateSequence fwd = build_map_sequence(params, MapDirection::forward);
    const GateSequence inv = build_map_sequence(params, MapDirection::inverse);
    StateVector u = random_state(6, 31);
    StateVector v = u;
    for (int t = 0; t < 100; ++t) apply_sequence(v, fwd);
    for (int t = 0; t < 100; ++t) apply_sequence(v, inv);
    CHECK(fidelity(u, v) >= 1.0 - 1e-8);
}

TEST_CASE("circuit matrix equals the direct-operator oracle")
{
    for (int n_q : {3, 4}) {
        const TentMapParams params{n_q, 1.7, 1};
        const GateSequence seq = build_map_sequence(params);
        const auto circuit = oracles::matrix_of(
            n_q, [&](StateVector& s) { apply_sequence(s, seq); });
        const auto oracle = oracles::matrix_of(
            n_q, [&](StateVector& s) { direct_map_oracle(s, params); });
        CHECK(oracles::max_abs_diff(circuit, oracle) < 1e-10);
    }
}

TEST_CASE("direct oracle with zero kick is the pure kinetic phase")
{
    const TentMapParams params{4, 0.0, 1};
    const double T = params.period();
    for (std::uint64_t p : {std::uint64_t{1}, std::uint64_t{7}, std::uint64_t{15}}) {
        StateVector s = StateVector::basis_state(4, p);
        direct_map_oracle(s, params);
        const double expect = -0.5 * T * static_cast<double>(p * p);
        CHECK(phase_distance(std::arg(s[p]), expect) < 1e-11);
        CHECK(std::abs(std::abs(s[p]) - 1.0) < 1e-11);
    }
}

TEST_CASE("direct oracle inverse undoes the forward map")
{
    const TentMapParams params{5, 1.7, 1};
    StateVector u = random_state(5, 37);
    StateVector v = u;
    direct_map_oracle(v, params, MapDirection::forward);
    direct_map_oracle(v, params, MapDirection::inverse);
    CHECK(fidelity(u, v) > 1.0 - 1e-11);
}

TEST_CASE("sequence hook accounting and identity-hook equivalence")
{
    const TentMapParams params{5, 1.7, 1};
    const GateSequence seq = build_map_sequence(params);
    StateVector a = random_state(5, 41);
    StateVector b = a;
    std::size_t count = 0;
    apply_sequence(a, seq, [&](StateVector&, const ElementaryGate&, std::size_t) {
        ++count;
    });
    CHECK(count == static_cast<std::size_t>(map_gate_count(5)));
    apply_sequence(b, seq);
    for (std::uint64_t p = 0; p < a.dim(); ++p) CHECK(a[p] == b[p]);

    GateSequence empty(5);
    StateVector c = a;
    apply_sequence(c, empty);
    for (std::uint64_t p = 0; p < a.dim(); ++p) CHECK(a[p] == c[p]);
}

TEST_CASE("gate stream serialization round-trips")
{
    const TentMapParams params{4, 1.7, 1};
    const GateSequence seq = build_map_sequence(params);
    const std::string text = seq.to_text();
    const GateSequence back = GateSequence::from_text(4, text);
    REQUIRE(back.gates().size() == seq.gates().size());
    CHECK(back.to_text() == text);
    StateVector u = random_state(4, 43);
    StateVector v = u;
    apply_sequence(u, seq);
    apply_sequence(v, back);
    for (std::uint64_t p = 0; p < u.dim(); ++p) CHECK(u[p] == v[p]);
}
