#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace qtent {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// 64-bit PRNG with bit-derived uniform doubles so a (seed, draw-order) pair
/// pins the stream exactly on any platform with the same standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    static constexpr const char* algorithm() { return "mt19937_64"; }

private:
    std::mt19937_64 gen_;
};

/// SplitMix64 step; used to derive independent per-realization seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

/// Runs fn(i) for i in [0, n) on up to hardware_concurrency() workers.
/// fn must be safe to call concurrently for distinct i.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace qtent
