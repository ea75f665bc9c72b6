#ifndef LEADERSHIP_RNG_HPP
#define LEADERSHIP_RNG_HPP

#include <cstdint>
#include <random>

namespace leadership {

/// One splitmix64 step. Used to derive well-separated stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of sub-stream `index` of `master`. Distinct `(master, index)` pairs
/// give independent-looking seeds; the mapping is fixed so replications can
/// be dispatched in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

/// Deterministic generator. The engine sequence is fixed by the standard;
/// the conversion to doubles is done here, because std distributions are
/// allowed to differ between library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace leadership

#endif
