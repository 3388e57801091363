#pragma once

#include <cstdint>
#include <random>

namespace tropimpl {

// Counter-based seed splitting: every consumer derives its own stream from the
// master seed and a (stream, counter) pair, so results do not depend on call order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t counter = 0);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [lo, hi], portable across standard libraries.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

// Named stream identifiers.
namespace streams {
inline constexpr std::uint64_t oracle_perturbation = 1;
inline constexpr std::uint64_t reconstruction = 2;
inline constexpr std::uint64_t sampling = 3;
inline constexpr std::uint64_t verification = 4;
inline constexpr std::uint64_t chow = 5;
inline constexpr std::uint64_t search = 6;
}  // namespace streams

}  // namespace tropimpl
