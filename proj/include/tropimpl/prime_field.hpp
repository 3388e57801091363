#pragma once

#include "tropimpl/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tropimpl {

bool is_prime(std::uint64_t n);
// Largest prime strictly below n.
std::uint64_t previous_prime(std::uint64_t n);
// Largest prime below 2^31.
std::uint64_t default_prime();
// The k largest primes below 2^31, descending.
std::vector<std::uint64_t> word_primes(std::size_t k);

struct PrimeField {
    std::uint64_t p;
    std::uint64_t barrett;  // floor((2^64 - 1) / p)

    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    // x mod p for any 64-bit x, without a hardware division.
    std::uint64_t reduce(std::uint64_t x) const {
        auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t from_int(const Int& x) const;
    // nullopt when the denominator vanishes mod p.
    std::optional<std::uint64_t> from_rat(const Rat& x) const;
};

}  // namespace tropimpl
