#include "tropimpl/prime_field.hpp"

#include "tropimpl/errors.hpp"

namespace tropimpl {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t previous_prime(std::uint64_t n) {
    for (std::uint64_t c = n - 1; c >= 2; --c)
        if (is_prime(c)) return c;
    fail(ErrorCode::InvalidArgument, "no prime below bound");
}

std::uint64_t default_prime() { return previous_prime(std::uint64_t(1) << 31); }

std::vector<std::uint64_t> word_primes(std::size_t k) {
    std::vector<std::uint64_t> out;
    std::uint64_t bound = std::uint64_t(1) << 31;
    while (out.size() < k) {
        bound = previous_prime(bound);
        out.push_back(bound);
    }
    return out;
}

PrimeField::PrimeField(std::uint64_t modulus) : p(modulus), barrett(modulus ? ~std::uint64_t(0) / modulus : 0) {
    if (modulus >= (std::uint64_t(1) << 32) || !is_prime(modulus))
        fail(ErrorCode::InvalidArgument, "modulus must be a prime below 2^32");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint64_t result = 1 % p, base = a % p;
    auto k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p == 0) fail(ErrorCode::InvalidArgument, "inverse of zero mod p");
    return pow(a, static_cast<std::int64_t>(p - 2));
}

std::uint64_t PrimeField::from_int(const Int& x) const {
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

std::optional<std::uint64_t> PrimeField::from_rat(const Rat& x) const {
    std::uint64_t den = from_int(x.get_den());
    if (den == 0) return std::nullopt;
    return mul(from_int(x.get_num()), inv(den));
}

}  // namespace tropimpl
