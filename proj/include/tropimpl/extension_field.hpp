#pragma once

#include "tropimpl/prime_field.hpp"

#include <array>

namespace tropimpl {

class Rng;

// GF(p^k) for k <= 4, as F_p[x] modulo a monic irreducible polynomial of degree k.
// Elements hold their coefficients in increasing degree.
class ExtensionField {
public:
    static constexpr std::size_t max_degree = 16;
    using Elem = std::array<std::uint32_t, max_degree>;

    ExtensionField(const PrimeField& base, std::size_t degree);

    const PrimeField& base() const { return base_; }
    std::size_t degree() const { return k_; }
    // Monic modulus coefficients m_0..m_{k-1} (x^k = -sum m_i x^i).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return embed(1); }
    Elem embed(std::uint64_t x) const {
        Elem e{};
        e[0] = static_cast<std::uint32_t>(base_.reduce(x));
        return e;
    }
    bool is_zero(const Elem& a) const { return a == Elem{}; }
    // The base-field value when a lies in F_p.
    std::optional<std::uint64_t> in_base(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::int64_t e) const;
    Elem inv(const Elem& a) const;
    Elem random(Rng& rng) const;
    Elem random_nonzero(Rng& rng) const;

private:
    PrimeField base_;
    std::size_t k_;
    std::vector<std::uint64_t> modulus_;
};

// Smallest k <= 4 with p^k > bound, or 0 if none.
std::size_t extension_degree_for(std::uint64_t p, const Int& bound);

using ExtVector = std::vector<ExtensionField::Elem>;

// Right kernel by row reduction; one vector per free column with that entry 1.
std::vector<ExtVector> kernel_basis(std::vector<ExtVector> a, std::size_t cols, const ExtensionField& field);

}  // namespace tropimpl
