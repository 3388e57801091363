#pragma once

#include "tropimpl/extension_field.hpp"
#include "tropimpl/linalg.hpp"
#include "tropimpl/polytope.hpp"
#include "tropimpl/random.hpp"

#include <optional>

namespace tropimpl {

struct LaurentTerm {
    Rat coeff;
    std::vector<long> exponent;
};

struct LaurentPolynomial {
    std::vector<LaurentTerm> terms;

    // t must have nonzero entries.
    Rat evaluate(const RatVector& t) const;
    // nullopt if a coefficient denominator vanishes mod p; t must be nonzero mod p.
    std::optional<std::uint64_t> evaluate_mod(const ModVector& t, const PrimeField& field) const;
    std::optional<ExtensionField::Elem> evaluate_ext(const ExtVector& t, const ExtensionField& field) const;
    // Largest sum of absolute exponents over the terms.
    long degree_span() const;
    LatticePolytope newton_polytope(std::size_t d) const;
};

// Laurent polynomial map (Q*)^d -> Q^n.
struct Parametrization {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<LaurentPolynomial> components;

    // Checks n, d >= 1, component count, exponent lengths and nonzero components.
    void validate() const;
    RatVector evaluate(const RatVector& t) const;
    std::vector<LatticePolytope> newton_polytopes() const;
};

// Source of random points on a variety, over Q and over prime fields.
class PointSource {
public:
    virtual ~PointSource() = default;
    virtual std::size_t dim() const = 0;
    // nullopt when the draw is rejected.
    virtual std::optional<RatVector> draw(Rng& rng, long height) const = 0;
    virtual std::optional<ModVector> draw_mod(Rng& rng, const PrimeField& field) const = 0;
    virtual std::optional<ExtVector> draw_ext(Rng& rng, const ExtensionField& field) const = 0;
    // Bound on the degree of a polynomial with these exponents pulled back to the
    // parameters (after clearing monomial factors). Sampling from a field with
    // comfortably more elements keeps the pullback from vanishing identically.
    virtual Int pullback_degree(const std::vector<IntVector>& exponents) const = 0;
};

class ParametrizationSource : public PointSource {
public:
    explicit ParametrizationSource(Parametrization f) : f_(std::move(f)) { f_.validate(); }
    std::size_t dim() const override { return f_.n; }
    std::optional<RatVector> draw(Rng& rng, long height) const override;
    std::optional<ModVector> draw_mod(Rng& rng, const PrimeField& field) const override;
    std::optional<ExtVector> draw_ext(Rng& rng, const ExtensionField& field) const override;
    Int pullback_degree(const std::vector<IntVector>& exponents) const override;

    // Random nonzero rational parameter point with numerators and denominators in [1, height].
    static RatVector random_parameter(Rng& rng, std::size_t d, long height);

    const Parametrization& parametrization() const { return f_; }

private:
    Parametrization f_;
};

// Horn uniformization x_j = t^{a_j} (u B)_j of the dual variety of X_A.
class HornSource : public PointSource {
public:
    HornSource(ZMat a, ZMat b);
    std::size_t dim() const override { return a_.cols(); }
    std::optional<RatVector> draw(Rng& rng, long height) const override;
    std::optional<ModVector> draw_mod(Rng& rng, const PrimeField& field) const override;
    std::optional<ExtVector> draw_ext(Rng& rng, const ExtensionField& field) const override;
    Int pullback_degree(const std::vector<IntVector>& exponents) const override;

private:
    ZMat a_;
    ZMat b_;
};

}  // namespace tropimpl
