#pragma once

#include "tropimpl/implicitize.hpp"
#include "tropimpl/interpolate.hpp"

namespace tropimpl {

using IndexTuple = std::vector<std::size_t>;

// The lexicographically ordered (k)-subsets of {0..m-1}; Plücker coordinates are
// indexed by position in this list.
std::vector<IndexTuple> index_tuples(std::size_t m, std::size_t k);

// Multiset of strictly increasing (d+1)-tuples, kept sorted.
struct PluckerMonomial {
    std::vector<IndexTuple> factors;

    std::size_t degree() const { return factors.size(); }
    IntVector weight(std::size_t n) const;
    friend bool operator==(const PluckerMonomial&, const PluckerMonomial&) = default;
    friend auto operator<=>(const PluckerMonomial&, const PluckerMonomial&) = default;
};

std::string to_string(const PluckerMonomial& m);

struct PluckerPoly {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::pair<PluckerMonomial, Rat>> terms;
    std::optional<std::uint64_t> modulus;  // coefficients are residues when set

    // Value at a Plücker vector indexed by index_tuples(n + 1, d + 1).
    Rat evaluate(const RatVector& plucker) const;
    std::optional<Rat> coefficient(const PluckerMonomial& m) const;
    LatticePolytope weight_polytope() const;
};

// Parses "p03^4" style products such as "p01*p02*p13^2" (single-digit indices).
PluckerMonomial parse_plucker_monomial(const std::string& text);

// Weighted normal fan of the Chow polytope, negated into the inner (min) convention.
// C lives in R^{n+1} with the all-ones lineality and has pure dimension d + 1.
TropicalCycle chow_fan(const TropicalCycle& c, std::size_t d);

// Standard Plücker monomials of weight u: factor tuples sorted lexicographically and
// componentwise non-decreasing from one to the next.
std::vector<PluckerMonomial> standard_monomials_of_weight(const IntVector& u, std::size_t d, std::size_t n);

// Random points of the Chow hypersurface: primal Plücker vectors of random
// (n-d-1)-planes through random points (1, f(t)) of X.
class ChowSource : public PointSource {
public:
    ChowSource(Parametrization f, std::size_t d, std::size_t n);
    std::size_t dim() const override { return tuples_.size(); }
    std::optional<RatVector> draw(Rng& rng, long height) const override;
    std::optional<ModVector> draw_mod(Rng& rng, const PrimeField& field) const override;
    std::optional<ExtVector> draw_ext(Rng& rng, const ExtensionField& field) const override;
    Int pullback_degree(const std::vector<IntVector>& exponents) const override;

    // Primal coordinates of the plane spanned by the rows (alphas, then x), from a
    // kernel basis of the spanning matrix.
    RatVector plucker_of_span(const QMat& span) const;

private:
    Parametrization f_;
    std::size_t d_, n_;
    std::vector<IndexTuple> tuples_;
};

RatVector chow_sample(const Parametrization& f, std::size_t d, std::size_t n, std::uint64_t seed,
                      std::uint64_t counter = 0);

struct ChowFormOptions {
    FieldSpec field;
    SamplingOptions sampling{16, 10, 30};
};

// Interpolates the Chow form with the standard-monomial ansatz over the lattice
// points of a candidate Chow polytope (given in weight coordinates R^{n+1}).
PluckerPoly chow_form(const Parametrization& f, const LatticePolytope& chow_polytope, std::size_t d, std::size_t n,
                      std::uint64_t seed, const ChowFormOptions& options = {});

struct ChowPolytopeResult {
    LatticePolytope translated;
    IntVector shift;  // added to the translated polytope
    LatticePolytope polytope;
    std::size_t degree = 0;
    std::vector<IntVector> successful_shifts;
    std::optional<PluckerPoly> chow_form;
};

struct ShiftSearchOptions {
    std::optional<std::size_t> degree_hint;
    std::size_t max_degree = 12;
    bool collect_all = false;
    ChowFormOptions form;
};

ChowPolytopeResult chow_polytope(const TropicalCycle& c, std::size_t d, const Parametrization& f,
                                 const OracleConfig& cfg, std::uint64_t seed, const ShiftSearchOptions& options = {});

// Equations of X: substitutes the primal coordinates of the plane spanned by the
// given n-d-1 alpha vectors and a symbolic point x. Returns one polynomial in x_0..x_n
// (as exponent/coefficient terms) per alpha tuple.
struct XPolynomial {
    std::vector<std::pair<IntVector, Rat>> terms;
    Rat evaluate(const RatVector& x) const;
};

std::vector<XPolynomial> chow_to_equations(const PluckerPoly& form, std::size_t d, std::size_t n,
                                           const std::vector<std::vector<RatVector>>& alpha_tuples);

}  // namespace tropimpl
