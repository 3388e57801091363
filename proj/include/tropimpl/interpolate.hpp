#pragma once

#include "tropimpl/parametrization.hpp"

#include <string>

namespace tropimpl {

struct MonomialBasis {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> exponents;  // distinct, lexicographically sorted
};

MonomialBasis monomial_basis(const LatticePolytope& p, bool force = false);

// Coefficients are canonically scaled integers over Q, or residues in [0, p) when a
// modulus is present (first nonzero coefficient 1).
struct ImplicitPolynomial {
    MonomialBasis basis;
    IntVector coefficients;
    std::optional<std::uint64_t> modulus;

    Rat evaluate(const RatVector& x) const;
    std::uint64_t evaluate_mod(const ModVector& x, const PrimeField& field) const;
    std::size_t support_size() const;
};

// Coefficient field selector: "q", "gf:<p>" or "crt:<k>".
struct FieldSpec {
    enum class Kind { Rational, Prime, MultiPrime };
    Kind kind = Kind::Rational;
    std::uint64_t prime = 0;
    std::size_t prime_count = 0;

    static FieldSpec parse(const std::string& text);
    std::string to_string() const;
};

struct SamplingOptions {
    long height = 16;
    // Samples beyond |basis| - 1 added to the interpolation matrix.
    std::size_t extra_samples = 10;
    // Fresh samples the result must vanish on.
    std::size_t verification_samples = 10;
};

// count distinct points of the source, deterministic under seed. Stream counter
// separates independent uses of one seed.
std::vector<RatVector> sample_from(const PointSource& source, std::size_t count, long height, std::uint64_t seed,
                                   std::uint64_t stream = streams::sampling);
std::vector<ModVector> sample_from_mod(const PointSource& source, std::size_t count, const PrimeField& field,
                                       std::uint64_t seed, std::uint64_t stream = streams::sampling);

std::vector<RatVector> sample_points(const Parametrization& f, std::size_t count, long height, std::uint64_t seed);
std::vector<RatVector> horn_sample(const ZMat& a, const ZMat& b, std::size_t count, long height, std::uint64_t seed);

// Canonical generator of the kernel of the matrix with rows p^B; the kernel must be
// one-dimensional.
IntVector vandermonde_kernel(const MonomialBasis& basis, const std::vector<RatVector>& points);
ModVector vandermonde_kernel(const MonomialBasis& basis, const std::vector<ModVector>& points,
                             const PrimeField& field);

// Interpolation over an explicit monomial basis.
ImplicitPolynomial interpolate_on_basis(const PointSource& source, const MonomialBasis& basis, const FieldSpec& field,
                                        std::uint64_t seed, const SamplingOptions& options = {});

ImplicitPolynomial implicit_equation(const PointSource& source, const LatticePolytope& p, const FieldSpec& field,
                                     std::uint64_t seed, const SamplingOptions& options = {});
ImplicitPolynomial implicit_equation(const Parametrization& f, const LatticePolytope& p, const FieldSpec& field,
                                     std::uint64_t seed, const SamplingOptions& options = {});

}  // namespace tropimpl
