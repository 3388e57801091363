#pragma once

#include "tropimpl/matrix.hpp"
#include "tropimpl/prime_field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tropimpl {

struct Echelon {
    QMat reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(const QMat& m);
std::size_t rank(const QMat& m);
std::size_t rank(const ZMat& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

// Pivot columns of the row echelon form.
std::vector<std::size_t> pivot_columns(const ZMat& m);

Rat determinant(const QMat& m);
Int determinant(const ZMat& m);
QMat inverse(const QMat& m);

// Some solution x of m x = b, or nullopt.
std::optional<RatVector> solve(const QMat& m, const RatVector& b);

// Right kernel over Q by fraction-free Gauss-Jordan elimination. One vector per
// free column, in increasing free-column order, each canonically scaled.
std::vector<IntVector> kernel_basis(const QMat& m);
std::vector<IntVector> kernel_basis(const ZMat& m);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
using ModVector = std::vector<std::uint64_t>;

// Right kernel over GF(p); one vector per free column with that entry 1.
std::vector<ModVector> kernel_basis(ModMatrix m, std::size_t cols, const PrimeField& field);

// Scales so that the first nonzero entry is 1.
ModVector normalize_mod(ModVector v, const PrimeField& field);

// Rational number with |num|, den <= sqrt(M/2) congruent to a mod M, or nullopt.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& modulus);

RatVector crt_rational_reconstruct(const std::vector<ModVector>& residue_vectors,
                                   const std::vector<std::uint64_t>& primes);

// Integer basis of the saturated kernel lattice of A (rows), (n-d) x n.
ZMat gale_dual(const ZMat& a);

}  // namespace tropimpl
