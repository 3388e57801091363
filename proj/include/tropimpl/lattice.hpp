#pragma once

#include "tropimpl/matrix.hpp"

#include <optional>

namespace tropimpl {

enum class NormalFormKind { Hermite, Smith };

// form = left * M * right. For Hermite, right is the identity and form is in
// row-style Hermite normal form (positive pivots, entries above pivots reduced).
struct NormalForm {
    ZMat form;
    ZMat left;
    ZMat right;
};

NormalForm lattice_normal_form(const ZMat& m, NormalFormKind kind);

// Nonzero diagonal entries of the Smith form, in divisibility order.
IntVector smith_invariants(const ZMat& m);

struct LatticeBasis {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> basis;

    std::size_t rank() const { return basis.size(); }
};

// Basis (rows) of {v in Z^n : M v = 0}, in Hermite form.
std::vector<IntVector> integer_kernel(const ZMat& m);

// Basis of span_Q(generators) ∩ Z^n, in Hermite form.
LatticeBasis saturate(const std::vector<IntVector>& generators, std::size_t ambient_dim);

// Index of the lattice generated by sub_generators inside the lattice spanned by super.
Int lattice_index(const LatticeBasis& super, const std::vector<IntVector>& sub_generators);

// Index of the lattice generated by (possibly dependent) generators inside its saturation.
Int generated_lattice_index(const std::vector<IntVector>& generators, std::size_t ambient_dim);

// Primitive integer normal of a hyperplane spanned by the generators; requires rank n-1.
IntVector hyperplane_normal(const std::vector<IntVector>& generators, std::size_t ambient_dim);

// Solves for coordinates with respect to a basis of independent vectors.
class LatticeCoordinates {
public:
    LatticeCoordinates() = default;
    LatticeCoordinates(const std::vector<IntVector>& basis, std::size_t ambient_dim);

    std::size_t rank() const { return rank_; }
    // Coordinates y with sum y_j b_j = x, or nullopt when x is outside the span.
    std::optional<RatVector> coordinates(const RatVector& x) const;
    RatVector coordinates_in_span(const RatVector& x) const;
    RatVector point(const RatVector& y) const;

private:
    std::size_t ambient_dim_ = 0;
    std::size_t rank_ = 0;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivot_columns_;
    QMat inverse_;  // inverse of the basis restricted to the pivot columns
};

}  // namespace tropimpl
