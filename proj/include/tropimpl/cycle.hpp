#pragma once

#include "tropimpl/cone.hpp"
#include "tropimpl/polytope.hpp"

#include <optional>

namespace tropimpl {

struct WeightedCone {
    Cone cone;
    Int weight;
};

// Unmerged list of weighted cones; the collection need not form a fan.
struct TropicalCycle {
    std::size_t ambient_dim = 0;
    std::size_t pure_dim = 0;
    std::vector<WeightedCone> items;
};

// Checks positivity of weights and pure dimension.
void validate_cycle(const TropicalCycle& c);

// Images of the cones of C under V that keep dimension target_dim (default: the
// pure dimension of C), weighted by the lattice index of the image.
TropicalCycle push_forward_cycle(const TropicalCycle& c, const ZMat& v,
                                 std::optional<std::size_t> target_dim = std::nullopt);

// Pairs of cones whose sum has the expected dimension
// dim σ + dim λ - dim(lin σ ∩ lin λ), weighted by m_σ·m_λ·lattice index.
TropicalCycle stable_sum(const TropicalCycle& c, const TropicalCycle& d);

// Cones spanned by k-subsets of e_0..e_n (negated if asked), with the all-ones lineality.
TropicalCycle standard_linear_cycle(std::size_t k, std::size_t n, bool negated);

// Codimension-one inner normal cones of a polytope, weighted by lattice edge lengths.
TropicalCycle tropical_hypersurface(const LatticePolytope& p);

TropicalCycle negated(const TropicalCycle& c);

// Prepends a homogenizing coordinate (0) and adds the all-ones lineality.
TropicalCycle homogenize(const TropicalCycle& c);

// Canonical order: by rays, then lineality, then weight.
void sort_items(TropicalCycle& c);

}  // namespace tropimpl
