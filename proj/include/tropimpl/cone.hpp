#pragma once

#include "tropimpl/lattice.hpp"

namespace tropimpl {

// Rational polyhedral cone cone(rays) + span(lineality). Rays are stored primitive,
// deduplicated and sorted; lineality as a saturated Hermite basis.
class Cone {
public:
    Cone() = default;
    Cone(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<IntVector> lineality = {});

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& lineality() const { return lineality_; }
    std::size_t dim() const { return dim_; }

    std::vector<IntVector> generators() const;
    // Basis of span(cone) ∩ Z^n.
    LatticeBasis span_lattice() const;
    // Integer normals of the linear span (a basis of its orthogonal complement).
    std::vector<IntVector> span_normals() const;
    // Inner normals h of the facets relative to the span: the cone is
    // {x in span : h·x >= 0 for all h}.
    std::vector<IntVector> facet_normals() const;

    bool contains(const RatVector& x) const;
    bool contains(const IntVector& x) const { return contains(to_rat(x)); }
    bool in_relative_interior(const RatVector& x) const;

    // Sum of the rays: a point of the relative interior.
    IntVector interior_point() const;

    Cone negated() const;
    Cone image(const ZMat& map) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lineality_;
    std::size_t dim_ = 0;
};

// Same point set (mutual containment and equal dimension).
bool same_cone(const Cone& a, const Cone& b);

// Minkowski sum of two cones.
Cone cone_sum(const Cone& a, const Cone& b);

}  // namespace tropimpl
