#pragma once

#include "tropimpl/cone.hpp"

#include <memory>

namespace tropimpl {

struct Facet {
    IntVector normal;                  // inner normal: normal·x >= offset on the polytope
    Rat offset;
    std::vector<std::size_t> vertices; // indices of incident vertices
};

struct AffineEquation {
    IntVector normal;
    Rat value;  // normal·x = value on the polytope
};

class LatticePolytope;

// Vertex provenance for tracked Minkowski sums: for each vertex, the index of the
// vertex of every summand it decomposes into.
struct SummandTracking {
    std::vector<LatticePolytope> summands;
    std::vector<std::vector<std::size_t>> decomposition;
};

// Convex polytope with rational vertices; vertices are sorted lexicographically and
// irredundant. The H-representation is computed at construction.
class LatticePolytope {
public:
    LatticePolytope() = default;

    std::size_t ambient_dim() const { return ambient_dim_; }
    // Affine dimension; -1 never occurs since polytopes are nonempty.
    std::size_t dim() const { return dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<AffineEquation>& equations() const { return equations_; }
    // Coordinates onto which the affine hull projects bijectively.
    const std::vector<std::size_t>& chart() const { return chart_; }

    bool has_integral_vertices() const;
    std::vector<IntVector> integer_vertices() const;

    bool contains(const RatVector& x) const;
    bool tracked() const { return tracking_ != nullptr; }
    const SummandTracking* tracking() const { return tracking_.get(); }

    LatticePolytope translated(const RatVector& shift) const;
    LatticePolytope scaled(const Rat& factor) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    friend LatticePolytope convex_hull(const std::vector<RatVector>& points);
    friend LatticePolytope tracked_minkowski_sum(const std::vector<LatticePolytope>& summands);
    friend LatticePolytope face_with_vertices(const LatticePolytope& p, const std::vector<std::size_t>& ids);

    std::size_t ambient_dim_ = 0;
    std::size_t dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<AffineEquation> equations_;
    std::vector<std::size_t> chart_;
    std::shared_ptr<const SummandTracking> tracking_;
};

LatticePolytope convex_hull(const std::vector<RatVector>& points);
LatticePolytope convex_hull(const std::vector<IntVector>& points);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
// Minkowski sum recording, for each vertex, its decomposition into summand vertices.
LatticePolytope tracked_minkowski_sum(const std::vector<LatticePolytope>& summands);

// The w-minimal face.
LatticePolytope face_of(const LatticePolytope& p, const RatVector& w);
LatticePolytope face_of(const LatticePolytope& p, const IntVector& w);
// Face spanned by a subset of the vertices (which must form a face).
LatticePolytope face_with_vertices(const LatticePolytope& p, const std::vector<std::size_t>& ids);

struct Face {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> facets;  // facets containing the face
    std::size_t dim = 0;
};

// All nonempty faces including the polytope itself, ordered by dimension then vertex list.
std::vector<Face> face_lattice(const LatticePolytope& p);

struct FaceData {
    LatticePolytope face;
    Cone normal_cone;
    std::vector<LatticePolytope> summand_faces;
};

// All k-dimensional cones of the inner normal fan with their faces.
std::vector<FaceData> normal_fan_cones(const LatticePolytope& p, std::size_t k);

// Inner normal cone of a face given by its facet list.
Cone normal_cone(const LatticePolytope& p, const Face& face);

std::vector<std::size_t> f_vector(const LatticePolytope& p);
std::vector<std::size_t> f_vector(const LatticePolytope& p, const std::vector<Face>& lattice);

inline constexpr double lattice_enumeration_limit = 1e8;

// All integer points, sorted lexicographically.
std::vector<IntVector> lattice_points(const LatticePolytope& p, bool force = false);

// k! times the Euclidean volume in lattice coordinates (0 if lower-dimensional).
Rat normalized_volume(const LatticePolytope& p, const LatticeBasis& lattice);
// Normalized volume of a full-dimensional point configuration hull in R^k.
Rat normalized_volume(const LatticePolytope& p);

Int mixed_volume(const std::vector<LatticePolytope>& faces, const LatticeBasis& lattice);

// Simplices (as vertex lists) of a pulling triangulation of a full-dimensional polytope.
std::vector<std::vector<RatVector>> triangulate(const LatticePolytope& p);

}  // namespace tropimpl
