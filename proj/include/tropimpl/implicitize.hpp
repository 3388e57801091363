#pragma once

#include "tropimpl/cycle.hpp"
#include "tropimpl/parametrization.hpp"

namespace tropimpl {

struct OracleConfig {
    std::uint64_t rng_seed = 0;
    std::int64_t perturbation_height = 1000;
    std::size_t max_retries = 64;
};

// Tropical graph of a generic Laurent map with the given Newton polytopes, in
// R^{n+d} with the x coordinates first.
TropicalCycle get_graph_cycle(const std::vector<LatticePolytope>& newton_polytopes);

// Tropicalization of the image of a generic Laurent map: the graph cycle pushed
// to the x coordinates, weights divided by the generic fiber degree.
TropicalCycle get_tropical_cycle(const std::vector<LatticePolytope>& newton_polytopes, const Int& delta = 1);

// Tropical A-discriminant in R^n from the Horn uniformization.
TropicalCycle get_trop_a_disc(const ZMat& a);

// Checks rank and the all-ones row-span condition for an A-discriminant input.
void check_discriminant_matrix(const ZMat& a);

// Vertex oracle for the Newton polytope dual to a tropical hypersurface. Cone data is
// prepared once; queries are const and safe to issue concurrently.
class VertexOracle {
public:
    explicit VertexOracle(const TropicalCycle& c);

    std::size_t ambient_dim() const { return n_; }
    // Vertex minimizing w, perturbing w when it is not generic.
    IntVector vertex(const IntVector& w, const OracleConfig& cfg) const;
    // nullopt when some ray w + R+ e_i touches a cone boundary or lies in a cone's span.
    std::optional<IntVector> generic_vertex(const IntVector& w) const;

private:
    struct Prepared {
        IntVector normal;
        std::vector<IntVector> facets;
        Int weight;
    };
    std::size_t n_ = 0;
    std::vector<Prepared> cones_;
    Int bound_sum_ = 0;  // sum over i of the largest possible coordinate i
};

IntVector get_vertex(const TropicalCycle& c, const IntVector& w, const OracleConfig& cfg);

struct ReconstructionStats {
    std::size_t queries = 0;
    std::size_t rounds = 0;
};

LatticePolytope reconstruct_polytope(const TropicalCycle& c, const OracleConfig& cfg,
                                     ReconstructionStats* stats = nullptr);

}  // namespace tropimpl
