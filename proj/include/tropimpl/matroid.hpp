#pragma once

#include "tropimpl/cycle.hpp"

#include <cstdint>

namespace tropimpl {

// Matroid of the rows of a rational matrix; ground set of at most 64 elements.
class LinearMatroid {
public:
    explicit LinearMatroid(QMat realization);
    explicit LinearMatroid(const ZMat& realization) : LinearMatroid(to_rat(realization)) {}

    std::size_t ground_size() const { return m_; }
    std::size_t rank() const { return rank_; }
    const QMat& realization() const { return realization_; }

    std::size_t rank_of(std::uint64_t subset) const;
    std::uint64_t closure(std::uint64_t subset) const;
    std::uint64_t ground() const { return m_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m_) - 1; }

    // Flats grouped by rank (index = rank), each list sorted.
    std::vector<std::vector<std::uint64_t>> flats() const;
    // Maximal chains F_1 ⊊ ... ⊊ F_{r-1} of proper nonempty flats.
    std::vector<std::vector<std::uint64_t>> maximal_chains() const;
    // Connected components (coloops and loops are singleton components).
    std::vector<std::uint64_t> components() const;
    // All bases as bitmasks.
    std::vector<std::uint64_t> bases() const;
    bool has_loops() const;

    LinearMatroid restriction(std::uint64_t subset) const;

private:
    QMat realization_;
    std::size_t m_;
    std::size_t rank_;
};

enum class BergmanStructure {
    // One cone per maximal chain of proper nonempty flats.
    Fine,
    // One cone per initial matroid: fine cones with the same set of weight-minimal
    // bases are merged; connected components contribute lineality.
    Coarse,
};

// Bergman fan in the min convention: cones R·1 + cone(e_F, ...), weight 1. With min,
// the tropical plane x3 = x1 + x2 has the rays e1, e2, e3, so flat indicators enter
// with a positive sign.
TropicalCycle bergman_fan(const LinearMatroid& m, BergmanStructure structure = BergmanStructure::Fine);

}  // namespace tropimpl
