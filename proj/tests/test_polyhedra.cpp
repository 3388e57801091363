#include "doctest.h"
#include "oracles.hpp"
#include "properties.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/polytope.hpp"
#include "tropimpl/random.hpp"

#include <algorithm>

using namespace tropimpl;

namespace {

std::vector<IntVector> random_points(Rng& rng, std::size_t count, std::size_t dim, long h) {
    std::vector<IntVector> pts(count, IntVector(dim));
    for (auto& p : pts)
        for (auto& x : p) x = rng.uniform(-h, h);
    return pts;
}

std::vector<IntVector> sorted_vertices(const LatticePolytope& p) {
    auto v = p.integer_vertices();
    std::sort(v.begin(), v.end());
    return v;
}

LatticePolytope random_polytope(Rng& rng, std::size_t dim, long h = 4) {
    for (;;) {
        LatticePolytope p = convex_hull(random_points(rng, static_cast<std::size_t>(rng.uniform(dim + 1, dim + 5)), dim, h));
        if (p.dim() == dim) return p;
    }
}

}  // namespace

TEST_CASE("hull vertices agree with brute-force facet enumeration") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = trial % 2 ? 3 : 2;
        auto pts = random_points(rng, static_cast<std::size_t>(rng.uniform(4, 9)), dim, 5);
        LatticePolytope p = convex_hull(pts);
        if (p.dim() != dim) continue;
        CHECK(sorted_vertices(p) == oracle::brute_force_vertices(pts));
    }
}

TEST_CASE("V/H round trip and vertex incidences") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        LatticePolytope p = random_polytope(rng, 3);
        CHECK(convex_hull(p.vertices()) == p);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            std::size_t incident = 0;
            for (const auto& f : p.facets())
                if (std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end()) ++incident;
            CHECK(incident >= p.dim());
        }
        for (const auto& f : p.facets())
            for (const auto& v : p.vertices()) CHECK(dot(f.normal, v) >= f.offset);
    }
}

TEST_CASE("lower-dimensional polytopes keep their affine equations") {
    LatticePolytope seg = convex_hull(std::vector<IntVector>{int_vector({0, 0, 1}), int_vector({2, 4, 1}), int_vector({1, 2, 1})});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.equations().size() == 2);
    CHECK(lattice_points(seg).size() == 3);
}

TEST_CASE("faces minimize the weight") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        LatticePolytope p = random_polytope(rng, 3);
        IntVector w = random_points(rng, 1, 3, 5)[0];
        LatticePolytope face = face_of(p, w);
        Rat value = dot(w, face.vertices()[0]);
        for (const auto& v : face.vertices()) {
            CHECK(p.contains(v));
            CHECK(dot(w, v) == value);
        }
        for (const auto& v : p.vertices())
            if (!face.contains(v)) CHECK(dot(w, v) > value);
    }
}

TEST_CASE("Minkowski sums are commutative and associative") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_polytope(rng, 3), b = random_polytope(rng, 3), c = random_polytope(rng, 2);
        auto c3 = convex_hull(std::vector<IntVector>{int_vector({0, 0, 0}), int_vector({1, 2, 0})});
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        CHECK(minkowski_sum(minkowski_sum(a, b), c3) == minkowski_sum(a, minkowski_sum(b, c3)));
        CHECK(minkowski_sum(c, c) == c.scaled(2));
    }
}

TEST_CASE("mixed volume: oracle, symmetry and multilinearity") {
    auto r = props::mixed_volume_suite(30, 5);
    INFO(r.first_failure);
    CHECK(r.passed());

    Rng rng(25);
    const LatticeBasis plane{2, {unit_vector(2, 0), unit_vector(2, 1)}};
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_polytope(rng, 2), q = random_polytope(rng, 2), s = random_polytope(rng, 2);
        CHECK(mixed_volume({p, q}, plane) == mixed_volume({q, p}, plane));
        CHECK(mixed_volume({minkowski_sum(p, s), q}, plane) == mixed_volume({p, q}, plane) + mixed_volume({s, q}, plane));
        // MV(P, P) is the normalized volume.
        CHECK(Rat(mixed_volume({p, p}, plane)) == normalized_volume(p));
    }
    auto simplex = convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({1, 0}), int_vector({0, 1})});
    CHECK(mixed_volume({simplex, simplex}, plane) == 1);
}

TEST_CASE("normalized volume of the unit simplex is one") {
    auto simplex = convex_hull(std::vector<IntVector>{int_vector({0, 0, 0}), int_vector({1, 0, 0}), int_vector({0, 1, 0}),
                                                      int_vector({0, 0, 1})});
    CHECK(normalized_volume(simplex) == 1);
    CHECK(normalized_volume(simplex.scaled(2)) == 8);
}

TEST_CASE("f-vectors satisfy Euler's relation") {
    Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        LatticePolytope p = random_polytope(rng, trial % 2 ? 3 : 4);
        auto f = f_vector(p);
        REQUIRE(f.size() == p.dim());
        long alt = 0;
        for (std::size_t i = 0; i < f.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
        CHECK(alt == 1 - (p.dim() % 2 ? -1 : 1));
    }
    auto cube = convex_hull(std::vector<IntVector>{int_vector({0, 0, 0}), int_vector({0, 0, 1}), int_vector({0, 1, 0}),
                                                   int_vector({0, 1, 1}), int_vector({1, 0, 0}), int_vector({1, 0, 1}),
                                                   int_vector({1, 1, 0}), int_vector({1, 1, 1})});
    CHECK(f_vector(cube) == std::vector<std::size_t>{8, 12, 6});
}

TEST_CASE("lattice point counts follow an Ehrhart polynomial") {
    Rng rng(27);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = trial % 2 ? 3 : 2;
        LatticePolytope p = random_polytope(rng, dim, 3);
        // Counts at k = 0..dim determine the polynomial; k = dim+1 is predicted.
        std::vector<Rat> counts;
        for (std::size_t k = 0; k <= dim + 1; ++k)
            counts.push_back(k == 0 ? Rat(1) : Rat(static_cast<long>(lattice_points(p.scaled(static_cast<long>(k))).size())));
        // The dim-th finite difference is dim! times the leading coefficient, i.e. the
        // normalized volume; one more difference vanishes.
        auto difference = [](std::vector<Rat> v) {
            for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
            v.pop_back();
            return v;
        };
        std::vector<Rat> diff = counts;
        for (std::size_t order = 0; order < dim; ++order) diff = difference(diff);
        CHECK(diff[0] == normalized_volume(p));
        CHECK(difference(diff)[0] == 0);
    }
}

TEST_CASE("lattice enumeration refuses huge boxes unless forced") {
    auto big = convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({100000, 0}), int_vector({0, 100000})});
    CHECK_THROWS_AS(lattice_points(big), Error);
    try {
        lattice_points(big);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LatticeEnumerationTooLarge);
    }
    auto small = convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({3, 0}), int_vector({0, 3})});
    CHECK(lattice_points(small).size() == 10);
}
