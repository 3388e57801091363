#include "doctest.h"
#include "oracles.hpp"

#include "tropimpl/chow.hpp"
#include "tropimpl/errors.hpp"
#include "tropimpl/random.hpp"

#include <algorithm>
#include <map>

using namespace tropimpl;

namespace {

Parametrization space_curve() {
    Parametrization f;
    f.d = 1;
    f.n = 3;
    f.components.push_back({{{1, {3}}, {-1, {1}}}});
    f.components.push_back({{{1, {3}}, {1, {2}}}});
    f.components.push_back({{{1, {4}}, {-1, {3}}}});
    return f;
}

TropicalCycle space_curve_cycle() {
    TropicalCycle c;
    c.ambient_dim = 3;
    c.pure_dim = 1;
    for (auto r : {int_vector({1, 2, 3}), int_vector({1, 1, 0}), int_vector({1, 0, 1}), int_vector({-3, -3, -4})})
        c.items.push_back({Cone(3, {r}), Int(1)});
    return homogenize(c);
}

// Point of the space curve at parameter t in homogeneous coordinates.
RatVector curve_point(const Rat& t) { return {1, t * t * t - t, t * t * t + t * t, t * t * t * t - t * t * t}; }

std::size_t tuple_index(const std::vector<IndexTuple>& tuples, const IndexTuple& t) {
    return static_cast<std::size_t>(std::find(tuples.begin(), tuples.end(), t) - tuples.begin());
}

// Sign of the permutation listing first then second.
int shuffle_sign(const IndexTuple& first, const IndexTuple& second) {
    int inversions = 0;
    for (auto a : first)
        for (auto b : second)
            if (a > b) ++inversions;
    return inversions % 2 ? -1 : 1;
}

const ChowPolytopeResult& space_curve_result() {
    static const ChowPolytopeResult r = [] {
        ShiftSearchOptions options;
        options.degree_hint = 4;
        return chow_polytope(space_curve_cycle(), 1, space_curve(), OracleConfig{}, 0, options);
    }();
    return r;
}

}  // namespace

TEST_CASE("index tuples and monomial notation") {
    auto t = index_tuples(4, 2);
    CHECK(t.size() == 6);
    CHECK(t.front() == IndexTuple{0, 1});
    CHECK(t.back() == IndexTuple{2, 3});
    PluckerMonomial m = parse_plucker_monomial("p01*p03^2");
    CHECK(m.degree() == 3);
    CHECK(to_string(m) == "p01*p03^2");
    CHECK(m.weight(3) == int_vector({3, 1, 0, 2}));
}

TEST_CASE("standard monomials of a weight") {
    auto ms = standard_monomials_of_weight(int_vector({2, 2, 2, 2}), 1, 3);
    std::vector<std::string> names;
    for (const auto& m : ms) names.push_back(to_string(m));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"p01*p02*p13*p23", "p01^2*p23^2", "p02^2*p13^2"});
}

TEST_CASE("Chow samples satisfy the Grassmann-Plücker relations") {
    Parametrization f4;
    f4.d = 1;
    f4.n = 4;
    f4.components = space_curve().components;
    f4.components.push_back({{{2, {1}}, {1, {5}}}});
    for (std::size_t n : {3, 4}) {
        const Parametrization f = n == 3 ? space_curve() : f4;
        auto tuples = index_tuples(n + 1, 2);
        auto p = [&](const RatVector& x, std::size_t i, std::size_t j) { return x[tuple_index(tuples, {i, j})]; };
        for (std::uint64_t k = 0; k < 10; ++k) {
            RatVector x = chow_sample(f, 1, n, 5, k);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    for (std::size_t a = j + 1; a <= n; ++a)
                        for (std::size_t b = a + 1; b <= n; ++b)
                            CHECK(p(x, i, j) * p(x, a, b) - p(x, i, a) * p(x, j, b) + p(x, i, b) * p(x, j, a) == 0);
        }
    }
}

TEST_CASE("kernel-route coordinates are the signed complementary minors") {
    Rng rng(51);
    const std::size_t n = 4;
    for (std::size_t d : {1, 2}) {
        Parametrization f;
        f.d = d;
        f.n = n;
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPolynomial p;
            p.terms.push_back({Rat(1), std::vector<long>(d, static_cast<long>(i % 2))});
            p.terms.push_back({Rat(static_cast<long>(i) + 2), std::vector<long>(d, 1)});
            f.components.push_back(p);
        }
        ChowSource chow(f, d, n);
        const std::size_t rows = n - d;
        auto primal = index_tuples(n + 1, rows);
        auto dual = index_tuples(n + 1, d + 1);
        for (int trial = 0; trial < 10; ++trial) {
            QMat span(rows, n + 1);
            oracle::RatRows m(rows, RatVector(n + 1));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j <= n; ++j) span(i, j) = m[i][j] = rng.uniform(-9, 9);
            RatVector got = chow.plucker_of_span(span);
            REQUIRE(got.size() == dual.size());
            std::optional<Rat> ratio;
            bool proportional = true;
            for (std::size_t k = 0; k < dual.size(); ++k) {
                IndexTuple complement;
                for (std::size_t j = 0; j <= n; ++j)
                    if (std::find(dual[k].begin(), dual[k].end(), j) == dual[k].end()) complement.push_back(j);
                Rat q = shuffle_sign(dual[k], complement) * oracle::minor(m, complement);
                if (q == 0 || got[k] == 0) {
                    proportional = proportional && q == got[k];
                    continue;
                }
                if (!ratio) ratio = got[k] / q;
                proportional = proportional && got[k] / q == *ratio;
            }
            CHECK(proportional);
        }
    }
}

TEST_CASE("the Chow fan has 16 cones and a flat oracle") {
    TropicalCycle fan = chow_fan(space_curve_cycle(), 1);
    CHECK(fan.items.size() == 16);
    CHECK(fan.pure_dim == 3);
    VertexOracle o(fan);
    Rng rng(52);
    std::optional<Int> sum;
    for (int k = 0; k < 30; ++k) {
        IntVector w{Int(rng.uniform(-99, 99)), Int(rng.uniform(-99, 99)), Int(rng.uniform(-99, 99)), Int(rng.uniform(-99, 99))};
        IntVector v = o.vertex(w, OracleConfig{});
        Int s = 0;
        for (const auto& x : v) s += x;
        if (!sum) sum = s;
        CHECK(s == *sum);
    }
    CHECK_THROWS_AS(chow_fan(space_curve_cycle(), 2), Error);
}

TEST_CASE("lattice points of the Chow polytope have coordinate sum (d+1) deg") {
    const auto& r = space_curve_result();
    CHECK(r.degree == 4);
    for (const auto& u : lattice_points(r.polytope)) {
        Int s = 0;
        for (const auto& x : u) s += x;
        CHECK(s == 8);
    }
}

TEST_CASE("Chow forms do not depend on the seed") {
    const auto& r = space_curve_result();
    REQUIRE(r.chow_form);
    PluckerPoly again = chow_form(space_curve(), r.polytope, 1, 3, 4242);
    CHECK(again.terms == r.chow_form->terms);
}

TEST_CASE("equations from the Chow form cut out the curve") {
    const auto& form = *space_curve_result().chow_form;
    auto eqs = chow_to_equations(form, 1, 3, {{RatVector{2, -1, 3, 5}}, {RatVector{0, 1, 1, -7}}});
    REQUIRE(eqs.size() == 2);
    for (const auto& eq : eqs) {
        CHECK_FALSE(eq.terms.empty());
        for (int k = 1; k <= 5; ++k) CHECK(eq.evaluate(curve_point(make_rat(k + 1, 3))) == 0);
        // A point off the curve.
        CHECK(eq.evaluate(RatVector{1, 1, 1, 1}) != 0);
    }
    // The affine curve passes through the origin (t = 0), so the cone over it contains
    // e0 and the plane through e0 meets X for every x: the equation is identically zero.
    auto through_origin = chow_to_equations(form, 1, 3, {{RatVector{1, 0, 0, 0}}});
    bool all_zero = true;
    for (const auto& [e, c] : through_origin[0].terms) all_zero = all_zero && c == 0;
    CHECK(all_zero);
}

TEST_CASE("for plane curves the Chow form is the implicit equation") {
    Parametrization f;
    f.d = 1;
    f.n = 2;
    f.components.push_back({{{11, {2}}, {5, {3}}, {-1, {4}}}});
    f.components.push_back({{{11, {0}}, {11, {1}}, {7, {8}}}});
    LatticePolytope newton = reconstruct_polytope(get_tropical_cycle(f.newton_polytopes()), OracleConfig{});
    ImplicitPolynomial F = implicit_equation(f, newton, FieldSpec{}, 0);
    ChowPolytopeResult r = chow_polytope(homogenize(get_tropical_cycle(f.newton_polytopes())), 1, f, OracleConfig{}, 0);
    REQUIRE(r.chow_form);
    CHECK(r.degree == 8);
    XPolynomial eq = chow_to_equations(*r.chow_form, 1, 2, {{}})[0];
    std::map<IntVector, Rat> from_chow, from_affine;
    for (const auto& [e, c] : eq.terms)
        if (c != 0) from_chow[{e[1], e[2]}] = c;
    for (std::size_t k = 0; k < F.coefficients.size(); ++k)
        if (F.coefficients[k] != 0) from_affine[F.basis.exponents[k]] = F.coefficients[k];
    REQUIRE(from_chow.size() == from_affine.size());
    const Rat ratio = from_chow.begin()->second / from_affine.begin()->second;
    for (const auto& [e, c] : from_affine) CHECK(from_chow[e] == c * ratio);
}
