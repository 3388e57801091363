#include "doctest.h"

#include "tropimpl/errors.hpp"
#include "tropimpl/implicitize.hpp"
#include "tropimpl/interpolate.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>

using namespace tropimpl;

namespace {

Parametrization curve_example() {
    Parametrization f;
    f.d = 1;
    f.n = 2;
    f.components.push_back({{{11, {2}}, {5, {3}}, {-1, {4}}}});
    f.components.push_back({{{11, {0}}, {11, {1}}, {7, {8}}}});
    return f;
}

LatticePolytope curve_polytope() {
    return convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({8, 0}), int_vector({0, 4})});
}

ErrorCode code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("the implicit equation vanishes on fresh samples") {
    Parametrization f = curve_example();
    ImplicitPolynomial F = implicit_equation(f, curve_polytope(), FieldSpec{}, 0);
    // 25 lattice points, but the x^7 coefficient of the resultant vanishes.
    CHECK(F.basis.exponents.size() == 25);
    CHECK(F.support_size() == 24);
    for (const auto& x : sample_points(f, 10, 40, 777)) CHECK(F.evaluate(x) == 0);

    FieldSpec gf = FieldSpec::parse("gf:1000003");
    ImplicitPolynomial G = implicit_equation(f, curve_polytope(), gf, 0);
    REQUIRE(G.modulus);
    PrimeField field(*G.modulus);
    for (const auto& x : sample_from_mod(ParametrizationSource(f), 10, field, 777, streams::verification))
        CHECK(G.evaluate_mod(x, field) == 0);
}

TEST_CASE("canonical coefficients do not depend on seed or sample order") {
    Parametrization f = curve_example();
    ImplicitPolynomial a = implicit_equation(f, curve_polytope(), FieldSpec{}, 0);
    ImplicitPolynomial b = implicit_equation(f, curve_polytope(), FieldSpec{}, 12345);
    CHECK(a.coefficients == b.coefficients);

    MonomialBasis basis = monomial_basis(curve_polytope());
    auto points = sample_points(f, basis.exponents.size() + 5, 16, 3);
    IntVector forward = vandermonde_kernel(basis, points);
    std::reverse(points.begin(), points.end());
    CHECK(vandermonde_kernel(basis, points) == forward);
    CHECK(forward == a.coefficients);
}

ModVector as_mod(const IntVector& v, const PrimeField& field) {
    ModVector out;
    for (const auto& c : v) out.push_back(field.from_int(c));
    return out;
}

TEST_CASE("rational solution reduces to the prime field solutions") {
    Parametrization f = curve_example();
    ImplicitPolynomial q = implicit_equation(f, curve_polytope(), FieldSpec{}, 0);
    for (std::uint64_t p : {std::uint64_t{1000003}, std::uint64_t{998244353}, std::uint64_t{default_prime()}}) {
        FieldSpec prime_field;
        prime_field.kind = FieldSpec::Kind::Prime;
        prime_field.prime = p;
        ImplicitPolynomial g = implicit_equation(f, curve_polytope(), prime_field, 0);
        PrimeField field(p);
        ModVector reduced;
        for (const auto& c : q.coefficients) reduced.push_back(field.from_int(c));
        CHECK(normalize_mod(reduced, field) == as_mod(g.coefficients, field));
    }
}

TEST_CASE("multi-prime reconstruction equals the rational solve") {
    Parametrization f = curve_example();
    ImplicitPolynomial q = implicit_equation(f, curve_polytope(), FieldSpec{}, 0);
    ImplicitPolynomial crt = implicit_equation(f, curve_polytope(), FieldSpec::parse("crt:2"), 0);
    CHECK_FALSE(crt.modulus);
    CHECK(crt.coefficients == q.coefficients);
}

TEST_CASE("small primes sample from an extension field") {
    // The pulled-back degree exceeds 5, so GF(5) points alone cannot pin down F.
    Parametrization f = curve_example();
    ImplicitPolynomial q = implicit_equation(f, curve_polytope(), FieldSpec{}, 0);
    ImplicitPolynomial g = implicit_equation(f, curve_polytope(), FieldSpec::parse("gf:5"), 0);
    PrimeField field(5);
    ModVector reduced;
    for (const auto& c : q.coefficients) reduced.push_back(field.from_int(c));
    CHECK(normalize_mod(reduced, field) == as_mod(g.coefficients, field));
}

TEST_CASE("explicit zeros stay in the basis listing") {
    // f1 = 2t^4 + 3t, f2 = 5t^2 + 7t: y^3 lies in the Newton polygon but not in F.
    Parametrization f;
    f.d = 1;
    f.n = 2;
    f.components.push_back({{{2, {4}}, {3, {1}}}});
    f.components.push_back({{{5, {2}}, {7, {1}}}});
    LatticePolytope p = reconstruct_polytope(get_tropical_cycle(f.newton_polytopes()), OracleConfig{});
    ImplicitPolynomial F = implicit_equation(f, p, FieldSpec{}, 0);
    auto it = std::find(F.basis.exponents.begin(), F.basis.exponents.end(), int_vector({0, 3}));
    REQUIRE(it != F.basis.exponents.end());
    CHECK(F.coefficients[static_cast<std::size_t>(it - F.basis.exponents.begin())] == 0);
    // a1^2 y^4 - 2 a1 a3^2 x y^2 + a3^4 x^2 with (a1, a2, a3, a4) = (2, 3, 5, 7), up to scale.
    auto coeff = [&](long a, long b) {
        auto e = std::find(F.basis.exponents.begin(), F.basis.exponents.end(), int_vector({a, b}));
        return F.coefficients[static_cast<std::size_t>(e - F.basis.exponents.begin())];
    };
    CHECK(coeff(0, 4) * 625 == coeff(2, 0) * 4);
    CHECK(coeff(1, 2) * 4 == coeff(0, 4) * -100);
}

TEST_CASE("too large or too small ansatz polytopes are detected") {
    Parametrization f = curve_example();
    auto enlarged = convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({8, 0}), int_vector({0, 4}), int_vector({1, 4}), int_vector({9, 0})});
    CHECK(code_of([&] { implicit_equation(f, enlarged, FieldSpec{}, 0); }) == ErrorCode::KernelTooBig);
    auto shrunk = convex_hull(std::vector<IntVector>{int_vector({0, 0}), int_vector({7, 0}), int_vector({0, 4})});
    CHECK(code_of([&] { implicit_equation(f, shrunk, FieldSpec{}, 0); }) == ErrorCode::KernelEmpty);
}

TEST_CASE("field strings parse") {
    CHECK(FieldSpec::parse("q").kind == FieldSpec::Kind::Rational);
    CHECK(FieldSpec::parse("gf:101").prime == 101);
    CHECK(FieldSpec::parse("crt:3").prime_count == 3);
    CHECK(FieldSpec::parse("gf:101").to_string() == "gf:101");
    CHECK_THROWS_AS(FieldSpec::parse("gf:100"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("real"), Error);
}

TEST_CASE("Horn samples lie on the discriminant") {
    ZMat cube{{1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}};
    auto pts = horn_sample(cube, gale_dual(cube), 5, 10, 1);
    // 2x2x2 hyperdeterminant.
    for (const auto& x : pts) {
        Rat d = x[0] * x[0] * x[7] * x[7] + x[1] * x[1] * x[6] * x[6] + x[3] * x[3] * x[4] * x[4] + x[2] * x[2] * x[5] * x[5] +
                4 * x[0] * x[3] * x[5] * x[6] + 4 * x[1] * x[2] * x[4] * x[7] - 2 * x[0] * x[1] * x[6] * x[7] -
                2 * x[0] * x[2] * x[5] * x[7] - 2 * x[0] * x[3] * x[4] * x[7] - 2 * x[1] * x[2] * x[5] * x[6] -
                2 * x[1] * x[3] * x[4] * x[6] - 2 * x[2] * x[3] * x[4] * x[5];
        CHECK(d == 0);
    }
}
