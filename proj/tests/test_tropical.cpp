#include "doctest.h"
#include "oracles.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/implicitize.hpp"
#include "tropimpl/matroid.hpp"
#include "tropimpl/random.hpp"

#include <algorithm>

using namespace tropimpl;

namespace {

Parametrization random_curve(Rng& rng, std::size_t n) {
    Parametrization f;
    f.d = 1;
    f.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPolynomial p;
        const long terms = rng.uniform(2, 3);
        std::vector<long> used;
        while (static_cast<long>(used.size()) < terms) {
            long e = rng.uniform(-3, 5);
            if (std::find(used.begin(), used.end(), e) != used.end()) continue;
            used.push_back(e);
            p.terms.push_back({Rat(rng.uniform(1, 9)), {e}});
        }
        f.components.push_back(p);
    }
    return f;
}

// Sum of weight times primitive ray over a one-dimensional fan.
IntVector balancing_defect(const TropicalCycle& c) {
    IntVector sum(c.ambient_dim, Int(0));
    for (const auto& it : c.items) sum = add(sum, scale(it.cone.rays().at(0), it.weight));
    return sum;
}

void check_pure(const TropicalCycle& c) {
    for (const auto& it : c.items) {
        CHECK(it.weight > 0);
        CHECK(it.cone.dim() == c.pure_dim);
        CHECK(it.cone.ambient_dim() == c.ambient_dim);
    }
}

// Total weight per distinct cone must agree.
bool same_weighted_cones(const TropicalCycle& a, const TropicalCycle& b) {
    auto totals = [](const TropicalCycle& c) {
        std::vector<std::pair<Cone, Int>> out;
        for (const auto& it : c.items) {
            auto hit = std::find_if(out.begin(), out.end(), [&](const auto& e) { return same_cone(e.first, it.cone); });
            if (hit == out.end())
                out.push_back({it.cone, it.weight});
            else
                hit->second += it.weight;
        }
        return out;
    };
    auto ta = totals(a), tb = totals(b);
    if (ta.size() != tb.size()) return false;
    for (const auto& [cone, w] : ta) {
        auto hit = std::find_if(tb.begin(), tb.end(), [&](const auto& e) { return same_cone(e.first, cone); });
        if (hit == tb.end() || hit->second != w) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tropical curves from parametrizations are balanced") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Parametrization f = random_curve(rng, trial % 2 ? 3 : 2);
        TropicalCycle c = get_tropical_cycle(f.newton_polytopes());
        CHECK(c.pure_dim == 1);
        check_pure(c);
        CHECK(is_zero(balancing_defect(c)));
        TropicalCycle g = get_graph_cycle(f.newton_polytopes());
        CHECK(g.ambient_dim == f.n + 1);
        check_pure(g);
        CHECK(is_zero(balancing_defect(g)));
    }
}

TEST_CASE("degree division merges equal cones") {
    // t -> (t^2 + t^4, t^6): the map has degree 2.
    Parametrization f;
    f.d = 1;
    f.n = 2;
    f.components.push_back({{{1, {2}}, {1, {4}}}});
    f.components.push_back({{{1, {6}}}});
    TropicalCycle once = get_tropical_cycle(f.newton_polytopes());
    TropicalCycle halved = get_tropical_cycle(f.newton_polytopes(), 2);
    Int total_once = 0, total_halved = 0;
    for (const auto& it : once.items) total_once += it.weight;
    for (const auto& it : halved.items) total_halved += it.weight;
    CHECK(total_once == 2 * total_halved);
    try {
        get_tropical_cycle(f.newton_polytopes(), 4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonDivisibleDegree);
    }
}

TEST_CASE("push-forwards compose") {
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        Parametrization f = random_curve(rng, 2);
        TropicalCycle c = get_tropical_cycle(f.newton_polytopes());
        ZMat v(2, 2), w(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    v(i, j) = rng.uniform(-2, 2);
                    w(i, j) = rng.uniform(-2, 2);
                }
        } while (determinant(v) == 0 || determinant(w) == 0);
        TropicalCycle stepwise = push_forward_cycle(push_forward_cycle(c, v), w);
        TropicalCycle direct = push_forward_cycle(c, w * v);
        CHECK(same_weighted_cones(stepwise, direct));
        VertexOracle a(stepwise), b(direct);
        for (int k = 0; k < 50; ++k) {
            IntVector x{Int(rng.uniform(-500, 500)), Int(rng.uniform(-500, 500))};
            CHECK(a.vertex(x, OracleConfig{}) == b.vertex(x, OracleConfig{}));
        }
    }
}

TEST_CASE("projection keeps only cones of the target dimension") {
    TropicalCycle c;
    c.ambient_dim = 3;
    c.pure_dim = 1;
    c.items.push_back({Cone(3, {int_vector({0, 0, 1})}), Int(2)});
    c.items.push_back({Cone(3, {int_vector({1, 1, 0})}), Int(1)});
    ZMat drop_last{{1, 0, 0}, {0, 1, 0}};
    TropicalCycle image = push_forward_cycle(c, drop_last);
    REQUIRE(image.items.size() == 1);
    CHECK(image.items[0].cone.rays()[0] == int_vector({1, 1}));
}

TEST_CASE("Bergman fan cones are the maximal flags of flats") {
    Rng rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(2, 3));
        const auto cols = static_cast<std::size_t>(rng.uniform(static_cast<long>(rows) + 1, 6));
        // The library matroid lives on rows, the oracle on columns.
        QMat m(cols, rows);
        oracle::RatRows q(rows, RatVector(cols));
        bool zero_column = false;
        for (std::size_t j = 0; j < cols; ++j) {
            bool nonzero = false;
            for (std::size_t i = 0; i < rows; ++i) {
                // Small entries give repeated and dependent columns, hence nontrivial flats.
                m(j, i) = q[i][j] = rng.uniform(-1, 1);
                nonzero = nonzero || q[i][j] != 0;
            }
            zero_column = zero_column || !nonzero;
        }
        if (zero_column) continue;
        LinearMatroid mat(m);
        TropicalCycle fan = bergman_fan(mat);
        CHECK(fan.items.size() == oracle::maximal_flag_count(q));
        check_pure(fan);
    }
}

TEST_CASE("Bergman fans of uniform matroids") {
    for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t m = r; m <= 6; ++m) {
            // Vandermonde columns realize U_{r,m}.
            QMat v(m, r);
            oracle::RatRows q(r, RatVector(m));
            for (std::size_t j = 0; j < m; ++j) {
                Rat x = static_cast<long>(j + 1), power = 1;
                for (std::size_t i = 0; i < r; ++i) {
                    v(j, i) = q[i][j] = power;
                    power *= x;
                }
            }
            std::size_t expected = 1;
            for (std::size_t k = 0; k + 1 < r; ++k) expected *= m - k;
            TropicalCycle fan = bergman_fan(LinearMatroid(v));
            CHECK(fan.items.size() == expected);
            CHECK(oracle::maximal_flag_count(q) == expected);
        }
}

TEST_CASE("matroids with loops are rejected") {
    QMat m(3, 2);
    m(0, 0) = 1;
    m(1, 1) = 1;
    try {
        bergman_fan(LinearMatroid(m));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LoopyMatroid);
    }
}

TEST_CASE("stable sums are commutative") {
    Rng rng(34);
    for (int trial = 0; trial < 8; ++trial) {
        TropicalCycle a = get_tropical_cycle(random_curve(rng, 3).newton_polytopes());
        TropicalCycle b = get_tropical_cycle(random_curve(rng, 3).newton_polytopes());
        TropicalCycle ab = stable_sum(a, b), ba = stable_sum(b, a);
        CHECK(ab.pure_dim == 2);
        check_pure(ab);
        CHECK(same_weighted_cones(ab, ba));
    }
}

TEST_CASE("A-discriminant cycles are pure of codimension one") {
    ZMat cube{{1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}};
    TropicalCycle c = get_trop_a_disc(cube);
    CHECK(c.ambient_dim == 8);
    CHECK(c.pure_dim == 7);
    check_pure(c);
}

TEST_CASE("discriminant matrices are validated") {
    auto code_of = [](const ZMat& a) {
        try {
            check_discriminant_matrix(a);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Parse;  // sentinel: no error
    };
    CHECK(code_of(ZMat{{1, 1, 1}, {2, 2, 2}}) == ErrorCode::RankDeficient);
    CHECK(code_of(ZMat{{1, 0, 2}, {0, 1, 1}}) == ErrorCode::RowSpanMissingOnes);
    CHECK(code_of(ZMat{{1, 1, 1}, {0, 1, 2}}) == ErrorCode::Parse);
}

TEST_CASE("cycle validation rejects mixed dimensions") {
    TropicalCycle c;
    c.ambient_dim = 2;
    c.pure_dim = 1;
    c.items.push_back({Cone(2, {int_vector({1, 0}), int_vector({0, 1})}), Int(1)});
    CHECK_THROWS_AS(validate_cycle(c), Error);
    c.items = {{Cone(2, {int_vector({1, 0})}), Int(0)}};
    CHECK_THROWS_AS(validate_cycle(c), Error);
}
