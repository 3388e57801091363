// Acceptance run: one PASS/FAIL line per criterion with its runtime and budget.
// Exit status is nonzero when any criterion fails.

#include "properties.hpp"

#include "tropimpl/chow.hpp"
#include "tropimpl/cli.hpp"
#include "tropimpl/linalg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace tropimpl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

std::multiset<std::pair<IntVector, Int>> ray_weights(const TropicalCycle& c) {
    std::multiset<std::pair<IntVector, Int>> out;
    for (const auto& it : c.items) {
        if (it.cone.rays().size() != 1 || !it.cone.lineality().empty()) return {};
        out.insert({it.cone.rays()[0], it.weight});
    }
    return out;
}

std::set<IntVector> vertex_set(const LatticePolytope& p) {
    auto v = p.integer_vertices();
    return {v.begin(), v.end()};
}

std::string fv(const std::vector<std::size_t>& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
}

Parametrization curve_example() {
    Parametrization f;
    f.d = 1;
    f.n = 2;
    f.components.push_back({{{11, {2}}, {5, {3}}, {-1, {4}}}});
    f.components.push_back({{{11, {0}}, {11, {1}}, {7, {8}}}});
    return f;
}

Rat coefficient_of(const ImplicitPolynomial& f, const IntVector& e) {
    for (std::size_t k = 0; k < f.basis.exponents.size(); ++k)
        if (f.basis.exponents[k] == e) return Rat(f.coefficients[k]);
    return 0;
}

Outcome curve_pipeline() {
    Parametrization f = curve_example();
    TropicalCycle c = get_tropical_cycle(f.newton_polytopes());
    std::multiset<std::pair<IntVector, Int>> expected{{int_vector({1, 0}), Int(2)},
                                                       {int_vector({1, 0}), Int(2)},
                                                       {int_vector({0, 1}), Int(8)},
                                                       {int_vector({-1, -2}), Int(4)}};
    if (ray_weights(c) != expected) return {false, "tropical curve differs"};
    LatticePolytope p = reconstruct_polytope(c, OracleConfig{});
    if (vertex_set(p) != std::set<IntVector>{int_vector({0, 0}), int_vector({8, 0}), int_vector({0, 4})})
        return {false, "polytope differs"};
    const auto points = lattice_points(p).size();
    if (points != 25) return {false, std::to_string(points) + " lattice points"};
    ImplicitPolynomial F = implicit_equation(f, p, FieldSpec{}, 0);
    const std::pair<IntVector, long> spots[] = {{int_vector({8, 0}), 2401},
                                                {int_vector({0, 4}), 1},
                                                {int_vector({6, 1}), -1372},
                                                {int_vector({5, 1}), -422576}};
    for (const auto& [e, v] : spots)
        if (coefficient_of(F, e) != v) return {false, "coefficient of " + to_string(e) + " is " + coefficient_of(F, e).get_str()};
    if (coefficient_of(F, int_vector({0, 0})) != Rat(Int("1247565503668")))
        return {false, "constant term is " + coefficient_of(F, int_vector({0, 0})).get_str()};
    return {true, "4 rays, conv{(0,0),(8,0),(0,4)}, 25 points, F spot checks exact"};
}

Outcome graph_cycle() {
    TropicalCycle c = get_graph_cycle(curve_example().newton_polytopes());
    std::multiset<std::pair<IntVector, Int>> expected{{int_vector({1, 0, 0}), Int(2)},
                                                       {int_vector({-4, -8, -1}), Int(1)},
                                                       {int_vector({0, 1, 0}), Int(8)},
                                                       {int_vector({2, 0, 1}), Int(1)}};
    if (ray_weights(c) != expected) return {false, "graph cycle differs"};
    return {true, "rays and multiplicities exact"};
}

ZMat cube_matrix() {
    return ZMat{{1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}};
}

Outcome hyperdeterminant() {
    ZMat a = cube_matrix();
    TropicalCycle c = get_trop_a_disc(a);
    if (c.items.size() != 32) return {false, std::to_string(c.items.size()) + " cones"};
    for (const auto& it : c.items)
        if (it.cone.dim() != 7) return {false, "cone of dimension " + std::to_string(it.cone.dim())};
    LatticePolytope p = reconstruct_polytope(c, OracleConfig{});
    if (f_vector(p) != std::vector<std::size_t>{6, 14, 16, 8}) return {false, "f-vector " + fv(f_vector(p))};
    if (lattice_points(p).size() != 12) return {false, "lattice point count differs"};
    ImplicitPolynomial F = implicit_equation(HornSource(a, gale_dual(a)), p, FieldSpec{}, 0);
    // Variables x000..x111 in column order; printed terms of the hyperdeterminant.
    const std::map<IntVector, long> printed{
        {int_vector({2, 0, 0, 0, 0, 0, 0, 2}), 1},  {int_vector({0, 2, 0, 0, 0, 0, 2, 0}), 1},
        {int_vector({0, 0, 0, 2, 2, 0, 0, 0}), 1},  {int_vector({0, 0, 2, 0, 0, 2, 0, 0}), 1},
        {int_vector({1, 0, 0, 1, 0, 1, 1, 0}), 4},  {int_vector({0, 1, 1, 0, 1, 0, 0, 1}), 4},
        {int_vector({1, 1, 0, 0, 0, 0, 1, 1}), -2}, {int_vector({1, 0, 1, 0, 0, 1, 0, 1}), -2},
        {int_vector({1, 0, 0, 1, 1, 0, 0, 1}), -2}, {int_vector({0, 1, 1, 0, 0, 1, 1, 0}), -2},
        {int_vector({0, 1, 0, 1, 1, 0, 1, 0}), -2}, {int_vector({0, 0, 1, 1, 1, 1, 0, 0}), -2}};
    std::optional<Rat> ratio;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < F.coefficients.size(); ++k) {
        if (F.coefficients[k] == 0) continue;
        ++nonzero;
        auto it = printed.find(F.basis.exponents[k]);
        if (it == printed.end()) return {false, "unexpected monomial " + to_string(F.basis.exponents[k])};
        Rat q = Rat(F.coefficients[k]) / it->second;
        if (!ratio) ratio = q;
        if (q != *ratio) return {false, "coefficient ratio differs at " + to_string(it->first)};
    }
    if (nonzero != printed.size()) return {false, std::to_string(nonzero) + " nonzero terms"};
    return {true, "32 seven-dimensional cones, f-vector (6,14,16,8), 12 points, 12-term form proportional"};
}

Outcome large_entries() {
    ZMat a{{1, 1, 1, 1, 1, 1}, {2, 3, 5, 7, 11, 13}, {13, 8, 5, 3, 2, 1}};
    LatticePolytope p = reconstruct_polytope(get_trop_a_disc(a), OracleConfig{});
    if (f_vector(p) != std::vector<std::size_t>{12, 18, 8}) return {false, "f-vector " + fv(f_vector(p))};
    const std::size_t points = lattice_points(p).size();
    if (points != 2295) return {false, std::to_string(points) + " lattice points"};
    HornSource source(a, gale_dual(a));
    FieldSpec field = FieldSpec::parse("gf:101");
    ImplicitPolynomial F = implicit_equation(source, p, field, 0);
    if (F.coefficients.size() != 2295) return {false, "coefficient count differs"};
    const PrimeField gf(101);
    auto fresh = sample_from_mod(source, 20, gf, 20240601, streams::verification);
    for (const auto& x : fresh)
        if (F.evaluate_mod(x, gf) != 0) return {false, "does not vanish on a fresh sample"};
    return {true, "f-vector (12,18,8), 2295 points, GF(101) solve (support " + std::to_string(F.support_size()) +
                      ") vanishes on 20 fresh samples"};
}

Outcome stretch() {
    ZMat a{{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}, {2, 3, 5, 7, 11, 13, 17, 19}, {19, 17, 13, 11, 7, 5, 3, 2}};
    LatticePolytope p = reconstruct_polytope(get_trop_a_disc(a), OracleConfig{});
    if (f_vector(p) != std::vector<std::size_t>{45, 92, 63, 16}) return {false, "f-vector " + fv(f_vector(p))};
    const std::size_t points = lattice_points(p).size();
    if (points != 43400) return {false, std::to_string(points) + " lattice points"};
    return {true, "f-vector (45,92,63,16), 43400 points, no solve"};
}

Outcome triangles() {
    MfpConfig cfg;
    cfg.n = 3;
    cfg.vertex_counts = {3, 3, 3};
    cfg.fixed = {{{int_vector({898, -614}), int_vector({-570, 817}), int_vector({892, -594})},
                  {int_vector({-603, -481}), int_vector({-623, -127}), int_vector({-36, 732})},
                  {int_vector({-548, -864}), int_vector({-151, 873}), int_vector({800, -861})}}};
    std::ostringstream log;
    run_mfp_search(cfg, 0, log);
    Json line = Json::parse(log.str().substr(0, log.str().find('\n')));
    if (!line.contains("f_vector")) return {false, "trial failed: " + line.dump()};
    auto f = line.at("f_vector").get<std::vector<std::size_t>>();
    if (f != std::vector<std::size_t>{25, 49, 26}) return {false, "f-vector " + fv(f)};
    return {true, "f-vector (25,49,26) recorded"};
}

Outcome chow_pipeline() {
    Parametrization f;
    f.d = 1;
    f.n = 3;
    f.components.push_back({{{1, {3}}, {-1, {1}}}});
    f.components.push_back({{{1, {3}}, {1, {2}}}});
    f.components.push_back({{{1, {4}}, {-1, {3}}}});
    TropicalCycle c;
    c.ambient_dim = 3;
    c.pure_dim = 1;
    for (auto r : {int_vector({1, 2, 3}), int_vector({1, 1, 0}), int_vector({1, 0, 1}), int_vector({-3, -3, -4})})
        c.items.push_back({Cone(3, {r}), Int(1)});
    TropicalCycle h = homogenize(c);
    TropicalCycle fan = chow_fan(h, 1);
    if (fan.items.size() != 16) return {false, std::to_string(fan.items.size()) + " cones in the Chow fan"};
    for (const auto& it : fan.items)
        if (it.cone.dim() != 2 + 1) return {false, "Chow fan cone of wrong dimension"};

    ShiftSearchOptions options;
    options.collect_all = true;
    ChowPolytopeResult r = chow_polytope(h, 1, f, OracleConfig{}, 0, options);
    const std::set<IntVector> translated{
        int_vector({0, 2, 3, 1}), int_vector({0, 3, 1, 2}), int_vector({0, 4, 1, 1}), int_vector({1, 0, 4, 1}),
        int_vector({1, 2, 3, 0}), int_vector({1, 3, 0, 2}), int_vector({1, 4, 0, 1}), int_vector({1, 4, 1, 0}),
        int_vector({2, 0, 1, 3}), int_vector({2, 0, 4, 0}), int_vector({2, 4, 0, 0}), int_vector({3, 0, 0, 3})};
    if (vertex_set(r.translated) != translated) return {false, "translated polytope differs"};
    if (r.successful_shifts != std::vector<IntVector>{int_vector({1, 0, 0, 1})}) return {false, "shift search result differs"};
    const std::set<IntVector> final_vertices{
        int_vector({1, 2, 3, 2}), int_vector({1, 3, 1, 3}), int_vector({1, 4, 1, 2}), int_vector({2, 0, 4, 2}),
        int_vector({2, 2, 3, 1}), int_vector({2, 3, 0, 3}), int_vector({2, 4, 0, 2}), int_vector({2, 4, 1, 1}),
        int_vector({3, 0, 1, 4}), int_vector({3, 0, 4, 1}), int_vector({3, 4, 0, 1}), int_vector({4, 0, 0, 4})};
    if (vertex_set(r.polytope) != final_vertices) return {false, "Chow polytope differs"};
    if (!r.chow_form) return {false, "no Chow form"};

    const std::pair<const char*, long> printed[] = {
        {"p03^4", 1},          {"p01^3*p13", -1},         {"p01^2*p02*p13", -3},     {"p01*p02^2*p13", -3},
        {"p02^3*p13", -1},     {"p01^2*p03*p13", 3},      {"p01*p02*p03*p13", 9},    {"p02^2*p03*p13", 6},
        {"p01*p03^2*p13", 1},  {"p02*p03^2*p13", -5},     {"p01^2*p12*p13", 2},      {"p01*p02*p12*p13", 1},
        {"p01^2*p13^2", 2},    {"p01*p02*p13^2", -2},     {"p02^2*p13^2", 4},        {"p01*p03*p13^2", 1},
        {"p01*p12*p13^2", -4}, {"p01^3*p23", -1},         {"p01^2*p02*p23", -3},     {"p01*p02^2*p23", -3},
        {"p02^3*p23", -1},     {"p01^2*p03*p23", 4},      {"p01*p02*p03*p23", 11},   {"p02^2*p03*p23", 7},
        {"p01*p03^2*p23", -2}, {"p02*p03^2*p23", -10},    {"p03^3*p23", 2},          {"p01^2*p12*p23", 2},
        {"p01*p02*p12*p23", 1}, {"p01^2*p13*p23", 9},     {"p01*p02*p13*p23", -1},   {"p02^2*p13*p23", 6},
        {"p01*p03*p13*p23", 2}, {"p02*p03*p13*p23", -2},  {"p01*p12*p13*p23", -6},   {"p01*p13^2*p23", 2},
        {"p01^2*p23^2", 9},    {"p01*p02*p23^2", 2},      {"p02^2*p23^2", 2},        {"p01*p03*p23^2", -4},
        {"p01*p12*p23^2", -2}};
    std::map<PluckerMonomial, Rat> expected;
    for (const auto& [m, v] : printed) expected[parse_plucker_monomial(m)] = v;
    std::map<PluckerMonomial, Rat> got;
    for (const auto& [m, v] : r.chow_form->terms)
        if (v != 0) got[m] = v;
    if (got != expected) {
        for (const auto& [m, v] : expected)
            if (!got.count(m) || got[m] != v) return {false, "coefficient of " + to_string(m) + " differs"};
        return {false, "Chow form has extra terms"};
    }
    return {true, "16 cones, 12 translated vertices, unique shift (1,0,0,1), 12 vertices, 41-term form exact"};
}

Outcome property_suites() {
    struct Named {
        const char* name;
        props::SuiteResult result;
    };
    const Named suites[] = {{"sylvester", props::sylvester_suite(20, 0)},
                            {"mixed volume", props::mixed_volume_suite(50, 0)},
                            {"homogeneity", props::homogeneity_suite(10, 0)},
                            {"vertex oracle", props::vertex_oracle_suite(100, 0)},
                            {"kernel consistency", props::kernel_consistency_suite(100, 0)}};
    std::string detail;
    bool pass = true;
    for (const auto& s : suites) {
        detail += std::string(detail.empty() ? "" : "; ") + s.name + " " + std::to_string(s.result.cases - s.result.failures) +
                  "/" + std::to_string(s.result.cases);
        if (!s.result.passed()) {
            pass = false;
            detail += " [" + s.result.first_failure + "]";
        }
    }
    return {pass, detail};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "curve pipeline", 10, curve_pipeline},
        {2, "graph cycle", 10, graph_cycle},
        {3, "hyperdeterminant", 120, hyperdeterminant},
        {4, "3x6 A-discriminant over GF(101)", 1800, large_entries},
        {5, "4x8 A-discriminant polytope", 7200, stretch},
        {6, "mixed fiber triangles", 300, triangles},
        {7, "Chow pipeline", 300, chow_pipeline},
        {8, "property suites", 600, property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (o.pass && seconds > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over budget";
        }
        if (!o.pass) ++failures;
        std::printf("%s criterion %d (%s): %s [%.2f s, budget %.0f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), seconds, c.budget_seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
