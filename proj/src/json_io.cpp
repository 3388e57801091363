#include "tropimpl/json_io.hpp"

#include "tropimpl/errors.hpp"

#include <limits>

namespace tropimpl {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

bool fits_int64(const Int& x) {
    return x >= Int(std::to_string(std::numeric_limits<long long>::min())) &&
           x <= Int(std::to_string(std::numeric_limits<long long>::max()));
}

}  // namespace

Json rat_to_json(const Rat& x) { return rat_to_string(x); }

Json int_to_json(const Int& x) {
    if (fits_int64(x)) return static_cast<long long>(std::stoll(x.get_str()));
    return x.get_str() + "/1";
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<unsigned long long>())));
        return Rat(Int(std::to_string(j.get<long long>())));
    }
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("expected an integer or a \"num/den\" string");
}

Int int_from_json(const Json& j) {
    Rat r = rat_from_json(j);
    if (r.get_den() != 1) bad("expected an integer, got " + rat_to_string(r));
    return r.get_num();
}

Json vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_den() == 1 ? int_to_json(x.get_num()) : rat_to_json(x));
    return out;
}

IntVector int_vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array");
    IntVector out;
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

RatVector rat_vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array");
    RatVector out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

Json matrix_to_json(const ZMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
    return Json{{"rows", rows}};
}

ZMat int_matrix_from_json(const Json& j) {
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) bad("rows must be an array");
    std::vector<IntVector> list;
    for (const auto& r : rows) list.push_back(int_vector_from_json(r));
    const std::size_t cols = list.empty() ? 0 : list[0].size();
    for (const auto& r : list)
        if (r.size() != cols) bad("matrix rows differ in length");
    return ZMat::from_rows(list, cols);
}

Json polytope_to_json(const LatticePolytope& p, bool with_facets) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
    Json out{{"vertices", verts}};
    if (with_facets) {
        Json facets = Json::array();
        for (const auto& f : p.facets())
            facets.push_back(Json{{"normal", vector_to_json(f.normal)}, {"offset", rat_to_json(f.offset)}});
        out["facets"] = facets;
    }
    return out;
}

LatticePolytope polytope_from_json(const Json& j) {
    const Json& verts = field(j, "vertices");
    if (!verts.is_array() || verts.empty()) bad("polytope needs a nonempty vertex list");
    std::vector<RatVector> pts;
    for (const auto& v : verts) pts.push_back(rat_vector_from_json(v));
    for (const auto& v : pts)
        if (v.size() != pts[0].size()) bad("polytope vertices differ in length");
    return convex_hull(pts);
}

Json cone_to_json(const Cone& c) {
    Json rays = Json::array(), lin = Json::array();
    for (const auto& r : c.rays()) rays.push_back(vector_to_json(r));
    for (const auto& l : c.lineality()) lin.push_back(vector_to_json(l));
    return Json{{"rays", rays}, {"lineality", lin}};
}

Cone cone_from_json(const Json& j, std::size_t ambient_dim) {
    std::vector<IntVector> rays, lin;
    for (const auto& r : field(j, "rays")) rays.push_back(int_vector_from_json(r));
    if (j.contains("lineality"))
        for (const auto& l : j.at("lineality")) lin.push_back(int_vector_from_json(l));
    for (const auto& v : rays)
        if (v.size() != ambient_dim) bad("ray length differs from the ambient dimension");
    for (const auto& v : lin)
        if (v.size() != ambient_dim) bad("lineality length differs from the ambient dimension");
    return Cone(ambient_dim, rays, lin);
}

Json cycle_to_json(const TropicalCycle& c) {
    Json items = Json::array();
    for (const auto& it : c.items) items.push_back(Json{{"cone", cone_to_json(it.cone)}, {"weight", int_to_json(it.weight)}});
    return Json{{"ambient_dim", c.ambient_dim}, {"pure_dim", c.pure_dim}, {"items", items}};
}

TropicalCycle cycle_from_json(const Json& j) {
    TropicalCycle c;
    c.ambient_dim = size_from_json(field(j, "ambient_dim"), "ambient_dim");
    c.pure_dim = size_from_json(field(j, "pure_dim"), "pure_dim");
    const Json& items = field(j, "items");
    if (!items.is_array()) bad("items must be an array");
    for (const auto& it : items) c.items.push_back({cone_from_json(field(it, "cone"), c.ambient_dim), int_from_json(field(it, "weight"))});
    validate_cycle(c);
    return c;
}

Json parametrization_to_json(const Parametrization& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) {
        Json terms = Json::array();
        for (const auto& t : c.terms) {
            Json exp = Json::array();
            for (auto e : t.exponent) exp.push_back(e);
            terms.push_back(Json{{"coeff", rat_to_json(t.coeff)}, {"exp", exp}});
        }
        comps.push_back(Json{{"terms", terms}});
    }
    return Json{{"d", f.d}, {"n", f.n}, {"components", comps}};
}

Parametrization parametrization_from_json(const Json& j) {
    Parametrization f;
    f.d = size_from_json(field(j, "d"), "d");
    f.n = size_from_json(field(j, "n"), "n");
    const Json& comps = field(j, "components");
    if (!comps.is_array()) bad("components must be an array");
    for (const auto& c : comps) {
        LaurentPolynomial p;
        for (const auto& t : field(c, "terms")) {
            LaurentTerm term;
            term.coeff = rat_from_json(field(t, "coeff"));
            const Json& exp = field(t, "exp");
            if (!exp.is_array()) bad("exp must be an array");
            for (const auto& e : exp) {
                if (!e.is_number_integer()) bad("exponents must be integers");
                term.exponent.push_back(e.get<long>());
            }
            p.terms.push_back(std::move(term));
        }
        f.components.push_back(std::move(p));
    }
    f.validate();
    return f;
}

Json polynomial_to_json(const ImplicitPolynomial& f) {
    Json vars = Json::array();
    for (std::size_t i = 0; i < f.basis.ambient_dim; ++i) vars.push_back("x" + std::to_string(i + 1));
    Json terms = Json::array();
    for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
        Json coeff = f.modulus ? int_to_json(f.coefficients[k]) : rat_to_json(Rat(f.coefficients[k]));
        terms.push_back(Json{{"coeff", coeff}, {"exp", vector_to_json(f.basis.exponents[k])}});
    }
    Json out{{"vars", vars}, {"terms", terms}};
    if (f.modulus) out["modulus"] = *f.modulus;
    return out;
}

ImplicitPolynomial polynomial_from_json(const Json& j) {
    ImplicitPolynomial f;
    const Json& vars = field(j, "vars");
    if (!vars.is_array()) bad("vars must be an array");
    f.basis.ambient_dim = vars.size();
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_number_unsigned()) bad("modulus must be a positive integer");
        f.modulus = j.at("modulus").get<std::uint64_t>();
    }
    for (const auto& t : field(j, "terms")) {
        IntVector e = int_vector_from_json(field(t, "exp"));
        if (e.size() != f.basis.ambient_dim) bad("exponent length differs from the variable count");
        f.basis.exponents.push_back(std::move(e));
        f.coefficients.push_back(int_from_json(field(t, "coeff")));
    }
    return f;
}

Json plucker_to_json(const PluckerPoly& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms) {
        Json factors = Json::array();
        for (const auto& t : m.factors) factors.push_back(t);
        Json coeff = f.modulus ? int_to_json(c.get_num()) : rat_to_json(c);
        terms.push_back(Json{{"factors", factors}, {"coeff", coeff}});
    }
    Json out{{"d", f.d}, {"n", f.n}, {"terms", terms}};
    if (f.modulus) out["modulus"] = *f.modulus;
    return out;
}

PluckerPoly plucker_from_json(const Json& j) {
    PluckerPoly f;
    f.d = size_from_json(field(j, "d"), "d");
    f.n = size_from_json(field(j, "n"), "n");
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_number_unsigned()) bad("modulus must be a positive integer");
        f.modulus = j.at("modulus").get<std::uint64_t>();
    }
    for (const auto& t : field(j, "terms")) {
        PluckerMonomial m;
        for (const auto& factor : field(t, "factors")) {
            IndexTuple tuple;
            for (const auto& i : factor) tuple.push_back(size_from_json(i, "index"));
            if (tuple.size() != f.d + 1 || !std::is_sorted(tuple.begin(), tuple.end()) ||
                std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end() || tuple.back() > f.n)
                bad("Plücker factor must be a strictly increasing (d+1)-tuple in 0..n");
            m.factors.push_back(std::move(tuple));
        }
        std::sort(m.factors.begin(), m.factors.end());
        f.terms.emplace_back(std::move(m), rat_from_json(field(t, "coeff")));
    }
    return f;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorCode::Parse, e.what());
    }
}

}  // namespace tropimpl
