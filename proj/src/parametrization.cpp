#include "tropimpl/parametrization.hpp"

#include "tropimpl/errors.hpp"

#include <algorithm>

namespace tropimpl {

namespace {

Rat rat_power(const Rat& base, long e) {
    Rat out = 1;
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
    out.canonicalize();
    return out;
}

}  // namespace

Rat LaurentPolynomial::evaluate(const RatVector& t) const {
    Rat sum = 0;
    for (const auto& term : terms) {
        Rat v = term.coeff;
        for (std::size_t i = 0; i < term.exponent.size(); ++i)
            if (term.exponent[i] != 0) v *= rat_power(t[i], term.exponent[i]);
        sum += v;
    }
    return sum;
}

std::optional<std::uint64_t> LaurentPolynomial::evaluate_mod(const ModVector& t, const PrimeField& field) const {
    std::uint64_t sum = 0;
    for (const auto& term : terms) {
        auto c = field.from_rat(term.coeff);
        if (!c) return std::nullopt;
        std::uint64_t v = *c;
        for (std::size_t i = 0; i < term.exponent.size(); ++i)
            if (term.exponent[i] != 0) v = field.mul(v, field.pow(t[i], term.exponent[i]));
        sum = field.add(sum, v);
    }
    return sum;
}

std::optional<ExtensionField::Elem> LaurentPolynomial::evaluate_ext(const ExtVector& t,
                                                                   const ExtensionField& field) const {
    auto sum = field.zero();
    for (const auto& term : terms) {
        auto c = field.base().from_rat(term.coeff);
        if (!c) return std::nullopt;
        auto v = field.embed(*c);
        for (std::size_t i = 0; i < term.exponent.size(); ++i)
            if (term.exponent[i] != 0) v = field.mul(v, field.pow(t[i], term.exponent[i]));
        sum = field.add(sum, v);
    }
    return sum;
}

long LaurentPolynomial::degree_span() const {
    long best = 0;
    for (const auto& term : terms) {
        long s = 0;
        for (auto e : term.exponent) s += e < 0 ? -e : e;
        best = std::max(best, s);
    }
    return best;
}

LatticePolytope LaurentPolynomial::newton_polytope(std::size_t d) const {
    std::vector<IntVector> pts;
    for (const auto& term : terms) {
        if (term.coeff == 0) continue;
        IntVector e(d);
        for (std::size_t i = 0; i < d; ++i) e[i] = term.exponent[i];
        pts.push_back(std::move(e));
    }
    if (pts.empty()) fail(ErrorCode::InvalidArgument, "Newton polytope of the zero polynomial");
    return convex_hull(pts);
}

void Parametrization::validate() const {
    if (d < 1 || n < 1) fail(ErrorCode::InvalidArgument, "parametrization needs d >= 1 and n >= 1");
    if (components.size() != n) fail(ErrorCode::DimensionMismatch, "component count differs from n");
    for (const auto& c : components) {
        bool nonzero = false;
        for (const auto& t : c.terms) {
            if (t.exponent.size() != d) fail(ErrorCode::DimensionMismatch, "exponent length differs from d");
            if (t.coeff != 0) nonzero = true;
        }
        if (!nonzero) fail(ErrorCode::InvalidArgument, "parametrization component is zero");
    }
}

RatVector Parametrization::evaluate(const RatVector& t) const {
    RatVector out;
    for (const auto& c : components) out.push_back(c.evaluate(t));
    return out;
}

std::vector<LatticePolytope> Parametrization::newton_polytopes() const {
    std::vector<LatticePolytope> out;
    for (const auto& c : components) out.push_back(c.newton_polytope(d));
    return out;
}

RatVector ParametrizationSource::random_parameter(Rng& rng, std::size_t d, long height) {
    RatVector t(d);
    for (auto& x : t) {
        x = Rat(rng.uniform(1, height), rng.uniform(1, height));
        x.canonicalize();
        if (rng.coin()) x = -x;
    }
    return t;
}

std::optional<RatVector> ParametrizationSource::draw(Rng& rng, long height) const {
    RatVector t = random_parameter(rng, f_.d, height);
    RatVector x = f_.evaluate(t);
    for (const auto& v : x)
        if (v == 0) return std::nullopt;
    return x;
}

std::optional<ModVector> ParametrizationSource::draw_mod(Rng& rng, const PrimeField& field) const {
    ModVector t(f_.d);
    for (auto& x : t) x = static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(field.p) - 1));
    ModVector out;
    for (const auto& c : f_.components) {
        auto v = c.evaluate_mod(t, field);
        if (!v || *v == 0) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::optional<ExtVector> ParametrizationSource::draw_ext(Rng& rng, const ExtensionField& field) const {
    ExtVector t(f_.d);
    for (auto& x : t) x = field.random_nonzero(rng);
    ExtVector out;
    for (const auto& c : f_.components) {
        auto v = c.evaluate_ext(t, field);
        if (!v || field.is_zero(*v)) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

Int ParametrizationSource::pullback_degree(const std::vector<IntVector>& exponents) const {
    Int best = 0;
    for (const auto& b : exponents) {
        Int s = 0;
        for (std::size_t j = 0; j < b.size(); ++j) s += abs(b[j]) * std::max(1L, f_.components[j].degree_span());
        if (s > best) best = s;
    }
    return 2 * best;
}

HornSource::HornSource(ZMat a, ZMat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.cols() != b_.cols()) fail(ErrorCode::DimensionMismatch, "A and B differ in column count");
    ZMat prod = a_ * b_.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != 0) fail(ErrorCode::InvalidArgument, "B is not in the kernel of A");
}

std::optional<RatVector> HornSource::draw(Rng& rng, long height) const {
    const std::size_t d = a_.rows(), n = a_.cols(), k = b_.rows();
    RatVector t = ParametrizationSource::random_parameter(rng, d, height);
    RatVector u(k);
    for (auto& x : u) {
        x = Rat(rng.uniform(-height, height), rng.uniform(1, height));
        x.canonicalize();
    }
    RatVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat lin = 0;
        for (std::size_t i = 0; i < k; ++i) lin += u[i] * b_(i, j);
        if (lin == 0) return std::nullopt;
        for (std::size_t i = 0; i < d; ++i) {
            long e = static_cast<long>(a_(i, j).get_si());
            if (e == 0) continue;
            Rat p = 1;
            Rat base = e < 0 ? Rat(1) / t[i] : t[i];
            for (long r = 0; r < (e < 0 ? -e : e); ++r) p *= base;
            lin *= p;
        }
        out[j] = lin;
    }
    return out;
}

std::optional<ModVector> HornSource::draw_mod(Rng& rng, const PrimeField& field) const {
    const std::size_t d = a_.rows(), n = a_.cols(), k = b_.rows();
    const auto top = static_cast<std::int64_t>(field.p) - 1;
    ModVector t(d), u(k);
    for (auto& x : t) x = static_cast<std::uint64_t>(rng.uniform(1, top));
    for (auto& x : u) x = static_cast<std::uint64_t>(rng.uniform(0, top));
    ModVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t lin = 0;
        for (std::size_t i = 0; i < k; ++i) lin = field.add(lin, field.mul(u[i], field.from_int(b_(i, j))));
        if (lin == 0) return std::nullopt;
        for (std::size_t i = 0; i < d; ++i) {
            long e = static_cast<long>(a_(i, j).get_si());
            if (e != 0) lin = field.mul(lin, field.pow(t[i], e));
        }
        out[j] = lin;
    }
    return out;
}

}  // namespace tropimpl

namespace tropimpl {

std::optional<ExtVector> HornSource::draw_ext(Rng& rng, const ExtensionField& field) const {
    const std::size_t d = a_.rows(), n = a_.cols(), k = b_.rows();
    ExtVector t(d), u(k);
    for (auto& x : t) x = field.random_nonzero(rng);
    for (auto& x : u) x = field.random(rng);
    ExtVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto lin = field.zero();
        for (std::size_t i = 0; i < k; ++i)
            lin = field.add(lin, field.mul(u[i], field.embed(field.base().from_int(b_(i, j)))));
        if (field.is_zero(lin)) return std::nullopt;
        for (std::size_t i = 0; i < d; ++i) {
            long e = static_cast<long>(a_(i, j).get_si());
            if (e != 0) lin = field.mul(lin, field.pow(t[i], e));
        }
        out[j] = lin;
    }
    return out;
}

Int HornSource::pullback_degree(const std::vector<IntVector>& exponents) const {
    // The torus part contributes a monomial factor; the degree in u is the total degree.
    Int best = 0;
    for (const auto& b : exponents) {
        Int s = 0;
        for (const auto& x : b) s += abs(x);
        if (s > best) best = s;
    }
    return best;
}

}  // namespace tropimpl
