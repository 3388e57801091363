#include "tropimpl/chow.hpp"

#include "tropimpl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace tropimpl {

std::vector<IndexTuple> index_tuples(std::size_t m, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > m) return out;
    IndexTuple sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        out.push_back(sel);
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return out;
}

IntVector PluckerMonomial::weight(std::size_t n) const {
    IntVector w(n + 1, Int(0));
    for (const auto& f : factors)
        for (auto i : f) w[i] += 1;
    return w;
}

std::string to_string(const PluckerMonomial& m) {
    std::string out;
    std::size_t i = 0;
    while (i < m.factors.size()) {
        std::size_t j = i;
        while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
        if (!out.empty()) out += "*";
        out += "p";
        for (auto x : m.factors[i]) out += std::to_string(x);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "1" : out;
}

PluckerMonomial parse_plucker_monomial(const std::string& text) {
    PluckerMonomial m;
    std::size_t i = 0;
    auto bad = [&]() { fail(ErrorCode::Parse, "bad Plücker monomial '" + text + "'"); };
    while (i < text.size()) {
        if (text[i] == '*' || text[i] == ' ') {
            ++i;
            continue;
        }
        if (text[i] != 'p') bad();
        ++i;
        IndexTuple t;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            t.push_back(static_cast<std::size_t>(text[i++] - '0'));
        if (t.empty() || !std::is_sorted(t.begin(), t.end()) ||
            std::adjacent_find(t.begin(), t.end()) != t.end())
            bad();
        std::size_t power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) bad();
            power = std::stoul(text.substr(start, i - start));
        }
        for (std::size_t k = 0; k < power; ++k) m.factors.push_back(t);
    }
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

namespace {

std::size_t tuple_position(const std::vector<IndexTuple>& tuples, const IndexTuple& t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) fail(ErrorCode::InvalidArgument, "index tuple out of range");
    return static_cast<std::size_t>(it - tuples.begin());
}

IntVector exponent_of(const PluckerMonomial& m, const std::vector<IndexTuple>& tuples) {
    IntVector e(tuples.size(), Int(0));
    for (const auto& f : m.factors) e[tuple_position(tuples, f)] += 1;
    return e;
}

// Sign of the permutation listing I then its complement.
int shuffle_sign(const IndexTuple& tuple, std::size_t m) {
    std::vector<std::size_t> perm = tuple;
    for (std::size_t i = 0; i < m; ++i)
        if (!std::binary_search(tuple.begin(), tuple.end(), i)) perm.push_back(i);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::uint64_t det_mod(std::vector<ModVector> a, const PrimeField& f) {
    const std::size_t k = a.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c][c]);
        const std::uint64_t inv = f.inv(a[c][c]);
        for (std::size_t r = c + 1; r < k; ++r) {
            const std::uint64_t factor = f.mul(a[r][c], inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < k; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
        }
    }
    return det;
}

ExtensionField::Elem det_ext(std::vector<ExtVector> a, const ExtensionField& f) {
    const std::size_t k = a.size();
    auto det = f.one();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && f.is_zero(a[piv][c])) ++piv;
        if (piv == k) return f.zero();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c][c]);
        const auto inv = f.inv(a[c][c]);
        for (std::size_t r = c + 1; r < k; ++r) {
            const auto factor = f.mul(a[r][c], inv);
            if (f.is_zero(factor)) continue;
            for (std::size_t j = c; j < k; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
        }
    }
    return det;
}

}  // namespace

Rat PluckerPoly::evaluate(const RatVector& plucker) const {
    const auto tuples = index_tuples(n + 1, d + 1);
    Rat sum = 0;
    for (const auto& [m, c] : terms) {
        Rat v = c;
        for (const auto& f : m.factors) v *= plucker[tuple_position(tuples, f)];
        sum += v;
    }
    return sum;
}

std::optional<Rat> PluckerPoly::coefficient(const PluckerMonomial& m) const {
    for (const auto& [mm, c] : terms)
        if (mm == m) return c;
    return std::nullopt;
}

LatticePolytope PluckerPoly::weight_polytope() const {
    std::vector<IntVector> pts;
    for (const auto& [m, c] : terms)
        if (c != 0) pts.push_back(m.weight(n));
    if (pts.empty()) fail(ErrorCode::InvalidArgument, "weight polytope of the zero form");
    return convex_hull(pts);
}

TropicalCycle chow_fan(const TropicalCycle& c, std::size_t d) {
    if (c.ambient_dim < 2) fail(ErrorCode::DimensionMismatch, "Chow fan needs ambient dimension at least 2");
    const std::size_t n = c.ambient_dim - 1;
    if (d >= n) fail(ErrorCode::DimensionMismatch, "variety dimension must be below n");
    if (c.pure_dim != d + 1)
        fail(ErrorCode::DimensionMismatch, "cycle must have pure dimension d + 1 including the lineality");
    TropicalCycle sum = stable_sum(c, standard_linear_cycle(n - d - 1, n, true));
    sum.pure_dim = n;
    // The stable sum is the outer normal fan; the vertex oracle works with inner normals.
    return negated(sum);
}

std::vector<PluckerMonomial> standard_monomials_of_weight(const IntVector& u, std::size_t d, std::size_t n) {
    if (u.size() != n + 1) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
    Int total = 0;
    for (const auto& x : u) {
        if (x < 0) return {};
        total += x;
    }
    if (total % (d + 1) != 0) return {};
    const std::size_t degree = static_cast<std::size_t>(Int(total / (d + 1)).get_ui());
    const auto tuples = index_tuples(n + 1, d + 1);
    std::vector<PluckerMonomial> out;
    std::vector<long> remaining(n + 1);
    for (std::size_t i = 0; i <= n; ++i) remaining[i] = u[i].get_si();
    std::vector<IndexTuple> current;
    auto fits = [&](const IndexTuple& t) {
        for (auto i : t)
            if (remaining[i] <= 0) return false;
        return true;
    };
    auto above = [&](const IndexTuple& prev, const IndexTuple& t) {
        for (std::size_t k = 0; k < t.size(); ++k)
            if (prev[k] > t[k]) return false;
        return true;
    };
    // Tuples are chosen in lexicographic order, each componentwise >= the previous.
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (current.size() == degree) {
            out.push_back({current});
            return;
        }
        for (std::size_t k = from; k < tuples.size(); ++k) {
            const auto& t = tuples[k];
            if (!current.empty() && !above(current.back(), t)) continue;
            if (!fits(t)) continue;
            for (auto i : t) --remaining[i];
            current.push_back(t);
            extend(k);
            current.pop_back();
            for (auto i : t) ++remaining[i];
        }
    };
    extend(0);
    return out;
}

ChowSource::ChowSource(Parametrization f, std::size_t d, std::size_t n) : f_(std::move(f)), d_(d), n_(n) {
    f_.validate();
    if (f_.n != n) fail(ErrorCode::DimensionMismatch, "parametrization target must have n coordinates");
    if (d >= n) fail(ErrorCode::DimensionMismatch, "variety dimension must be below n");
    tuples_ = index_tuples(n + 1, d + 1);
}

RatVector ChowSource::plucker_of_span(const QMat& span) const {
    auto kernel = kernel_basis(span);
    if (kernel.size() != d_ + 1) fail(ErrorCode::InvalidArgument, "spanning matrix is rank deficient");
    RatVector out;
    for (const auto& cols : tuples_) {
        QMat sub(d_ + 1, d_ + 1);
        for (std::size_t r = 0; r <= d_; ++r)
            for (std::size_t c = 0; c <= d_; ++c) sub(r, c) = Rat(kernel[r][cols[c]]);
        out.push_back(determinant(sub));
    }
    return out;
}

std::optional<RatVector> ChowSource::draw(Rng& rng, long height) const {
    const std::size_t planes = n_ - d_ - 1;
    RatVector t = ParametrizationSource::random_parameter(rng, f_.d, height);
    RatVector x = f_.evaluate(t);
    QMat span(planes + 1, n_ + 1);
    for (std::size_t r = 0; r < planes; ++r)
        for (std::size_t c = 0; c <= n_; ++c) span(r, c) = Rat(rng.uniform(-height, height));
    span(planes, 0) = 1;
    for (std::size_t c = 0; c < n_; ++c) span(planes, c + 1) = x[c];
    if (rank(span) != planes + 1) return std::nullopt;
    return plucker_of_span(span);
}

std::optional<ModVector> ChowSource::draw_mod(Rng& rng, const PrimeField& field) const {
    const std::size_t planes = n_ - d_ - 1;
    const auto top = static_cast<std::int64_t>(field.p) - 1;
    ModVector t(f_.d);
    for (auto& v : t) v = static_cast<std::uint64_t>(rng.uniform(1, top));
    ModMatrix span(planes + 1, ModVector(n_ + 1));
    for (std::size_t r = 0; r < planes; ++r)
        for (auto& v : span[r]) v = static_cast<std::uint64_t>(rng.uniform(0, top));
    span[planes][0] = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        auto v = f_.components[c].evaluate_mod(t, field);
        if (!v) return std::nullopt;
        span[planes][c + 1] = *v;
    }
    auto kernel = kernel_basis(span, n_ + 1, field);
    if (kernel.size() != d_ + 1) return std::nullopt;
    ModVector out;
    for (const auto& cols : tuples_) {
        std::vector<ModVector> sub(d_ + 1, ModVector(d_ + 1));
        for (std::size_t r = 0; r <= d_; ++r)
            for (std::size_t c = 0; c <= d_; ++c) sub[r][c] = kernel[r][cols[c]];
        out.push_back(det_mod(sub, field));
    }
    return out;
}

std::optional<ExtVector> ChowSource::draw_ext(Rng& rng, const ExtensionField& field) const {
    const std::size_t planes = n_ - d_ - 1;
    ExtVector t(f_.d);
    for (auto& v : t) v = field.random_nonzero(rng);
    std::vector<ExtVector> span(planes + 1, ExtVector(n_ + 1));
    for (std::size_t r = 0; r < planes; ++r)
        for (auto& v : span[r]) v = field.random(rng);
    span[planes][0] = field.one();
    for (std::size_t c = 0; c < n_; ++c) {
        auto v = f_.components[c].evaluate_ext(t, field);
        if (!v) return std::nullopt;
        span[planes][c + 1] = *v;
    }
    auto kernel = kernel_basis(span, n_ + 1, field);
    if (kernel.size() != d_ + 1) return std::nullopt;
    ExtVector out;
    for (const auto& cols : tuples_) {
        std::vector<ExtVector> sub(d_ + 1, ExtVector(d_ + 1));
        for (std::size_t r = 0; r <= d_; ++r)
            for (std::size_t c = 0; c <= d_; ++c) sub[r][c] = kernel[r][cols[c]];
        out.push_back(det_ext(sub, field));
    }
    return out;
}

Int ChowSource::pullback_degree(const std::vector<IntVector>& exponents) const {
    long span = 1;
    for (const auto& c : f_.components) span = std::max(span, c.degree_span());
    Int best = 0;
    for (const auto& e : exponents) {
        Int s = 0;
        for (const auto& x : e) s += abs(x);
        if (s > best) best = s;
    }
    // Plücker coordinates are linear in each spanning vector; x carries the t-degree.
    return best * (2 * span + n_ - d_);
}

RatVector chow_sample(const Parametrization& f, std::size_t d, std::size_t n, std::uint64_t seed,
                      std::uint64_t counter) {
    ChowSource source(f, d, n);
    Rng rng(derive_seed(seed, streams::chow, counter));
    for (int attempt = 0; attempt < 1000; ++attempt)
        if (auto p = source.draw(rng, 16)) return *p;
    fail(ErrorCode::SamplingExhausted, "no generic Chow sample found");
}

PluckerPoly chow_form(const Parametrization& f, const LatticePolytope& chow_polytope, std::size_t d, std::size_t n,
                      std::uint64_t seed, const ChowFormOptions& options) {
    if (chow_polytope.ambient_dim() != n + 1)
        fail(ErrorCode::DimensionMismatch, "Chow polytope must live in R^{n+1}");
    ChowSource source(f, d, n);
    const auto tuples = index_tuples(n + 1, d + 1);
    std::map<IntVector, PluckerMonomial> by_exponent;
    for (const auto& u : lattice_points(chow_polytope))
        for (auto& m : standard_monomials_of_weight(u, d, n)) by_exponent.emplace(exponent_of(m, tuples), m);
    MonomialBasis basis;
    basis.ambient_dim = tuples.size();
    for (const auto& [e, m] : by_exponent) basis.exponents.push_back(e);
    auto solved = interpolate_on_basis(source, basis, options.field, seed, options.sampling);
    PluckerPoly out;
    out.d = d;
    out.n = n;
    out.modulus = solved.modulus;
    for (std::size_t k = 0; k < basis.exponents.size(); ++k)
        if (solved.coefficients[k] != 0)
            out.terms.emplace_back(by_exponent.at(basis.exponents[k]), Rat(solved.coefficients[k]));
    return out;
}

namespace {

// Compositions of total into parts, largest first coordinate first.
void compositions(long total, std::size_t parts, IntVector& current, std::vector<IntVector>& out) {
    if (current.size() + 1 == parts) {
        current.push_back(Int(total));
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (long first = total; first >= 0; --first) {
        current.push_back(Int(first));
        compositions(total - first, parts, current, out);
        current.pop_back();
    }
}

}  // namespace

ChowPolytopeResult chow_polytope(const TropicalCycle& c, std::size_t d, const Parametrization& f,
                                 const OracleConfig& cfg, std::uint64_t seed, const ShiftSearchOptions& options) {
    const std::size_t n = c.ambient_dim - 1;
    ChowPolytopeResult result;
    result.translated = reconstruct_polytope(chow_fan(c, d), cfg);
    const auto verts = result.translated.integer_vertices();
    Int base_sum = 0;
    for (const auto& x : verts.front()) base_sum += x;
    for (const auto& v : verts) {
        Int s = 0;
        for (const auto& x : v) s += x;
        if (s != base_sum) fail(ErrorCode::InvalidArgument, "translated Chow polytope is not homogeneous");
    }
    std::vector<std::size_t> degrees;
    if (options.degree_hint) {
        degrees.push_back(*options.degree_hint);
    } else {
        for (std::size_t deg = 1; deg <= options.max_degree; ++deg) degrees.push_back(deg);
    }
    for (auto deg : degrees) {
        const Int delta = Int(static_cast<unsigned long>((d + 1) * deg)) - base_sum;
        if (delta < 0) continue;
        std::vector<IntVector> shifts;
        IntVector current;
        compositions(delta.get_si(), n + 1, current, shifts);
        for (const auto& s : shifts) {
            LatticePolytope candidate = result.translated.translated(to_rat(s));
            try {
                PluckerPoly form = chow_form(f, candidate, d, n, seed, options.form);
                result.successful_shifts.push_back(s);
                if (!result.chow_form) {
                    result.shift = s;
                    result.polytope = candidate;
                    result.degree = deg;
                    result.chow_form = std::move(form);
                }
                if (!options.collect_all) return result;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::KernelEmpty && e.code() != ErrorCode::KernelTooBig &&
                    e.code() != ErrorCode::VerificationFailed)
                    throw;
            }
        }
        if (result.chow_form) return result;
    }
    fail(ErrorCode::ShiftSearchFailed, "no translation of the Chow polytope admits a Chow form");
}

Rat XPolynomial::evaluate(const RatVector& x) const {
    Rat sum = 0;
    for (const auto& [e, c] : terms) {
        Rat v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (long k = 0; k < e[i].get_si(); ++k) v *= x[i];
        sum += v;
    }
    return sum;
}

namespace {

using XPoly = std::map<IntVector, Rat>;

XPoly multiply(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat v = ca * cb;
            auto& slot = out[add(ea, eb)];
            slot += v;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

std::vector<XPolynomial> chow_to_equations(const PluckerPoly& form, std::size_t d, std::size_t n,
                                           const std::vector<std::vector<RatVector>>& alpha_tuples) {
    const std::size_t planes = n - d - 1;
    const std::size_t m = n + 1;
    const auto tuples = index_tuples(m, d + 1);
    std::vector<XPolynomial> out;
    for (const auto& alphas : alpha_tuples) {
        if (alphas.size() != planes) fail(ErrorCode::DimensionMismatch, "need n - d - 1 alpha vectors");
        for (const auto& a : alphas)
            if (a.size() != m) fail(ErrorCode::DimensionMismatch, "alpha vectors must have length n + 1");
        // Primal coordinate p_I is, up to a global sign, the maximal minor of the
        // spanning matrix [alphas; x] on the complement of I, signed by the shuffle (I, I^c).
        std::vector<XPoly> primal;
        for (const auto& tuple : tuples) {
            IndexTuple comp;
            for (std::size_t i = 0; i < m; ++i)
                if (!std::binary_search(tuple.begin(), tuple.end(), i)) comp.push_back(i);
            XPoly minor;
            // Laplace expansion along the x row (the last row of the spanning matrix).
            for (std::size_t k = 0; k < comp.size(); ++k) {
                QMat sub(planes, planes);
                for (std::size_t r = 0; r < planes; ++r) {
                    std::size_t cc = 0;
                    for (std::size_t j = 0; j < comp.size(); ++j) {
                        if (j == k) continue;
                        sub(r, cc++) = alphas[r][comp[j]];
                    }
                }
                Rat cof = planes == 0 ? Rat(1) : determinant(sub);
                if ((planes + k) % 2) cof = -cof;
                if (cof == 0) continue;
                IntVector e(m, Int(0));
                e[comp[k]] = 1;
                minor[e] += cof;
            }
            if (shuffle_sign(tuple, m) < 0)
                for (auto& [e, c] : minor) c = -c;
            primal.push_back(std::move(minor));
        }
        XPoly total;
        for (const auto& [mono, coeff] : form.terms) {
            XPoly term{{IntVector(m, Int(0)), coeff}};
            for (const auto& f : mono.factors) term = multiply(term, primal[tuple_position(tuples, f)]);
            for (const auto& [e, c] : term) total[e] += c;
        }
        XPolynomial poly;
        for (const auto& [e, c] : total)
            if (c != 0) poly.terms.emplace_back(e, c);
        out.push_back(std::move(poly));
    }
    return out;
}

}  // namespace tropimpl
