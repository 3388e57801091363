#include "tropimpl/interpolate.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/parallel.hpp"

#include <algorithm>
#include <set>

namespace tropimpl {

MonomialBasis monomial_basis(const LatticePolytope& p, bool force) {
    MonomialBasis b;
    b.ambient_dim = p.ambient_dim();
    b.exponents = lattice_points(p, force);
    return b;
}

namespace {

// Powers x^e for e in [lo, hi] of one coordinate.
struct PowerTable {
    long lo = 0;
    std::vector<Rat> values;
    const Rat& at(long e) const { return values[static_cast<std::size_t>(e - lo)]; }
};

std::pair<std::vector<long>, std::vector<long>> exponent_ranges(const MonomialBasis& basis) {
    std::vector<long> lo(basis.ambient_dim, 0), hi(basis.ambient_dim, 0);
    for (const auto& e : basis.exponents)
        for (std::size_t i = 0; i < basis.ambient_dim; ++i) {
            lo[i] = std::min(lo[i], e[i].get_si());
            hi[i] = std::max(hi[i], e[i].get_si());
        }
    return {lo, hi};
}

std::vector<PowerTable> power_tables(const RatVector& x, const std::vector<long>& lo, const std::vector<long>& hi) {
    std::vector<PowerTable> tables(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        PowerTable& t = tables[i];
        t.lo = lo[i];
        const std::size_t len = static_cast<std::size_t>(hi[i] - lo[i] + 1);
        t.values.resize(len);
        Rat start = 1;
        if (lo[i] < 0) {
            Rat inv = Rat(1) / x[i];
            for (long k = 0; k < -lo[i]; ++k) start *= inv;
        }
        t.values[0] = start;
        for (std::size_t k = 1; k < len; ++k) t.values[k] = t.values[k - 1] * x[i];
    }
    return tables;
}

Rat monomial_value(const std::vector<PowerTable>& tables, const IntVector& e) {
    Rat v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) v *= tables[i].at(e[i].get_si());
    return v;
}

void check_point_count(const MonomialBasis& basis, std::size_t points) {
    if (basis.exponents.empty()) fail(ErrorCode::InvalidArgument, "empty monomial basis");
    if (points + 1 < basis.exponents.size())
        fail(ErrorCode::InvalidArgument, "need at least |basis| - 1 sample points");
}

void check_kernel_dimension(std::size_t dim) {
    if (dim == 0) fail(ErrorCode::KernelEmpty, "interpolation matrix has trivial kernel");
    if (dim > 1)
        fail(ErrorCode::KernelTooBig, "interpolation kernel has dimension " + std::to_string(dim));
}

}  // namespace

Rat ImplicitPolynomial::evaluate(const RatVector& x) const {
    auto [lo, hi] = exponent_ranges(basis);
    auto tables = power_tables(x, lo, hi);
    Rat sum = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        if (coefficients[k] != 0) sum += coefficients[k] * monomial_value(tables, basis.exponents[k]);
    return sum;
}

std::uint64_t ImplicitPolynomial::evaluate_mod(const ModVector& x, const PrimeField& field) const {
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (coefficients[k] == 0) continue;
        std::uint64_t v = field.from_int(coefficients[k]);
        for (std::size_t i = 0; i < x.size(); ++i) v = field.mul(v, field.pow(x[i], basis.exponents[k][i].get_si()));
        sum = field.add(sum, v);
    }
    return sum;
}

std::size_t ImplicitPolynomial::support_size() const {
    return static_cast<std::size_t>(std::count_if(coefficients.begin(), coefficients.end(),
                                                  [](const Int& c) { return c != 0; }));
}

FieldSpec FieldSpec::parse(const std::string& text) {
    FieldSpec f;
    if (text == "q" || text == "Q") return f;
    auto number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
            fail(ErrorCode::InvalidArgument, "bad field '" + text + "'");
        return std::stoull(s);
    };
    if (text.rfind("gf:", 0) == 0) {
        f.kind = Kind::Prime;
        f.prime = number(text.substr(3));
        PrimeField check(f.prime);
        return f;
    }
    if (text.rfind("crt:", 0) == 0) {
        f.kind = Kind::MultiPrime;
        f.prime_count = number(text.substr(4));
        if (f.prime_count == 0) fail(ErrorCode::InvalidArgument, "crt needs at least one prime");
        return f;
    }
    fail(ErrorCode::InvalidArgument, "bad field '" + text + "'");
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case Kind::Rational: return "q";
        case Kind::Prime: return "gf:" + std::to_string(prime);
        case Kind::MultiPrime: return "crt:" + std::to_string(prime_count);
    }
    return "q";
}

std::vector<RatVector> sample_from(const PointSource& source, std::size_t count, long height, std::uint64_t seed,
                                   std::uint64_t stream) {
    if (count < 1) fail(ErrorCode::InvalidArgument, "sample count must be positive");
    if (height < 2) fail(ErrorCode::InvalidArgument, "sample height must be at least 2");
    Rng rng(derive_seed(seed, stream));
    std::set<RatVector> seen;
    std::vector<RatVector> out;
    const std::size_t budget = 100 * count;
    for (std::size_t draws = 0; draws < budget && out.size() < count; ++draws) {
        auto x = source.draw(rng, height);
        if (!x || !seen.insert(*x).second) continue;
        out.push_back(std::move(*x));
    }
    if (out.size() < count)
        fail(ErrorCode::SamplingExhausted, "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                               " samples after " + std::to_string(budget) + " draws");
    return out;
}

std::vector<ModVector> sample_from_mod(const PointSource& source, std::size_t count, const PrimeField& field,
                                       std::uint64_t seed, std::uint64_t stream) {
    if (count < 1) fail(ErrorCode::InvalidArgument, "sample count must be positive");
    Rng rng(derive_seed(seed, stream, field.p));
    std::set<ModVector> seen;
    std::vector<ModVector> out;
    const std::size_t budget = 100 * count;
    for (std::size_t draws = 0; draws < budget && out.size() < count; ++draws) {
        auto x = source.draw_mod(rng, field);
        if (!x || !seen.insert(*x).second) continue;
        out.push_back(std::move(*x));
    }
    if (out.size() < count)
        fail(ErrorCode::SamplingExhausted, "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                               " samples mod " + std::to_string(field.p));
    return out;
}

std::vector<RatVector> sample_points(const Parametrization& f, std::size_t count, long height, std::uint64_t seed) {
    return sample_from(ParametrizationSource(f), count, height, seed);
}

std::vector<RatVector> horn_sample(const ZMat& a, const ZMat& b, std::size_t count, long height, std::uint64_t seed) {
    return sample_from(HornSource(a, b), count, height, seed);
}

IntVector vandermonde_kernel(const MonomialBasis& basis, const std::vector<RatVector>& points) {
    check_point_count(basis, points.size());
    std::vector<RatVector> distinct;
    std::set<RatVector> seen;
    for (const auto& p : points)
        if (seen.insert(p).second) distinct.push_back(p);
    auto [lo, hi] = exponent_ranges(basis);
    const std::size_t cols = basis.exponents.size();
    ZMat m(distinct.size(), cols);
    parallel_for(distinct.size(), [&](std::size_t r) {
        auto tables = power_tables(distinct[r], lo, hi);
        RatVector row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = monomial_value(tables, basis.exponents[j]);
        Int l = lcm_of_denominators(row);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) = Int(row[j] * l);
    });
    auto kernel = kernel_basis(m);
    check_kernel_dimension(kernel.size());
    return canonical_scale(kernel[0]);
}

ModVector vandermonde_kernel(const MonomialBasis& basis, const std::vector<ModVector>& points,
                             const PrimeField& field) {
    check_point_count(basis, points.size());
    std::vector<ModVector> distinct;
    std::set<ModVector> seen;
    for (const auto& p : points)
        if (seen.insert(p).second) distinct.push_back(p);
    auto [lo, hi] = exponent_ranges(basis);
    const std::size_t cols = basis.exponents.size();
    ModMatrix m(distinct.size(), ModVector(cols));
    parallel_for(distinct.size(), [&](std::size_t r) {
        const auto& x = distinct[r];
        std::vector<ModVector> tables(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const std::size_t len = static_cast<std::size_t>(hi[i] - lo[i] + 1);
            tables[i].resize(len);
            tables[i][0] = field.pow(x[i], lo[i]);
            for (std::size_t k = 1; k < len; ++k) tables[i][k] = field.mul(tables[i][k - 1], x[i]);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t v = 1;
            for (std::size_t i = 0; i < x.size(); ++i)
                v = field.mul(v, tables[i][static_cast<std::size_t>(basis.exponents[j][i].get_si() - lo[i])]);
            m[r][j] = v;
        }
    });
    auto kernel = kernel_basis(std::move(m), cols, field);
    check_kernel_dimension(kernel.size());
    return normalize_mod(kernel[0], field);
}

namespace {

std::vector<ExtVector> sample_from_ext(const PointSource& source, std::size_t count, const ExtensionField& field,
                                       std::uint64_t seed, std::uint64_t stream) {
    Rng rng(derive_seed(seed, stream, field.base().p * 8 + field.degree()));
    std::set<ExtVector> seen;
    std::vector<ExtVector> out;
    const std::size_t budget = 100 * count;
    for (std::size_t draws = 0; draws < budget && out.size() < count; ++draws) {
        auto x = source.draw_ext(rng, field);
        if (!x || !seen.insert(*x).second) continue;
        out.push_back(std::move(*x));
    }
    if (out.size() < count)
        fail(ErrorCode::SamplingExhausted, "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                               " samples over the extension field");
    return out;
}

ExtensionField::Elem evaluate_ext(const ImplicitPolynomial& f, const ExtVector& x, const ExtensionField& field) {
    auto sum = field.zero();
    for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
        if (f.coefficients[k] == 0) continue;
        auto v = field.embed(field.base().from_int(f.coefficients[k]));
        for (std::size_t i = 0; i < x.size(); ++i) v = field.mul(v, field.pow(x[i], f.basis.exponents[k][i].get_si()));
        sum = field.add(sum, v);
    }
    return sum;
}

// Kernel over GF(p^k) of the interpolation matrix; the generator must lie in GF(p).
ModVector extension_kernel(const MonomialBasis& basis, const std::vector<ExtVector>& points,
                           const ExtensionField& field) {
    auto [lo, hi] = exponent_ranges(basis);
    const std::size_t cols = basis.exponents.size();
    std::vector<ExtVector> m(points.size(), ExtVector(cols));
    parallel_for(points.size(), [&](std::size_t r) {
        const auto& x = points[r];
        std::vector<ExtVector> tables(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const std::size_t len = static_cast<std::size_t>(hi[i] - lo[i] + 1);
            tables[i].resize(len);
            tables[i][0] = field.pow(x[i], lo[i]);
            for (std::size_t k = 1; k < len; ++k) tables[i][k] = field.mul(tables[i][k - 1], x[i]);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            auto v = field.one();
            for (std::size_t i = 0; i < x.size(); ++i)
                v = field.mul(v, tables[i][static_cast<std::size_t>(basis.exponents[j][i].get_si() - lo[i])]);
            m[r][j] = v;
        }
    });
    auto kernel = kernel_basis(std::move(m), cols, field);
    check_kernel_dimension(kernel.size());
    auto v = kernel[0];
    std::size_t lead = 0;
    while (field.is_zero(v[lead])) ++lead;
    const auto inv = field.inv(v[lead]);
    ModVector out;
    for (auto& x : v) {
        auto b = field.in_base(field.mul(x, inv));
        if (!b) fail(ErrorCode::VerificationFailed, "kernel generator is not defined over the prime field");
        out.push_back(*b);
    }
    return out;
}

// Degree of GF(p^k) to sample from so that the pulled-back polynomials of the basis
// cannot vanish on the whole sampled set.
std::size_t sampling_extension_degree(const PointSource& source, const MonomialBasis& basis, std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 31)) return 1;
    const Int bound = 64 * std::max(Int(1), source.pullback_degree(basis.exponents));
    const std::size_t k = extension_degree_for(p, bound);
    if (k == 0)
        fail(ErrorCode::InvalidArgument, "prime " + std::to_string(p) + " is too small for polynomials of degree " +
                                             source.pullback_degree(basis.exponents).get_str());
    return k;
}

ImplicitPolynomial solve_mod(const PointSource& source, const MonomialBasis& basis, std::uint64_t prime,
                             std::uint64_t seed, const SamplingOptions& options) {
    PrimeField field(prime);
    const std::size_t count = basis.exponents.size() - 1 + options.extra_samples;
    const std::size_t degree = sampling_extension_degree(source, basis, prime);
    ModVector c;
    if (degree == 1) {
        auto points = sample_from_mod(source, count, field, seed);
        c = vandermonde_kernel(basis, points, field);
    } else {
        ExtensionField ext(field, degree);
        check_point_count(basis, count);
        c = extension_kernel(basis, sample_from_ext(source, count, ext, seed, streams::sampling), ext);
    }
    ImplicitPolynomial out;
    out.basis = basis;
    out.modulus = prime;
    for (auto x : c) out.coefficients.push_back(Int(static_cast<unsigned long>(x)));
    return out;
}

void verify_rational(const PointSource& source, const ImplicitPolynomial& f, std::uint64_t seed,
                     const SamplingOptions& options) {
    if (options.verification_samples == 0) return;
    auto fresh = sample_from(source, options.verification_samples, options.height, seed, streams::verification);
    for (const auto& x : fresh)
        if (f.evaluate(x) != 0) fail(ErrorCode::VerificationFailed, "polynomial does not vanish on a fresh sample");
}

void verify_mod(const PointSource& source, const ImplicitPolynomial& f, std::uint64_t seed,
                const SamplingOptions& options) {
    if (options.verification_samples == 0) return;
    PrimeField field(*f.modulus);
    const std::size_t degree = sampling_extension_degree(source, f.basis, field.p);
    if (degree == 1) {
        for (const auto& x : sample_from_mod(source, options.verification_samples, field, seed, streams::verification))
            if (f.evaluate_mod(x, field) != 0)
                fail(ErrorCode::VerificationFailed, "polynomial does not vanish on a fresh sample mod p");
        return;
    }
    // Points over the prime field alone cannot certify a polynomial of higher degree.
    ExtensionField ext(field, degree);
    for (const auto& x : sample_from_ext(source, options.verification_samples, ext, seed, streams::verification))
        if (!ext.is_zero(evaluate_ext(f, x, ext)))
            fail(ErrorCode::VerificationFailed, "polynomial does not vanish on a fresh extension-field sample");
}

ImplicitPolynomial solve_multi_prime(const PointSource& source, const MonomialBasis& basis, std::size_t initial,
                                     std::uint64_t seed, const SamplingOptions& options) {
    // Primes are added in batches of the initial size until the lift verifies.
    const std::size_t cap = std::max<std::size_t>(64, 8 * initial);
    std::vector<std::uint64_t> all = word_primes(cap);
    std::vector<std::uint64_t> primes;
    std::vector<ModVector> residues;
    std::size_t next = 0, skipped = 0;
    std::optional<Error> last_error;
    while (next < all.size()) {
        const std::size_t batch_end = std::min(all.size(), next + initial);
        std::vector<std::optional<ModVector>> batch(batch_end - next);
        std::vector<std::optional<Error>> errors(batch.size());
        parallel_for(batch.size(), [&](std::size_t k) {
            try {
                auto poly = solve_mod(source, basis, all[next + k], seed, options);
                ModVector v;
                for (const auto& c : poly.coefficients) v.push_back(c.get_ui());
                batch[k] = std::move(v);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::KernelTooBig && e.code() != ErrorCode::KernelEmpty &&
                    e.code() != ErrorCode::SamplingExhausted)
                    throw;
                errors[k] = e;
            }
        });
        for (std::size_t k = 0; k < batch.size(); ++k) {
            if (batch[k]) {
                primes.push_back(all[next + k]);
                residues.push_back(std::move(*batch[k]));
            } else {
                ++skipped;
                last_error = errors[k];
            }
        }
        next = batch_end;
        // A failure at most primes means the polytope or samples are wrong, not the prime.
        if (skipped > primes.size() && last_error) throw *last_error;
        if (primes.empty()) continue;

        // Normalize every residue vector at a common coordinate nonzero mod all primes.
        const std::size_t len = residues[0].size();
        std::size_t anchor = len;
        for (std::size_t j = 0; j < len && anchor == len; ++j) {
            bool ok = true;
            for (const auto& r : residues)
                if (r[j] == 0) ok = false;
            if (ok) anchor = j;
        }
        if (anchor == len) continue;
        std::vector<ModVector> scaled = residues;
        for (std::size_t k = 0; k < scaled.size(); ++k) {
            PrimeField field(primes[k]);
            std::uint64_t inv = field.inv(scaled[k][anchor]);
            for (auto& x : scaled[k]) x = field.mul(x, inv);
        }
        RatVector lifted;
        try {
            lifted = crt_rational_reconstruct(scaled, primes);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ReconstructionFailed) throw;
            continue;
        }
        ImplicitPolynomial out;
        out.basis = basis;
        out.coefficients = canonical_scale(lifted);
        try {
            verify_rational(source, out, seed, options);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::VerificationFailed) throw;
            continue;
        }
        return out;
    }
    if (last_error && primes.empty()) throw *last_error;
    fail(ErrorCode::ReconstructionFailed,
         "multi-prime lift did not verify with " + std::to_string(primes.size()) + " primes");
}

}  // namespace

ImplicitPolynomial interpolate_on_basis(const PointSource& source, const MonomialBasis& basis, const FieldSpec& field,
                                        std::uint64_t seed, const SamplingOptions& options) {
    if (basis.ambient_dim != source.dim())
        fail(ErrorCode::DimensionMismatch, "monomial basis and point source differ in dimension");
    if (basis.exponents.empty()) fail(ErrorCode::KernelEmpty, "empty ansatz");
    switch (field.kind) {
        case FieldSpec::Kind::Prime: {
            auto out = solve_mod(source, basis, field.prime, seed, options);
            verify_mod(source, out, seed, options);
            return out;
        }
        case FieldSpec::Kind::MultiPrime: return solve_multi_prime(source, basis, field.prime_count, seed, options);
        case FieldSpec::Kind::Rational: break;
    }
    const std::size_t count = basis.exponents.size() - 1 + options.extra_samples;
    auto points = sample_from(source, count, options.height, seed);
    ImplicitPolynomial out;
    out.basis = basis;
    out.coefficients = vandermonde_kernel(basis, points);
    verify_rational(source, out, seed, options);
    return out;
}

ImplicitPolynomial implicit_equation(const PointSource& source, const LatticePolytope& p, const FieldSpec& field,
                                     std::uint64_t seed, const SamplingOptions& options) {
    if (p.ambient_dim() != source.dim())
        fail(ErrorCode::DimensionMismatch, "polytope and point source differ in dimension");
    return interpolate_on_basis(source, monomial_basis(p), field, seed, options);
}

ImplicitPolynomial implicit_equation(const Parametrization& f, const LatticePolytope& p, const FieldSpec& field,
                                     std::uint64_t seed, const SamplingOptions& options) {
    return implicit_equation(ParametrizationSource(f), p, field, seed, options);
}

}  // namespace tropimpl
