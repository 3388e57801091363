#include "tropimpl/extension_field.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/random.hpp"

namespace tropimpl {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, increasing degree

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const PrimeField& f) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = f.inv(m.back());
    while (a.size() >= m.size()) {
        const std::uint64_t c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const PrimeField& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return poly_mod(r, m, f);
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: m of degree k is irreducible iff gcd(x^{p^i} - x, m) = 1 for i <= k/2.
bool irreducible(const Poly& m, const PrimeField& f) {
    const std::size_t k = m.size() - 1;
    Poly x{0, 1};
    Poly power = poly_mod(x, m, f);
    for (std::size_t i = 1; i <= k / 2; ++i) {
        // power <- power^p
        Poly result{1}, base = power;
        std::uint64_t e = f.p;
        while (e) {
            if (e & 1) result = poly_mulmod(result, base, m, f);
            base = poly_mulmod(base, base, m, f);
            e >>= 1;
        }
        power = result;
        Poly diff = power;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = f.sub(diff[1], 1);
        Poly g = poly_gcd(m, diff, f);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(const PrimeField& base, std::size_t degree) : base_(base), k_(degree) {
    if (degree < 1 || degree > max_degree) fail(ErrorCode::InvalidArgument, "extension degree must be in [1, " + std::to_string(max_degree) + "]");
    if (base.p >= (std::uint64_t(1) << 31)) fail(ErrorCode::InvalidArgument, "extension base prime must be below 2^31");
    if (k_ == 1) {
        modulus_ = {0};
        return;
    }
    // First monic irreducible in lexicographic order of (m_0, ..., m_{k-1}).
    std::vector<std::uint64_t> coeffs(k_, 0);
    while (true) {
        Poly m(coeffs.begin(), coeffs.end());
        m.push_back(1);
        if (coeffs[0] != 0 && irreducible(m, base_)) break;
        std::size_t i = 0;
        while (i < k_ && ++coeffs[i] == base_.p) coeffs[i++] = 0;
        if (i == k_) fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
    }
    modulus_ = coeffs;
}

std::optional<std::uint64_t> ExtensionField::in_base(const Elem& a) const {
    for (std::size_t i = 1; i < max_degree; ++i)
        if (a[i] != 0) return std::nullopt;
    return a[0];
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
    Elem r{};
    for (std::size_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(base_.add(a[i], b[i]));
    return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
    Elem r{};
    for (std::size_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(base_.sub(a[i], b[i]));
    return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
    Elem r{};
    for (std::size_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(base_.neg(a[i]));
    return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
    if (k_ == 1) {
        Elem r{};
        r[0] = static_cast<std::uint32_t>(base_.mul(a[0], b[0]));
        return r;
    }
    std::array<std::uint64_t, 2 * max_degree - 1> t{};
    for (std::size_t i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k_; ++j) t[i + j] += base_.mul(a[i], b[j]);
    }
    for (std::size_t d = 2 * k_ - 2; d < 2 * max_degree; --d) {
        t[d] = base_.reduce(t[d]);
        if (d < k_ || t[d] == 0) continue;
        // x^d = x^{d-k} * x^k = -x^{d-k} sum m_i x^i
        const std::uint64_t c = t[d];
        for (std::size_t i = 0; i < k_; ++i) t[d - k_ + i] += base_.p - base_.mul(c, modulus_[i]);
        t[d] = 0;
    }
    Elem r{};
    for (std::size_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(t[i]);
    return r;
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem result = one(), b = a;
    auto k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) result = mul(result, b);
        b = mul(b, b);
        k >>= 1;
    }
    return result;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
    if (is_zero(a)) fail(ErrorCode::InvalidArgument, "inverse of zero in extension field");
    // a^(q-2) with q = p^k < 2^124.
    unsigned __int128 q = 1;
    for (std::size_t i = 0; i < k_; ++i) q *= base_.p;
    unsigned __int128 e = q - 2;
    Elem result = one(), b = a;
    while (e) {
        if (e & 1) result = mul(result, b);
        b = mul(b, b);
        e >>= 1;
    }
    return result;
}

ExtensionField::Elem ExtensionField::random(Rng& rng) const {
    Elem r{};
    for (std::size_t i = 0; i < k_; ++i)
        r[i] = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(base_.p) - 1));
    return r;
}

ExtensionField::Elem ExtensionField::random_nonzero(Rng& rng) const {
    while (true) {
        Elem r = random(rng);
        if (!is_zero(r)) return r;
    }
}

std::size_t extension_degree_for(std::uint64_t p, const Int& bound) {
    Int q = 1;
    for (std::size_t k = 1; k <= ExtensionField::max_degree; ++k) {
        q *= static_cast<unsigned long>(p);
        if (q > bound) return k;
    }
    return 0;
}

std::vector<ExtVector> kernel_basis(std::vector<ExtVector> a, std::size_t cols, const ExtensionField& field) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && field.is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        auto& prow = a[r];
        const auto inv = field.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto& row = a[i];
            if (field.is_zero(row[c])) continue;
            const auto f = field.neg(row[c]);
            for (std::size_t j = c; j < cols; ++j) row[j] = field.add(row[j], field.mul(f, prow[j]));
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::vector<ExtVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ExtVector v(cols, field.zero());
        v[f] = field.one();
        for (std::size_t i = pivot_col.size(); i-- > 0;) {
            const auto& row = a[i];
            auto acc = field.zero();
            for (std::size_t j = pivot_col[i] + 1; j < cols; ++j)
                if (!field.is_zero(v[j])) acc = field.add(acc, field.mul(row[j], v[j]));
            v[pivot_col[i]] = field.neg(acc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tropimpl
