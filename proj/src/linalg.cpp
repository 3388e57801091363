#include "tropimpl/linalg.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/lattice.hpp"

namespace tropimpl {

Echelon row_echelon(const QMat& m) {
    Echelon e{m, {}};
    QMat& a = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const QMat& m) {
    QMat a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const ZMat& m) { return pivot_columns(m).size(); }

std::vector<std::size_t> pivot_columns(const ZMat& m) {
    // Bareiss forward elimination.
    std::vector<std::size_t> pivots;
    ZMat a = m;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
    return rank(ZMat::from_rows(rows, cols));
}

Rat determinant(const QMat& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    QMat a = m;
    Rat det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            a.swap_rows(c, p);
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Int determinant(const ZMat& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ZMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            a.swap_rows(c, p);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = a(c, c) * a(i, j) - a(i, c) * a(c, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(c, c);
    }
    return sign * a(n - 1, n - 1);
}

QMat inverse(const QMat& m) {
    const std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = row_echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorCode::RankDeficient, "singular matrix");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<RatVector> solve(const QMat& m, const RatVector& b) {
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_echelon(aug);
    RatVector x(m.cols(), Rat(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

std::vector<IntVector> kernel_basis(const ZMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    ZMat a = m;
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        Int piv = a(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Int f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                Int& x = a(i, j);
                x *= piv;
                if (f != 0 && a(r, j) != 0) x -= f * a(r, j);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = piv;
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    // Every pivot row now has pivot entry equal to prev.
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        IntVector v(cols, Int(0));
        v[f] = prev;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(i, f);
        basis.push_back(canonical_scale(std::move(v)));
    }
    return basis;
}

std::vector<IntVector> kernel_basis(const QMat& m) {
    ZMat z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = lcm_of_denominators(m.row(i));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat s = m(i, j) * l;
            z(i, j) = s.get_num();
        }
    }
    return kernel_basis(z);
}

std::vector<ModVector> kernel_basis(ModMatrix a, std::size_t cols, const PrimeField& field) {
    const std::uint64_t p = field.p;
    const std::size_t rows = a.size();
    for (auto& row : a)
        for (auto& x : row) x = field.reduce(x);
    // Forward elimination to a row echelon form with unit pivots.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        auto& prow = a[r];
        const std::uint64_t inv = field.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto& row = a[i];
            const std::uint64_t f = row[c];
            if (f == 0) continue;
            const std::uint64_t nf = p - f;
            for (std::size_t j = c; j < cols; ++j) row[j] = field.reduce(row[j] + nf * prow[j]);
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::vector<ModVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ModVector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = pivot_col.size(); i-- > 0;) {
            const auto& row = a[i];
            std::uint64_t acc = 0;
            for (std::size_t j = pivot_col[i] + 1; j < cols; ++j)
                if (v[j] != 0 && row[j] != 0) acc = field.add(acc, field.mul(row[j], v[j]));
            v[pivot_col[i]] = field.neg(acc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

ModVector normalize_mod(ModVector v, const PrimeField& field) {
    for (auto x : v) {
        if (x == 0) continue;
        std::uint64_t inv = field.inv(x);
        for (auto& y : v) y = field.mul(y, inv);
        break;
    }
    return v;
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& modulus) {
    // Extended Euclid on (modulus, a) stopped at the half bound.
    Int bound;
    Int half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Int r0 = modulus, r1 = a % modulus;
    if (r1 < 0) r1 += modulus;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

RatVector crt_rational_reconstruct(const std::vector<ModVector>& residue_vectors,
                                   const std::vector<std::uint64_t>& primes) {
    if (residue_vectors.size() != primes.size() || primes.empty())
        fail(ErrorCode::InvalidArgument, "one residue vector per prime required");
    const std::size_t len = residue_vectors[0].size();
    for (const auto& v : residue_vectors)
        if (v.size() != len) fail(ErrorCode::DimensionMismatch, "residue vectors differ in length");
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) fail(ErrorCode::InvalidArgument, "primes must be distinct");
    RatVector out(len);
    for (std::size_t k = 0; k < len; ++k) {
        Int value = residue_vectors[0][k] % primes[0];
        Int modulus = primes[0];
        for (std::size_t i = 1; i < primes.size(); ++i) {
            // value + modulus * s ≡ r (mod p)
            Int p = primes[i];
            Int r = residue_vectors[i][k] % primes[i];
            Int diff = r - value;
            Int inv;
            mpz_invert(inv.get_mpz_t(), Int(modulus % p).get_mpz_t(), p.get_mpz_t());
            Int s = (diff * inv) % p;
            if (s < 0) s += p;
            value += modulus * s;
            modulus *= p;
        }
        auto r = rational_reconstruct(value, modulus);
        if (!r) fail(ErrorCode::ReconstructionFailed, "rational reconstruction bound not met");
        out[k] = *r;
    }
    return out;
}

ZMat gale_dual(const ZMat& a) {
    if (rank(a) < a.rows()) fail(ErrorCode::RankDeficient, "matrix does not have full row rank");
    auto k = integer_kernel(a);
    return ZMat::from_rows(k, a.cols());
}

}  // namespace tropimpl
