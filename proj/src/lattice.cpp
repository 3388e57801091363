#include "tropimpl/lattice.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>

namespace tropimpl {

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (old values).
void combine_rows(ZMat& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u,
                  const Int& v) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int x = m(a, j), y = m(b, j);
        m(a, j) = s * x + t * y;
        m(b, j) = u * x + v * y;
    }
}

void add_row_multiple(ZMat& m, std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(ZMat& m, std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(ZMat& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void hermite_in_place(ZMat& a, ZMat& u) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
            Int x = a(r, c) / g, y = a(i, c) / g;
            combine_rows(a, r, i, s, t, -y, x);
            combine_rows(u, r, i, s, t, -y, x);
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            negate_row(a, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            add_row_multiple(a, i, r, -q);
            add_row_multiple(u, i, r, -q);
        }
        ++r;
    }
}

void smith_in_place(ZMat& a, ZMat& u, ZMat& v) {
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (bi == m || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return;
            a.swap_rows(t, bi);
            u.swap_rows(t, bi);
            a.swap_cols(t, bj);
            v.swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row_multiple(a, t, i, Int(1));
                        add_row_multiple(u, t, i, Int(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }
    }
}

std::vector<IntVector> hermite_rows(const std::vector<IntVector>& rows, std::size_t n) {
    ZMat a = ZMat::from_rows(rows, n);
    ZMat u = ZMat::identity(a.rows());
    hermite_in_place(a, u);
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        IntVector r = a.row(i);
        if (!is_zero(r)) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

NormalForm lattice_normal_form(const ZMat& m, NormalFormKind kind) {
    NormalForm nf{m, ZMat::identity(m.rows()), ZMat::identity(m.cols())};
    if (kind == NormalFormKind::Hermite)
        hermite_in_place(nf.form, nf.left);
    else
        smith_in_place(nf.form, nf.left, nf.right);
    return nf;
}

IntVector smith_invariants(const ZMat& m) {
    NormalForm nf = lattice_normal_form(m, NormalFormKind::Smith);
    IntVector out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (nf.form(i, i) != 0) out.push_back(nf.form(i, i));
    return out;
}

std::vector<IntVector> integer_kernel(const ZMat& m) {
    const std::size_t n = m.cols();
    if (n == 0) return {};
    ZMat h = m.transpose();
    ZMat u = ZMat::identity(n);
    hermite_in_place(h, u);
    std::vector<IntVector> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) kernel.push_back(u.row(i));
    }
    return hermite_rows(kernel, n);
}

LatticeBasis saturate(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
    LatticeBasis out{ambient_dim, {}};
    if (generators.empty() || ambient_dim == 0) return out;
    auto orth = integer_kernel(ZMat::from_rows(generators, ambient_dim));
    if (orth.empty()) {
        for (std::size_t i = 0; i < ambient_dim; ++i) out.basis.push_back(unit_vector(ambient_dim, i));
        return out;
    }
    out.basis = integer_kernel(ZMat::from_rows(orth, ambient_dim));
    return out;
}

Int lattice_index(const LatticeBasis& super, const std::vector<IntVector>& sub_generators) {
    const std::size_t n = super.ambient_dim;
    const std::size_t k = super.rank();
    if (sub_generators.size() != k) fail(ErrorCode::SpanMismatch, "sublattice rank differs from lattice rank");
    if (k == 0) return 1;
    std::vector<IntVector> all = super.basis;
    all.insert(all.end(), sub_generators.begin(), sub_generators.end());
    if (rank(ZMat::from_rows(all, n)) != k || rank(ZMat::from_rows(sub_generators, n)) != k)
        fail(ErrorCode::SpanMismatch, "spans differ or generators dependent");
    LatticeCoordinates coords(super.basis, n);
    QMat c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        RatVector y = coords.coordinates_in_span(to_rat(sub_generators[i]));
        for (std::size_t j = 0; j < k; ++j) {
            if (y[j].get_den() != 1) fail(ErrorCode::SpanMismatch, "generator outside the lattice");
            c(i, j) = y[j];
        }
    }
    Rat d = determinant(c);
    return abs(d.get_num());
}

Int generated_lattice_index(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
    if (generators.empty()) return 1;
    Int prod = 1;
    for (const auto& d : smith_invariants(ZMat::from_rows(generators, ambient_dim))) prod *= d;
    return prod;
}

IntVector hyperplane_normal(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
    auto k = integer_kernel(ZMat::from_rows(generators, ambient_dim));
    if (k.size() != 1) fail(ErrorCode::DimensionMismatch, "generators do not span a hyperplane");
    return canonical_scale(k[0]);
}

LatticeCoordinates::LatticeCoordinates(const std::vector<IntVector>& basis, std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), rank_(basis.size()), basis_(basis) {
    if (rank_ == 0) return;
    QMat b = to_rat(ZMat::from_rows(basis, ambient_dim));
    Echelon e = row_echelon(b);
    if (e.pivots.size() != rank_) fail(ErrorCode::InvalidArgument, "lattice basis vectors are dependent");
    pivot_columns_ = e.pivots;
    QMat sq(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) sq(i, j) = b(i, pivot_columns_[j]);
    inverse_ = inverse(sq);
}

RatVector LatticeCoordinates::coordinates_in_span(const RatVector& x) const {
    RatVector y(rank_, Rat(0));
    for (std::size_t j = 0; j < rank_; ++j) {
        const Rat& xv = x[pivot_columns_[j]];
        if (xv == 0) continue;
        for (std::size_t i = 0; i < rank_; ++i) y[i] += xv * inverse_(j, i);
    }
    return y;
}

std::optional<RatVector> LatticeCoordinates::coordinates(const RatVector& x) const {
    RatVector y = coordinates_in_span(x);
    if (point(y) != x) return std::nullopt;
    return y;
}

RatVector LatticeCoordinates::point(const RatVector& y) const {
    RatVector x(ambient_dim_, Rat(0));
    for (std::size_t i = 0; i < rank_; ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (basis_[i][j] != 0) x[j] += y[i] * basis_[i][j];
    }
    return x;
}

}  // namespace tropimpl
