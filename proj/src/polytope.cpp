#include "tropimpl/polytope.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace tropimpl {

namespace {

// Beneath-beyond hull of full-dimensional integer points in Z^k.
struct HullFacet {
    IntVector normal;
    Int offset;
    std::vector<std::size_t> points;  // sorted
    bool alive = true;
};

struct FullHull {
    std::vector<HullFacet> facets;
    std::vector<std::size_t> vertices;  // sorted point indices
};

std::size_t affine_rank(const std::vector<IntVector>& pts, const std::vector<std::size_t>& ids, std::size_t k) {
    if (ids.empty()) return 0;
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(sub(pts[ids[i]], pts[ids[0]]));
    if (diffs.empty()) return 0;
    return rank(diffs, k);
}

// Normal vector orthogonal to (q - base) for q in others; exactly one-dimensional.
IntVector hyperplane_through(const std::vector<IntVector>& pts, const std::vector<std::size_t>& ids,
                             const IntVector& base, std::size_t k) {
    ZMat m(ids.size(), k);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = pts[ids[i]][j] - base[j];
    auto ker = kernel_basis(m);
    if (ker.size() != 1) fail(ErrorCode::InvalidArgument, "degenerate hyperplane in hull construction");
    return ker[0];
}

FullHull hull_full_dim(const std::vector<IntVector>& pts, std::size_t k) {
    const std::size_t n = pts.size();
    // Initial simplex.
    std::vector<std::size_t> simplex{0};
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < n && simplex.size() < k + 1; ++i) {
        diffs.push_back(sub(pts[i], pts[0]));
        if (rank(diffs, k) == diffs.size())
            simplex.push_back(i);
        else
            diffs.pop_back();
    }
    if (simplex.size() != k + 1) fail(ErrorCode::InvalidArgument, "points are not full-dimensional");

    // Interior reference point, scaled by k+1 to stay integral.
    IntVector center(k, Int(0));
    for (auto i : simplex) center = add(center, pts[i]);
    const Int scale_c = static_cast<unsigned long>(k + 1);
    auto above_center = [&](const IntVector& a, const Int& b) { return dot(a, center) > scale_c * b; };

    std::vector<HullFacet> facets;
    std::vector<std::size_t> processed(simplex.begin(), simplex.end());
    std::sort(processed.begin(), processed.end());

    auto make_facet = [&](const std::vector<std::size_t>& ids, std::size_t through) -> HullFacet {
        IntVector a = hyperplane_through(pts, ids, pts[through], k);
        Int b = dot(a, pts[through]);
        if (!above_center(a, b)) {
            a = negate(std::move(a));
            b = -b;
        }
        HullFacet f{std::move(a), std::move(b), {}, true};
        return f;
    };

    for (std::size_t j = 0; j < simplex.size(); ++j) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < simplex.size(); ++i)
            if (i != j) others.push_back(simplex[i]);
        HullFacet f = make_facet(others, others[0]);
        f.points = others;
        std::sort(f.points.begin(), f.points.end());
        facets.push_back(std::move(f));
    }

    std::vector<bool> in_simplex(n, false);
    for (auto i : simplex) in_simplex[i] = true;

    for (std::size_t pi = 0; pi < n; ++pi) {
        if (in_simplex[pi]) continue;
        const IntVector& p = pts[pi];
        std::vector<std::size_t> visible, coplanar, hidden;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!facets[f].alive) continue;
            int s = cmp(dot(facets[f].normal, p), facets[f].offset);
            if (s < 0)
                visible.push_back(f);
            else {
                hidden.push_back(f);
                if (s == 0) coplanar.push_back(f);
            }
        }
        if (visible.empty()) {
            for (auto f : coplanar) {
                auto& pl = facets[f].points;
                pl.insert(std::upper_bound(pl.begin(), pl.end(), pi), pi);
            }
            if (!coplanar.empty()) processed.insert(std::upper_bound(processed.begin(), processed.end(), pi), pi);
            continue;
        }
        std::vector<HullFacet> created;
        for (auto vf : visible) {
            for (auto hf : hidden) {
                std::vector<std::size_t> ridge;
                std::set_intersection(facets[vf].points.begin(), facets[vf].points.end(), facets[hf].points.begin(),
                                      facets[hf].points.end(), std::back_inserter(ridge));
                if (ridge.size() + 1 < k) continue;
                if (k >= 2 && affine_rank(pts, ridge, k) != k - 2) continue;
                if (dot(facets[hf].normal, p) == facets[hf].offset) continue;  // extended below
                HullFacet nf = make_facet(ridge, pi);
                bool duplicate = false;
                for (const auto& c : created)
                    if (c.normal == nf.normal && c.offset == nf.offset) duplicate = true;
                if (!duplicate) created.push_back(std::move(nf));
            }
        }
        for (auto f : coplanar) {
            auto& pl = facets[f].points;
            pl.insert(std::upper_bound(pl.begin(), pl.end(), pi), pi);
        }
        for (auto f : visible) facets[f].alive = false;
        processed.insert(std::upper_bound(processed.begin(), processed.end(), pi), pi);
        for (auto& nf : created) {
            bool merged = false;
            for (auto& f : facets)
                if (f.alive && f.normal == nf.normal && f.offset == nf.offset) merged = true;
            if (merged) continue;
            for (auto q : processed)
                if (dot(nf.normal, pts[q]) == nf.offset) nf.points.push_back(q);
            facets.push_back(std::move(nf));
        }
    }

    FullHull out;
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t f = 0; f < facets.size(); ++f)
        if (facets[f].alive)
            for (auto q : facets[f].points) incident[q].push_back(f);
    for (std::size_t q = 0; q < n; ++q) {
        if (incident[q].size() < k) continue;
        std::vector<IntVector> normals;
        for (auto f : incident[q]) normals.push_back(facets[f].normal);
        if (rank(normals, k) == k) out.vertices.push_back(q);
    }
    std::vector<bool> is_vertex(n, false);
    for (auto v : out.vertices) is_vertex[v] = true;
    for (auto& f : facets) {
        if (!f.alive) continue;
        std::vector<std::size_t> vs;
        for (auto q : f.points)
            if (is_vertex[q]) vs.push_back(q);
        f.points = std::move(vs);
        out.facets.push_back(std::move(f));
    }
    return out;
}

std::vector<RatVector> dedupe(std::vector<RatVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t(1) << (i % 64)); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
bool bits_empty(const Bits& b) {
    for (auto w : b)
        if (w) return false;
    return true;
}
bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : b) h = (h ^ w) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

bool LatticePolytope::has_integral_vertices() const {
    for (const auto& v : vertices_)
        if (!is_integral(v)) return false;
    return true;
}

std::vector<IntVector> LatticePolytope::integer_vertices() const {
    std::vector<IntVector> out;
    for (const auto& v : vertices_) out.push_back(to_int(v));
    return out;
}

bool LatticePolytope::contains(const RatVector& x) const {
    if (x.size() != ambient_dim_) return false;
    for (const auto& e : equations_)
        if (dot(e.normal, x) != e.value) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) < f.offset) return false;
    return true;
}

LatticePolytope LatticePolytope::translated(const RatVector& shift) const {
    std::vector<RatVector> pts;
    for (const auto& v : vertices_) pts.push_back(add(v, shift));
    return convex_hull(pts);
}

LatticePolytope LatticePolytope::scaled(const Rat& factor) const {
    std::vector<RatVector> pts;
    for (const auto& v : vertices_) {
        RatVector w = v;
        for (auto& x : w) x *= factor;
        pts.push_back(std::move(w));
    }
    return convex_hull(pts);
}

LatticePolytope convex_hull(const std::vector<RatVector>& input) {
    if (input.empty()) fail(ErrorCode::InvalidArgument, "convex hull of no points");
    const std::size_t n = input[0].size();
    for (const auto& p : input)
        if (p.size() != n) fail(ErrorCode::DimensionMismatch, "points of differing dimension");
    std::vector<RatVector> pts = dedupe(input);

    Int l = 1;
    for (const auto& p : pts) {
        Int d = lcm_of_denominators(p);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<IntVector> ipts;
    for (const auto& p : pts) {
        IntVector q(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat s = p[j] * l;
            q[j] = s.get_num();
        }
        ipts.push_back(std::move(q));
    }

    LatticePolytope out;
    out.ambient_dim_ = n;

    ZMat diffs(ipts.size() - 1, n);
    for (std::size_t i = 1; i < ipts.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = ipts[i][j] - ipts[0][j];
    out.chart_ = pivot_columns(diffs);
    const std::size_t k = out.chart_.size();
    out.dim_ = k;
    if (k < n) {
        auto normals = k == 0 ? std::vector<IntVector>{} : kernel_basis(diffs);
        if (k == 0)
            for (std::size_t i = 0; i < n; ++i) normals.push_back(unit_vector(n, i));
        for (auto& h : normals) {
            Rat value = dot(h, pts[0]);
            out.equations_.push_back({h, value});
        }
    }

    if (k == 0) {
        out.vertices_ = {pts[0]};
        return out;
    }

    std::vector<IntVector> proj;
    for (const auto& q : ipts) {
        IntVector r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = q[out.chart_[j]];
        proj.push_back(std::move(r));
    }
    FullHull hull = hull_full_dim(proj, k);

    // Vertices in sorted order (pts is sorted, so increasing index is lex order).
    std::vector<std::size_t> new_index(pts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        new_index[hull.vertices[i]] = i;
        out.vertices_.push_back(pts[hull.vertices[i]]);
    }
    for (auto& f : hull.facets) {
        Facet facet;
        facet.normal = IntVector(n, Int(0));
        for (std::size_t j = 0; j < k; ++j) facet.normal[out.chart_[j]] = f.normal[j];
        facet.offset = Rat(f.offset, l);
        facet.offset.canonicalize();
        for (auto q : f.points) facet.vertices.push_back(new_index[q]);
        std::sort(facet.vertices.begin(), facet.vertices.end());
        out.facets_.push_back(std::move(facet));
    }
    std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });
    return out;
}

LatticePolytope convex_hull(const std::vector<IntVector>& points) {
    std::vector<RatVector> pts;
    for (const auto& p : points) pts.push_back(to_rat(p));
    return convex_hull(pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) fail(ErrorCode::DimensionMismatch, "Minkowski summands differ in dimension");
    std::vector<RatVector> pts;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) pts.push_back(add(a, b));
    return convex_hull(pts);
}

LatticePolytope tracked_minkowski_sum(const std::vector<LatticePolytope>& summands) {
    if (summands.empty()) fail(ErrorCode::InvalidArgument, "Minkowski sum of no polytopes");
    const std::size_t n = summands[0].ambient_dim();
    for (const auto& s : summands)
        if (s.ambient_dim() != n) fail(ErrorCode::DimensionMismatch, "Minkowski summands differ in dimension");
    std::vector<RatVector> current = summands[0].vertices();
    std::vector<std::vector<std::size_t>> decomposition;
    for (std::size_t i = 0; i < current.size(); ++i) decomposition.push_back({i});
    LatticePolytope result = convex_hull(current);
    for (std::size_t s = 1; s < summands.size(); ++s) {
        std::map<RatVector, std::pair<std::size_t, std::size_t>> origin;
        std::vector<RatVector> candidates;
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = 0; b < summands[s].vertices().size(); ++b) {
                RatVector v = add(current[a], summands[s].vertices()[b]);
                if (origin.emplace(v, std::make_pair(a, b)).second) candidates.push_back(std::move(v));
            }
        result = convex_hull(candidates);
        std::vector<std::vector<std::size_t>> next;
        for (const auto& v : result.vertices()) {
            auto [a, b] = origin.at(v);
            auto d = decomposition[a];
            d.push_back(b);
            next.push_back(std::move(d));
        }
        current = result.vertices();
        decomposition = std::move(next);
    }
    auto tracking = std::make_shared<SummandTracking>();
    tracking->summands = summands;
    tracking->decomposition = std::move(decomposition);
    result.tracking_ = std::move(tracking);
    return result;
}

LatticePolytope face_with_vertices(const LatticePolytope& p, const std::vector<std::size_t>& ids) {
    std::vector<std::size_t> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::vector<RatVector> pts;
    for (auto i : sorted_ids) pts.push_back(p.vertices()[i]);
    LatticePolytope face = convex_hull(pts);
    if (p.tracking_) {
        auto tracking = std::make_shared<SummandTracking>();
        tracking->summands = p.tracking_->summands;
        for (auto i : sorted_ids) tracking->decomposition.push_back(p.tracking_->decomposition[i]);
        face.tracking_ = std::move(tracking);
    }
    return face;
}

LatticePolytope face_of(const LatticePolytope& p, const RatVector& w) {
    if (w.size() != p.ambient_dim()) fail(ErrorCode::DimensionMismatch, "weight length differs from dimension");
    std::vector<std::size_t> ids;
    Rat best;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        Rat v = dot(w, p.vertices()[i]);
        if (ids.empty() || v < best) {
            best = v;
            ids = {i};
        } else if (v == best) {
            ids.push_back(i);
        }
    }
    return face_with_vertices(p, ids);
}

LatticePolytope face_of(const LatticePolytope& p, const IntVector& w) { return face_of(p, to_rat(w)); }

std::vector<Face> face_lattice(const LatticePolytope& p) {
    const std::size_t nv = p.vertices().size();
    const auto& facets = p.facets();
    std::vector<Bits> facet_bits;
    for (const auto& f : facets) {
        Bits b = make_bits(nv);
        for (auto v : f.vertices) set_bit(b, v);
        facet_bits.push_back(std::move(b));
    }
    Bits all = make_bits(nv);
    for (std::size_t v = 0; v < nv; ++v) set_bit(all, v);

    std::unordered_set<Bits, BitsHash> seen{all};
    std::vector<Bits> faces{all};
    for (std::size_t head = 0; head < faces.size(); ++head) {
        for (const auto& fb : facet_bits) {
            Bits h = faces[head];
            for (std::size_t i = 0; i < h.size(); ++i) h[i] &= fb[i];
            if (bits_empty(h)) continue;
            if (seen.insert(h).second) faces.push_back(std::move(h));
        }
    }

    std::vector<Face> out;
    for (const auto& b : faces) {
        Face face;
        for (std::size_t v = 0; v < nv; ++v)
            if (test_bit(b, v)) face.vertices.push_back(v);
        std::vector<IntVector> normals;
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (subset_of(b, facet_bits[f])) {
                face.facets.push_back(f);
                normals.push_back(facets[f].normal);
            }
        std::size_t r = normals.empty() ? 0 : rank(normals, p.ambient_dim());
        face.dim = p.dim() - r;
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    return out;
}

Cone normal_cone(const LatticePolytope& p, const Face& face) {
    std::vector<IntVector> rays, lin;
    for (auto f : face.facets) rays.push_back(p.facets()[f].normal);
    for (const auto& e : p.equations()) lin.push_back(e.normal);
    return Cone(p.ambient_dim(), rays, lin);
}

std::vector<FaceData> normal_fan_cones(const LatticePolytope& p, std::size_t k) {
    const std::size_t n = p.ambient_dim();
    if (k > n) fail(ErrorCode::InvalidArgument, "cone dimension exceeds ambient dimension");
    std::vector<FaceData> out;
    if (n - k > p.dim()) return out;
    const std::size_t face_dim = n - k;
    for (const auto& face : face_lattice(p)) {
        if (face.dim != face_dim) continue;
        FaceData data{face_with_vertices(p, face.vertices), normal_cone(p, face), {}};
        if (const SummandTracking* t = p.tracking()) {
            for (std::size_t i = 0; i < t->summands.size(); ++i) {
                std::set<std::size_t> ids;
                for (auto v : face.vertices) ids.insert(t->decomposition[v][i]);
                data.summand_faces.push_back(
                    face_with_vertices(t->summands[i], std::vector<std::size_t>(ids.begin(), ids.end())));
            }
        }
        out.push_back(std::move(data));
    }
    return out;
}

std::vector<std::size_t> f_vector(const LatticePolytope& p, const std::vector<Face>& lattice) {
    std::vector<std::size_t> f(p.dim(), 0);
    for (const auto& face : lattice)
        if (face.dim < p.dim()) ++f[face.dim];
    return f;
}

std::vector<std::size_t> f_vector(const LatticePolytope& p) { return f_vector(p, face_lattice(p)); }

namespace {

// Integer point of {x : E x = c} and a basis of the integer kernel of E, via row
// Hermite form of E^T.
bool integer_affine_solution(const std::vector<AffineEquation>& eqs, std::size_t n, IntVector& particular,
                             std::vector<IntVector>& directions) {
    const std::size_t r = eqs.size();
    IntVector c(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (eqs[i].value.get_den() != 1) return false;
        c[i] = eqs[i].value.get_num();
    }
    ZMat et(n, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) et(j, i) = eqs[i].normal[j];
    NormalForm nf = lattice_normal_form(et, NormalFormKind::Hermite);
    // E U^T = H^T; the top r rows of H form an upper-triangular block T.
    IntVector y(n, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        // (H^T y)_i = sum_{j<=i} H(j,i) y_j = c_i
        Int acc = c[i];
        for (std::size_t j = 0; j < i; ++j) acc -= nf.form(j, i) * y[j];
        const Int& piv = nf.form(i, i);
        if (piv == 0) fail(ErrorCode::InvalidArgument, "dependent affine equations");
        if (acc % piv != 0) return false;
        y[i] = acc / piv;
    }
    particular = IntVector(n, Int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) particular[j] += nf.left(i, j) * y[i];
    directions.clear();
    for (std::size_t i = r; i < n; ++i) directions.push_back(nf.left.row(i));
    return true;
}

}  // namespace

std::vector<IntVector> lattice_points(const LatticePolytope& p, bool force) {
    const std::size_t n = p.ambient_dim();
    const std::size_t k = p.dim();
    std::vector<IntVector> out;
    if (k == 0) {
        if (is_integral(p.vertices()[0])) out.push_back(to_int(p.vertices()[0]));
        return out;
    }
    IntVector base;
    std::vector<IntVector> dirs;
    if (!p.equations().empty()) {
        if (!integer_affine_solution(p.equations(), n, base, dirs)) return out;
    } else {
        base = IntVector(n, Int(0));
        for (std::size_t i = 0; i < n; ++i) dirs.push_back(unit_vector(n, i));
    }

    // Coordinate subset on which the lattice projects with the smallest index.
    std::vector<std::size_t> best;
    Int best_det = 0;
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        ZMat m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = dirs[i][sel[j]];
        Int d = abs(determinant(m));
        if (d != 0 && (best_det == 0 || d < best_det)) {
            best_det = d;
            best = sel;
            if (d == 1) break;
        }
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }

    // Projections onto the first j selected coordinates.
    std::vector<LatticePolytope> proj(k);
    for (std::size_t j = 1; j <= k; ++j) {
        std::vector<RatVector> pts;
        for (const auto& v : p.vertices()) {
            RatVector q(j);
            for (std::size_t t = 0; t < j; ++t) q[t] = v[best[t]];
            pts.push_back(std::move(q));
        }
        proj[j - 1] = convex_hull(pts);
    }
    double box = 1;
    {
        for (std::size_t t = 0; t < k; ++t) {
            Rat lo = p.vertices()[0][best[t]], hi = lo;
            for (const auto& v : p.vertices()) {
                lo = std::min(lo, v[best[t]]);
                hi = std::max(hi, v[best[t]]);
            }
            Int span = floor_of(hi) - ceil_of(lo) + 1;
            box *= std::max(0.0, span.get_d());
        }
    }
    if (box > lattice_enumeration_limit && !force)
        fail(ErrorCode::LatticeEnumerationTooLarge, "bounding box exceeds the lattice enumeration limit");

    // Lift: x = base + sum y_i dirs_i, with x_S = z.
    QMat ds(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ds(j, i) = dirs[i][best[j]];
    QMat inv = inverse(ds);

    IntVector z(k);
    std::function<void(std::size_t)> recurse = [&](std::size_t level) {
        const LatticePolytope& q = proj[level];
        Rat lo, hi;
        bool has_lo = false, has_hi = false;
        for (const auto& f : q.facets()) {
            const Int& a = f.normal[level];
            if (a == 0) continue;
            Rat rest = f.offset;
            for (std::size_t t = 0; t < level; ++t) rest -= f.normal[t] * z[t];
            Rat bound = rest / a;
            if (a > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (q.dim() == 0 || !has_lo || !has_hi) {
            // Degenerate projection: every vertex shares the coordinate.
            lo = hi = q.vertices()[0][level];
        }
        for (Int v = ceil_of(lo); v <= floor_of(hi); ++v) {
            z[level] = v;
            if (level + 1 < k) {
                recurse(level + 1);
                continue;
            }
            RatVector rhs(k);
            for (std::size_t j = 0; j < k; ++j) rhs[j] = z[j] - base[best[j]];
            RatVector y(k, Rat(0));
            bool integral = true;
            for (std::size_t i = 0; i < k && integral; ++i) {
                for (std::size_t j = 0; j < k; ++j) y[i] += inv(i, j) * rhs[j];
                if (y[i].get_den() != 1) integral = false;
            }
            if (!integral) continue;
            IntVector x = base;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (dirs[i][j] != 0) x[j] += y[i].get_num() * dirs[i][j];
            out.push_back(std::move(x));
        }
    };
    recurse(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<RatVector>> triangulate(const LatticePolytope& p) {
    if (p.dim() == 0) return {{p.vertices()[0]}};
    std::vector<std::vector<RatVector>> out;
    const RatVector& apex = p.vertices()[0];
    for (const auto& f : p.facets()) {
        if (std::binary_search(f.vertices.begin(), f.vertices.end(), std::size_t(0))) continue;
        LatticePolytope face = face_with_vertices(p, f.vertices);
        for (auto& s : triangulate(face)) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

Rat normalized_volume(const LatticePolytope& p) {
    const std::size_t k = p.ambient_dim();
    if (p.dim() < k) return 0;
    Rat total = 0;
    for (const auto& s : triangulate(p)) {
        QMat m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = s[i + 1][j] - s[0][j];
        total += abs(determinant(m));
    }
    return total;
}

namespace {

std::vector<RatVector> lattice_coordinates_of(const LatticePolytope& p, const LatticeCoordinates& coords) {
    std::vector<RatVector> out;
    const RatVector& base = p.vertices()[0];
    for (const auto& v : p.vertices()) {
        auto y = coords.coordinates(sub(v, base));
        if (!y) fail(ErrorCode::LatticeMismatch, "polytope is not parallel to the lattice");
        out.push_back(std::move(*y));
    }
    return out;
}

}  // namespace

Rat normalized_volume(const LatticePolytope& p, const LatticeBasis& lattice) {
    if (p.ambient_dim() != lattice.ambient_dim) fail(ErrorCode::LatticeMismatch, "lattice dimension differs");
    LatticeCoordinates coords(lattice.basis, lattice.ambient_dim);
    auto ys = lattice_coordinates_of(p, coords);
    if (p.dim() < lattice.rank()) return 0;
    if (lattice.rank() == 0) return 1;
    return normalized_volume(convex_hull(ys));
}

Int mixed_volume(const std::vector<LatticePolytope>& faces, const LatticeBasis& lattice) {
    const std::size_t k = lattice.rank();
    if (faces.size() != k) fail(ErrorCode::LatticeMismatch, "number of polytopes differs from lattice rank");
    if (k == 0) return 1;
    LatticeCoordinates coords(lattice.basis, lattice.ambient_dim);
    std::vector<std::vector<RatVector>> local;
    for (const auto& f : faces) {
        if (f.ambient_dim() != lattice.ambient_dim) fail(ErrorCode::LatticeMismatch, "lattice dimension differs");
        local.push_back(lattice_coordinates_of(f, coords));
    }
    Rat total = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        std::vector<RatVector> sum{RatVector(k, Rat(0))};
        std::size_t size = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            ++size;
            std::vector<RatVector> next;
            for (const auto& a : sum)
                for (const auto& b : local[i]) next.push_back(add(a, b));
            sum = convex_hull(next).vertices();
        }
        Rat vol = normalized_volume(convex_hull(sum));
        if ((k - size) % 2 == 0)
            total += vol;
        else
            total -= vol;
    }
    Int fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    Rat mv = total / fact;
    if (mv.get_den() != 1 || mv < 0) fail(ErrorCode::LatticeMismatch, "mixed volume is not a nonnegative integer");
    return mv.get_num();
}

}  // namespace tropimpl
