#include "tropimpl/implicitize.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"
#include "tropimpl/matroid.hpp"
#include "tropimpl/parallel.hpp"

#include <map>
#include <set>

namespace tropimpl {

namespace {

int sign_of(const Int& x) { return sgn(x); }

}  // namespace

TropicalCycle get_graph_cycle(const std::vector<LatticePolytope>& polytopes) {
    if (polytopes.empty()) fail(ErrorCode::InvalidArgument, "no Newton polytopes given");
    const std::size_t n = polytopes.size();
    const std::size_t d = polytopes[0].ambient_dim();
    if (d < 1) fail(ErrorCode::InvalidArgument, "parameter dimension must be positive");
    std::vector<LatticePolytope> lifted;
    for (std::size_t i = 0; i < n; ++i) {
        if (polytopes[i].ambient_dim() != d) fail(ErrorCode::DimensionMismatch, "Newton polytopes differ in dimension");
        std::vector<RatVector> pts;
        RatVector e(n + d, Rat(0));
        e[i] = 1;
        pts.push_back(e);
        for (const auto& v : polytopes[i].vertices()) {
            RatVector p(n + d, Rat(0));
            for (std::size_t j = 0; j < d; ++j) p[n + j] = v[j];
            pts.push_back(p);
        }
        lifted.push_back(convex_hull(pts));
    }
    LatticePolytope sum = tracked_minkowski_sum(lifted);
    std::vector<FaceData> cones = normal_fan_cones(sum, d);
    std::vector<Int> weights(cones.size());
    parallel_for(cones.size(), [&](std::size_t k) {
        const auto& verts = cones[k].face.integer_vertices();
        std::vector<IntVector> diffs;
        for (std::size_t j = 1; j < verts.size(); ++j) diffs.push_back(sub(verts[j], verts[0]));
        LatticeBasis lattice = saturate(diffs, n + d);
        weights[k] = mixed_volume(cones[k].summand_faces, lattice);
    });
    TropicalCycle out;
    out.ambient_dim = n + d;
    out.pure_dim = d;
    for (std::size_t k = 0; k < cones.size(); ++k)
        if (weights[k] > 0) out.items.push_back({cones[k].normal_cone, weights[k]});
    sort_items(out);
    return out;
}

TropicalCycle get_tropical_cycle(const std::vector<LatticePolytope>& polytopes, const Int& delta) {
    if (delta < 1) fail(ErrorCode::InvalidArgument, "fiber degree must be positive");
    TropicalCycle graph = get_graph_cycle(polytopes);
    const std::size_t n = polytopes.size();
    const std::size_t d = graph.pure_dim;
    ZMat proj(n, n + d);
    for (std::size_t i = 0; i < n; ++i) proj(i, i) = 1;
    TropicalCycle image = push_forward_cycle(graph, proj, d);
    if (delta == 1) return image;

    // Weights are only meaningful per cone direction once the fiber degree is divided
    // out, so identical cones are merged first.
    TropicalCycle merged;
    merged.ambient_dim = image.ambient_dim;
    merged.pure_dim = image.pure_dim;
    for (const auto& item : image.items) {
        bool found = false;
        for (auto& m : merged.items)
            if (same_cone(m.cone, item.cone)) {
                m.weight += item.weight;
                found = true;
                break;
            }
        if (!found) merged.items.push_back(item);
    }
    for (auto& m : merged.items) {
        if (m.weight % delta != 0)
            fail(ErrorCode::NonDivisibleDegree, "cone weight " + m.weight.get_str() + " is not divisible by " +
                                                    delta.get_str());
        m.weight /= delta;
    }
    sort_items(merged);
    return merged;
}

void check_discriminant_matrix(const ZMat& a) {
    const std::size_t d = a.rows(), n = a.cols();
    if (d == 0 || n == 0) fail(ErrorCode::InvalidArgument, "empty matrix");
    if (rank(a) != d) fail(ErrorCode::RankDeficient, "A does not have full row rank");
    ZMat ext(d + 1, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) ext(i, j) = a(i, j);
    for (std::size_t j = 0; j < n; ++j) ext(d, j) = 1;
    if (rank(ext) != d) fail(ErrorCode::RowSpanMissingOnes, "(1,...,1) is not in the row span of A");
}

TropicalCycle get_trop_a_disc(const ZMat& a) {
    check_discriminant_matrix(a);
    const std::size_t d = a.rows(), n = a.cols();
    ZMat b = gale_dual(a);
    const std::size_t k = b.rows();
    ZMat u(n + d, k + d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) u(i, j) = b(j, i);
    for (std::size_t i = 0; i < d; ++i) u(n + i, k + i) = 1;
    ZMat v(n, n + d);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = 1;
        for (std::size_t j = 0; j < d; ++j) v(i, n + j) = a(j, i);
    }
    TropicalCycle fan = bergman_fan(LinearMatroid(u), BergmanStructure::Coarse);
    return push_forward_cycle(fan, v, n - 1);
}

VertexOracle::VertexOracle(const TropicalCycle& c) : n_(c.ambient_dim) {
    if (n_ == 0 || c.pure_dim + 1 != n_)
        fail(ErrorCode::DimensionMismatch, "vertex oracle needs a cycle of codimension one");
    IntVector bounds(n_, Int(0));
    for (const auto& item : c.items) {
        Prepared p;
        p.normal = hyperplane_normal(item.cone.generators(), n_);
        p.facets = item.cone.facet_normals();
        p.weight = item.weight;
        for (std::size_t i = 0; i < n_; ++i) bounds[i] += p.weight * abs(p.normal[i]);
        cones_.push_back(std::move(p));
    }
    for (const auto& b : bounds) bound_sum_ += b;
}

std::optional<IntVector> VertexOracle::generic_vertex(const IntVector& w) const {
    if (w.size() != n_) fail(ErrorCode::DimensionMismatch, "weight vector has wrong length");
    IntVector out(n_, Int(0));
    std::vector<Int> hw;
    for (const auto& cone : cones_) {
        const Int nw = dot(cone.normal, w);
        hw.clear();
        for (const auto& h : cone.facets) hw.push_back(dot(h, w));
        for (std::size_t i = 0; i < n_; ++i) {
            const Int& ni = cone.normal[i];
            if (ni == 0) {
                // Ray parallel to the span: it either misses or lies in the span.
                if (nw == 0) return std::nullopt;
                continue;
            }
            // The ray w + s e_i meets the span at s = -nw / ni.
            const int s_sign = -sign_of(nw) * sign_of(ni);
            if (s_sign < 0) continue;
            bool inside = true, boundary = false;
            for (std::size_t f = 0; f < cone.facets.size(); ++f) {
                // h·(w + s e_i) scaled by ni.
                Int val = hw[f] * ni - nw * cone.facets[f][i];
                int side = sign_of(val) * sign_of(ni);
                if (side < 0) {
                    inside = false;
                    break;
                }
                if (side == 0) boundary = true;
            }
            if (!inside) continue;
            if (boundary || s_sign == 0) return std::nullopt;
            out[i] += cone.weight * abs(ni);
        }
    }
    return out;
}

IntVector VertexOracle::vertex(const IntVector& w, const OracleConfig& cfg) const {
    if (cfg.perturbation_height < 1) fail(ErrorCode::InvalidArgument, "perturbation height must be positive");
    bool zero = true;
    for (const auto& x : w)
        if (x != 0) zero = false;
    if (zero) fail(ErrorCode::InvalidArgument, "weight vector must be nonzero");
    if (auto v = generic_vertex(w)) return *v;
    // A perturbation w' = K w + delta with |delta_i| <= H and K > H * (sum of coordinate
    // bounds) keeps every strict inequality of w between vertices, so the vertex
    // minimizing w' also minimizes w.
    const Int height = Int(static_cast<long>(cfg.perturbation_height));
    const Int scale = 1 + height * bound_sum_;
    IntVector scaled = w;
    for (auto& x : scaled) x *= scale;
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Rng rng(derive_seed(cfg.rng_seed, streams::oracle_perturbation, attempt));
        IntVector trial = scaled;
        for (auto& x : trial) {
            Int delta = rng.uniform(1, cfg.perturbation_height);
            x += rng.coin() ? delta : Int(-delta);
        }
        if (auto v = generic_vertex(trial)) return *v;
    }
    fail(ErrorCode::GenericityExhausted, "no generic perturbation found after " + std::to_string(cfg.max_retries) +
                                             " retries");
}

IntVector get_vertex(const TropicalCycle& c, const IntVector& w, const OracleConfig& cfg) {
    return VertexOracle(c).vertex(w, cfg);
}

namespace {

struct Certificate {
    IntVector normal;
    Int value;
};

// Smallest positive integer multiple of a rational vector.
IntVector positive_primitive(const RatVector& v) {
    Int l = lcm_of_denominators(v);
    IntVector out;
    for (const auto& x : v) out.push_back(Int(x * l));
    Int g = gcd_of(out);
    if (g != 0)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace

LatticePolytope reconstruct_polytope(const TropicalCycle& c, const OracleConfig& cfg, ReconstructionStats* stats) {
    const VertexOracle oracle(c);
    const std::size_t n = oracle.ambient_dim();
    std::set<IntVector> found;
    std::vector<Certificate> certificates;
    std::set<std::pair<IntVector, Int>> confirmed;
    ReconstructionStats local;

    auto check = [&](const IntVector& v) {
        for (const auto& cert : certificates)
            if (dot(cert.normal, v) < cert.value)
                fail(ErrorCode::OracleInconsistent, "vertex " + to_string(v) + " violates a confirmed facet");
    };
    auto query_all = [&](const std::vector<IntVector>& dirs) {
        std::vector<IntVector> results(dirs.size());
        parallel_for(dirs.size(), [&](std::size_t k) { results[k] = oracle.vertex(dirs[k], cfg); });
        local.queries += dirs.size();
        for (const auto& v : results) check(v);
        return results;
    };

    std::vector<IntVector> initial;
    for (std::size_t i = 0; i < n; ++i) {
        initial.push_back(unit_vector(n, i));
        initial.push_back(negate(unit_vector(n, i)));
    }
    Rng rng(derive_seed(cfg.rng_seed, streams::reconstruction));
    for (std::size_t k = 0; k < n; ++k) {
        IntVector w(n);
        bool zero = true;
        while (zero) {
            for (auto& x : w) {
                x = rng.uniform(-1000, 1000);
                if (x != 0) zero = false;
            }
        }
        initial.push_back(w);
    }
    for (const auto& v : query_all(initial)) found.insert(v);

    while (true) {
        ++local.rounds;
        const IntVector base = *found.begin();
        std::vector<IntVector> diffs;
        for (const auto& v : found) diffs.push_back(sub(v, base));
        LatticeBasis span = saturate(diffs, n);
        const std::size_t k = span.rank();

        std::vector<IntVector> dirs;
        std::vector<Int> values;
        if (k > 0) {
            LatticeCoordinates coords(span.basis, n);
            std::vector<RatVector> local_pts;
            std::vector<IntVector> found_list(found.begin(), found.end());
            for (const auto& v : found_list) local_pts.push_back(coords.coordinates_in_span(to_rat(sub(v, base))));
            LatticePolytope hull = convex_hull(local_pts);
            QMat gram(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) gram(i, j) = Rat(dot(span.basis[i], span.basis[j]));
            QMat gram_inv = inverse(gram);
            for (const auto& facet : hull.facets()) {
                RatVector coeff(k, Rat(0));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) coeff[i] += gram_inv(i, j) * facet.normal[j];
                RatVector lifted(n, Rat(0));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < n; ++j) lifted[j] += coeff[i] * span.basis[i][j];
                IntVector w = positive_primitive(lifted);
                Int value = dot(w, found_list[facet.vertices.front()]);
                if (confirmed.count({w, value})) continue;
                dirs.push_back(w);
                values.push_back(value);
            }
        }
        bool grew = false;
        if (!dirs.empty()) {
            auto results = query_all(dirs);
            for (std::size_t j = 0; j < dirs.size(); ++j) {
                if (found.insert(results[j]).second) {
                    grew = true;
                } else if (dot(dirs[j], results[j]) >= values[j]) {
                    confirmed.insert({dirs[j], values[j]});
                    certificates.push_back({dirs[j], values[j]});
                }
            }
        }
        if (grew) continue;

        // All facets are confirmed; re-verify the affine hull in both directions of
        // every equation.
        std::vector<IntVector> eq_dirs;
        ZMat span_mat(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) span_mat(i, j) = span.basis[i][j];
        std::vector<IntVector> equations =
            k == 0 ? std::vector<IntVector>{} : integer_kernel(span_mat);
        if (k == 0)
            for (std::size_t i = 0; i < n; ++i) equations.push_back(unit_vector(n, i));
        for (const auto& h : equations) {
            eq_dirs.push_back(h);
            eq_dirs.push_back(negate(h));
        }
        for (const auto& v : query_all(eq_dirs))
            if (found.insert(v).second) grew = true;
        if (!grew) break;
    }
    if (stats) *stats = local;
    return convex_hull(std::vector<IntVector>(found.begin(), found.end()));
}

}  // namespace tropimpl
