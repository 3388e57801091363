#include "tropimpl/cone.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>

namespace tropimpl {

Cone::Cone(std::size_t ambient_dim, std::vector<IntVector> rays, std::vector<IntVector> lineality)
    : ambient_dim_(ambient_dim) {
    for (const auto& v : rays)
        if (v.size() != ambient_dim) fail(ErrorCode::DimensionMismatch, "ray length differs from ambient dimension");
    for (const auto& v : lineality)
        if (v.size() != ambient_dim) fail(ErrorCode::DimensionMismatch, "lineality length differs from ambient dimension");
    lineality_ = saturate(lineality, ambient_dim).basis;
    const std::size_t lin_rank = lineality_.size();
    for (auto& r : rays) {
        if (is_zero(r)) continue;
        IntVector p = primitive(r);
        if (lin_rank > 0) {
            auto gens = lineality_;
            gens.push_back(p);
            if (rank(gens, ambient_dim) == lin_rank) continue;
        }
        rays_.push_back(std::move(p));
    }
    std::sort(rays_.begin(), rays_.end());
    rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
    dim_ = rank(generators(), ambient_dim);
}

std::vector<IntVector> Cone::generators() const {
    std::vector<IntVector> g = rays_;
    g.insert(g.end(), lineality_.begin(), lineality_.end());
    return g;
}

LatticeBasis Cone::span_lattice() const { return saturate(generators(), ambient_dim_); }

std::vector<IntVector> Cone::span_normals() const {
    auto gens = generators();
    if (gens.empty()) {
        std::vector<IntVector> all;
        for (std::size_t i = 0; i < ambient_dim_; ++i) all.push_back(unit_vector(ambient_dim_, i));
        return all;
    }
    return integer_kernel(ZMat::from_rows(gens, ambient_dim_));
}

std::vector<IntVector> Cone::facet_normals() const {
    const std::size_t lin = lineality_.size();
    if (dim_ == lin) return {};
    const std::size_t pick = dim_ - lin - 1;
    const auto normals = span_normals();
    std::vector<IntVector> facets;
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    const std::size_t m = rays_.size();
    while (true) {
        std::vector<IntVector> eqs = lineality_;
        for (auto i : idx) eqs.push_back(rays_[i]);
        if (rank(eqs, ambient_dim_) == dim_ - 1) {
            eqs.insert(eqs.end(), normals.begin(), normals.end());
            auto k = integer_kernel(ZMat::from_rows(eqs, ambient_dim_));
            if (k.size() == 1) {
                IntVector h = primitive(k[0]);
                bool pos = false, neg = false;
                for (const auto& r : rays_) {
                    int s = sgn(dot(h, r));
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                }
                if (!(pos && neg)) {
                    if (neg) h = negate(std::move(h));
                    if (std::find(facets.begin(), facets.end(), h) == facets.end()) facets.push_back(h);
                }
            }
        }
        // next combination
        std::size_t i = pick;
        while (i > 0 && idx[i - 1] == m - pick + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

bool Cone::contains(const RatVector& x) const {
    for (const auto& h : span_normals())
        if (dot(h, x) != 0) return false;
    for (const auto& h : facet_normals())
        if (dot(h, x) < 0) return false;
    return true;
}

bool Cone::in_relative_interior(const RatVector& x) const {
    for (const auto& h : span_normals())
        if (dot(h, x) != 0) return false;
    for (const auto& h : facet_normals())
        if (dot(h, x) <= 0) return false;
    return true;
}

IntVector Cone::interior_point() const {
    IntVector s(ambient_dim_, Int(0));
    for (const auto& r : rays_) s = add(s, r);
    return s;
}

Cone Cone::negated() const {
    std::vector<IntVector> r;
    for (const auto& v : rays_) r.push_back(tropimpl::negate(v));
    return Cone(ambient_dim_, r, lineality_);
}

Cone Cone::image(const ZMat& map) const {
    if (map.cols() != ambient_dim_) fail(ErrorCode::DimensionMismatch, "map does not match cone dimension");
    std::vector<IntVector> r, l;
    for (const auto& v : rays_) r.push_back(map * v);
    for (const auto& v : lineality_) l.push_back(map * v);
    return Cone(map.rows(), r, l);
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& l : a.lineality())
        if (!b.contains(negate(l))) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    for (const auto& l : b.lineality())
        if (!a.contains(negate(l))) return false;
    return true;
}

Cone cone_sum(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) fail(ErrorCode::DimensionMismatch, "cone dimensions differ");
    auto r = a.rays();
    r.insert(r.end(), b.rays().begin(), b.rays().end());
    auto l = a.lineality();
    l.insert(l.end(), b.lineality().begin(), b.lineality().end());
    return Cone(a.ambient_dim(), r, l);
}

}  // namespace tropimpl
