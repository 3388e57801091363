#include "tropimpl/cycle.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>

namespace tropimpl {

void validate_cycle(const TropicalCycle& c) {
    for (const auto& it : c.items) {
        if (it.weight <= 0) fail(ErrorCode::InvalidArgument, "cycle weights must be positive");
        if (it.cone.ambient_dim() != c.ambient_dim) fail(ErrorCode::DimensionMismatch, "cone ambient dimension differs");
        if (it.cone.dim() != c.pure_dim) fail(ErrorCode::DimensionMismatch, "cone dimension differs from pure dimension");
    }
}

void sort_items(TropicalCycle& c) {
    std::stable_sort(c.items.begin(), c.items.end(), [](const WeightedCone& a, const WeightedCone& b) {
        if (a.cone.rays() != b.cone.rays()) return a.cone.rays() < b.cone.rays();
        if (a.cone.lineality() != b.cone.lineality()) return a.cone.lineality() < b.cone.lineality();
        return a.weight < b.weight;
    });
}

TropicalCycle push_forward_cycle(const TropicalCycle& c, const ZMat& v, std::optional<std::size_t> target_dim) {
    if (v.cols() != c.ambient_dim) fail(ErrorCode::DimensionMismatch, "map does not match cycle dimension");
    TropicalCycle out;
    out.ambient_dim = v.rows();
    out.pure_dim = target_dim.value_or(c.pure_dim);
    for (const auto& it : c.items) {
        Cone image = it.cone.image(v);
        if (image.dim() != out.pure_dim) continue;
        std::vector<IntVector> gens;
        for (const auto& b : it.cone.span_lattice().basis) gens.push_back(v * b);
        Int index = generated_lattice_index(gens, out.ambient_dim);
        out.items.push_back({std::move(image), it.weight * index});
    }
    sort_items(out);
    return out;
}

TropicalCycle stable_sum(const TropicalCycle& c, const TropicalCycle& d) {
    if (c.ambient_dim != d.ambient_dim) fail(ErrorCode::DimensionMismatch, "stable sum of cycles in different spaces");
    const std::size_t n = c.ambient_dim;
    TropicalCycle out;
    out.ambient_dim = n;
    // Expected dimension uses the common lineality of the two cycles.
    auto common_lineality_dim = [&](const Cone& a, const Cone& b) -> std::size_t {
        const std::size_t la = a.lineality().size(), lb = b.lineality().size();
        if (la == 0 || lb == 0) return 0;
        auto both = a.lineality();
        both.insert(both.end(), b.lineality().begin(), b.lineality().end());
        return la + lb - rank(both, n);
    };
    bool first = true;
    for (const auto& a : c.items) {
        auto la = a.cone.span_lattice().basis;
        for (const auto& b : d.items) {
            const std::size_t expected = a.cone.dim() + b.cone.dim() - common_lineality_dim(a.cone, b.cone);
            if (first) {
                out.pure_dim = expected;
                first = false;
            }
            Cone s = cone_sum(a.cone, b.cone);
            if (s.dim() != expected) continue;
            auto gens = la;
            auto lb = b.cone.span_lattice().basis;
            gens.insert(gens.end(), lb.begin(), lb.end());
            Int index = generated_lattice_index(gens, n);
            out.items.push_back({std::move(s), a.weight * b.weight * index});
        }
    }
    if (first) out.pure_dim = c.pure_dim + d.pure_dim;
    sort_items(out);
    return out;
}

TropicalCycle standard_linear_cycle(std::size_t k, std::size_t n, bool negated_flag) {
    if (k > n) fail(ErrorCode::InvalidArgument, "linear cycle dimension exceeds ambient dimension");
    const std::size_t m = n + 1;
    TropicalCycle out;
    out.ambient_dim = m;
    out.pure_dim = k + 1;
    std::vector<IntVector> lin{IntVector(m, Int(1))};
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        std::vector<IntVector> rays;
        for (auto i : sel) {
            IntVector e = unit_vector(m, i);
            rays.push_back(negated_flag ? negate(e) : e);
        }
        out.items.push_back({Cone(m, rays, lin), Int(1)});
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    sort_items(out);
    return out;
}

TropicalCycle tropical_hypersurface(const LatticePolytope& p) {
    const std::size_t n = p.ambient_dim();
    TropicalCycle out;
    out.ambient_dim = n;
    out.pure_dim = n - 1;
    for (const auto& face : face_lattice(p)) {
        if (face.dim != 1) continue;
        RatVector edge = sub(p.vertices()[face.vertices.back()], p.vertices()[face.vertices.front()]);
        Rat len = 0;
        {
            IntVector scaled = canonical_scale(edge);
            // edge = t * scaled with t rational; lattice length is |t| when integral.
            for (std::size_t i = 0; i < n; ++i)
                if (scaled[i] != 0) {
                    len = abs(edge[i] / scaled[i]);
                    break;
                }
        }
        if (len.get_den() != 1) fail(ErrorCode::InvalidArgument, "edge with non-integral lattice length");
        out.items.push_back({normal_cone(p, face), len.get_num()});
    }
    sort_items(out);
    return out;
}

TropicalCycle negated(const TropicalCycle& c) {
    TropicalCycle out = c;
    for (auto& it : out.items) it.cone = it.cone.negated();
    sort_items(out);
    return out;
}

TropicalCycle homogenize(const TropicalCycle& c) {
    const std::size_t m = c.ambient_dim + 1;
    TropicalCycle out;
    out.ambient_dim = m;
    out.pure_dim = c.pure_dim + 1;
    auto lift = [&](const IntVector& v) {
        IntVector w(m, Int(0));
        for (std::size_t i = 0; i < v.size(); ++i) w[i + 1] = v[i];
        return w;
    };
    for (const auto& it : c.items) {
        std::vector<IntVector> rays, lin{IntVector(m, Int(1))};
        for (const auto& r : it.cone.rays()) rays.push_back(lift(r));
        for (const auto& l : it.cone.lineality()) lin.push_back(lift(l));
        out.items.push_back({Cone(m, rays, lin), it.weight});
    }
    sort_items(out);
    return out;
}

}  // namespace tropimpl
