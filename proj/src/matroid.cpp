#include "tropimpl/matroid.hpp"

#include "tropimpl/errors.hpp"
#include "tropimpl/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tropimpl {

namespace {

class RankMemo {
public:
    explicit RankMemo(const LinearMatroid& m) : m_(m) {}
    std::size_t operator()(std::uint64_t s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        std::size_t r = m_.rank_of(s);
        cache_.emplace(s, r);
        return r;
    }
    std::uint64_t closure(std::uint64_t s) {
        const std::size_t r = (*this)(s);
        std::uint64_t out = s;
        for (std::size_t e = 0; e < m_.ground_size(); ++e) {
            std::uint64_t bit = std::uint64_t(1) << e;
            if (s & bit) continue;
            if ((*this)(s | bit) == r) out |= bit;
        }
        return out;
    }

private:
    const LinearMatroid& m_;
    std::unordered_map<std::uint64_t, std::size_t> cache_;
};

std::vector<std::vector<std::uint64_t>> flats_by_rank(const LinearMatroid& m, RankMemo& memo) {
    std::vector<std::vector<std::uint64_t>> levels;
    levels.push_back({memo.closure(0)});
    for (std::size_t r = 0; r < m.rank(); ++r) {
        std::set<std::uint64_t> next;
        for (auto f : levels[r])
            for (std::size_t e = 0; e < m.ground_size(); ++e) {
                std::uint64_t bit = std::uint64_t(1) << e;
                if (f & bit) continue;
                next.insert(memo.closure(f | bit));
            }
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

std::vector<std::vector<std::uint64_t>> chains_of(const std::vector<std::vector<std::uint64_t>>& levels,
                                                  std::size_t r) {
    std::vector<std::vector<std::uint64_t>> chains;
    if (r == 0) return chains;
    // Chains F_1 ⊊ ... ⊊ F_{r-1} with rank(F_i) = i.
    std::vector<std::uint64_t> chain;
    auto walk = [&](auto&& self, std::uint64_t f, std::size_t level) -> void {
        if (level == r) {
            chains.push_back(chain);
            return;
        }
        for (auto g : levels[level])
            if ((g & f) == f) {
                chain.push_back(g);
                self(self, g, level + 1);
                chain.pop_back();
            }
    };
    walk(walk, levels[0][0], 1);
    return chains;
}

}  // namespace

LinearMatroid::LinearMatroid(QMat realization) : realization_(std::move(realization)) {
    m_ = realization_.rows();
    if (m_ > 64) fail(ErrorCode::InvalidArgument, "matroid ground set exceeds 64 elements");
    rank_ = tropimpl::rank(realization_);
}

std::size_t LinearMatroid::rank_of(std::uint64_t subset) const {
    const std::size_t k = static_cast<std::size_t>(std::popcount(subset));
    if (k == 0) return 0;
    QMat sub(k, realization_.cols());
    std::size_t r = 0;
    for (std::size_t e = 0; e < m_; ++e)
        if (subset >> e & 1) {
            for (std::size_t j = 0; j < realization_.cols(); ++j) sub(r, j) = realization_(e, j);
            ++r;
        }
    return tropimpl::rank(sub);
}

std::uint64_t LinearMatroid::closure(std::uint64_t subset) const {
    RankMemo memo(*this);
    return memo.closure(subset);
}

std::vector<std::vector<std::uint64_t>> LinearMatroid::flats() const {
    RankMemo memo(*this);
    return flats_by_rank(*this, memo);
}

std::vector<std::vector<std::uint64_t>> LinearMatroid::maximal_chains() const {
    RankMemo memo(*this);
    auto levels = flats_by_rank(*this, memo);
    return chains_of(levels, rank_);
}

bool LinearMatroid::has_loops() const {
    for (std::size_t e = 0; e < m_; ++e)
        if (rank_of(std::uint64_t(1) << e) == 0) return true;
    return false;
}

std::vector<std::uint64_t> LinearMatroid::bases() const {
    std::vector<std::uint64_t> out;
    if (rank_ == 0) return {0};
    std::uint64_t s = (std::uint64_t(1) << rank_) - 1;
    const std::uint64_t limit = m_ == 64 ? 0 : (std::uint64_t(1) << m_);
    while (true) {
        if (rank_of(s) == rank_) out.push_back(s);
        // Gosper's hack: next subset of the same size.
        std::uint64_t c = s & (~s + 1);
        std::uint64_t r = s + c;
        if (r == 0) break;
        s = (((r ^ s) >> 2) / c) | r;
        if (limit && s >= limit) break;
    }
    return out;
}

std::vector<std::uint64_t> LinearMatroid::components() const {
    std::vector<std::size_t> parent(m_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Greedy basis.
    std::uint64_t basis = 0;
    std::size_t r = 0;
    for (std::size_t e = 0; e < m_; ++e) {
        std::uint64_t bit = std::uint64_t(1) << e;
        if (rank_of(basis | bit) > r) {
            basis |= bit;
            ++r;
        }
    }
    for (std::size_t e = 0; e < m_; ++e) {
        std::uint64_t bit = std::uint64_t(1) << e;
        if (basis & bit) continue;
        if (rank_of(bit) == 0) continue;  // loop
        for (std::size_t b = 0; b < m_; ++b) {
            std::uint64_t bb = std::uint64_t(1) << b;
            if (!(basis & bb)) continue;
            if (rank_of((basis & ~bb) | bit) == rank_) parent[find(e)] = find(b);
        }
    }
    std::map<std::size_t, std::uint64_t> groups;
    for (std::size_t e = 0; e < m_; ++e) groups[find(e)] |= std::uint64_t(1) << e;
    std::vector<std::uint64_t> out;
    for (auto& [root, mask] : groups) out.push_back(mask);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return out;
}

LinearMatroid LinearMatroid::restriction(std::uint64_t subset) const {
    const std::size_t k = static_cast<std::size_t>(std::popcount(subset));
    QMat sub(k, realization_.cols());
    std::size_t r = 0;
    for (std::size_t e = 0; e < m_; ++e)
        if (subset >> e & 1) {
            for (std::size_t j = 0; j < realization_.cols(); ++j) sub(r, j) = realization_(e, j);
            ++r;
        }
    return LinearMatroid(std::move(sub));
}

namespace {

IntVector indicator(std::uint64_t mask, std::size_t m) {
    IntVector v(m, Int(0));
    for (std::size_t e = 0; e < m; ++e)
        if (mask >> e & 1) v[e] = 1;
    return v;
}

std::uint64_t expand(std::uint64_t local, const std::vector<std::size_t>& elements) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (local >> i & 1) out |= std::uint64_t(1) << elements[i];
    return out;
}

// Ray sets (as global flat masks) of the coarse cones of one connected component.
std::vector<std::vector<std::uint64_t>> coarse_component_cones(const LinearMatroid& m, std::uint64_t component) {
    std::vector<std::size_t> elements;
    for (std::size_t e = 0; e < m.ground_size(); ++e)
        if (component >> e & 1) elements.push_back(e);
    LinearMatroid local = m.restriction(component);
    if (local.rank() <= 1) return {{}};
    RankMemo memo(local);
    auto levels = flats_by_rank(local, memo);
    auto chains = chains_of(levels, local.rank());
    auto bases = local.bases();
    std::map<std::vector<std::uint64_t>, std::size_t> group_of;
    std::vector<std::set<std::uint64_t>> groups;
    for (const auto& chain : chains) {
        std::vector<std::uint64_t> key;
        for (auto b : bases) {
            bool adapted = true;
            for (std::size_t i = 0; i < chain.size() && adapted; ++i)
                if (static_cast<std::size_t>(std::popcount(b & chain[i])) != i + 1) adapted = false;
            if (adapted) key.push_back(b);
        }
        auto [it, inserted] = group_of.emplace(key, groups.size());
        if (inserted) groups.emplace_back();
        for (auto f : chain) groups[it->second].insert(expand(f, elements));
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& g : groups) out.emplace_back(g.begin(), g.end());
    return out;
}

}  // namespace

TropicalCycle bergman_fan(const LinearMatroid& m, BergmanStructure structure) {
    if (m.has_loops()) fail(ErrorCode::LoopyMatroid, "matroid has loops");
    const std::size_t n = m.ground_size();
    TropicalCycle out;
    out.ambient_dim = n;
    out.pure_dim = m.rank();
    if (structure == BergmanStructure::Fine) {
        std::vector<IntVector> lin{IntVector(n, Int(1))};
        for (const auto& chain : m.maximal_chains()) {
            std::vector<IntVector> rays;
            for (auto f : chain) rays.push_back(indicator(f, n));
            out.items.push_back({Cone(n, rays, lin), Int(1)});
        }
        sort_items(out);
        return out;
    }
    auto comps = m.components();
    std::vector<IntVector> lin;
    for (auto c : comps) lin.push_back(indicator(c, n));
    std::vector<std::vector<std::vector<std::uint64_t>>> per_component;
    for (auto c : comps) per_component.push_back(coarse_component_cones(m, c));
    std::vector<std::size_t> choice(comps.size(), 0);
    while (true) {
        std::vector<IntVector> rays;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (auto f : per_component[i][choice[i]]) rays.push_back(indicator(f, n));
        out.items.push_back({Cone(n, rays, lin), Int(1)});
        std::size_t i = 0;
        while (i < comps.size() && ++choice[i] == per_component[i].size()) choice[i++] = 0;
        if (i == comps.size()) break;
    }
    sort_items(out);
    return out;
}

}  // namespace tropimpl
