#include "hkface/shelling.hpp"

#include <algorithm>
#include <unordered_set>

namespace hkface {

namespace {

// Incremental test used by the search: facet cand may follow the facets in
// prefix iff for every earlier facet there is an earlier facet whose
// intersection with cand has size |cand|-1 and contains the first
// intersection. Covers 1-vertex facets uniformly (the empty face is their
// codimension-1 face).
bool can_append(const std::vector<VertexSet>& facets, const std::vector<int>& prefix, int cand) {
    const VertexSet F = facets[static_cast<size_t>(cand)];
    const int target = popcount(F) - 1;
    for (int i : prefix) {
        const VertexSet I = F & facets[static_cast<size_t>(i)];
        bool dominated = false;
        for (int ip : prefix) {
            const VertexSet Ip = F & facets[static_cast<size_t>(ip)];
            if (popcount(Ip) == target && (I & Ip) == I) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

bool dfs(const std::vector<VertexSet>& facets, std::vector<int>& prefix, std::vector<bool>& used) {
    if (prefix.size() == facets.size()) return true;
    for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        if (!prefix.empty() && !can_append(facets, prefix, i)) continue;
        used[static_cast<size_t>(i)] = true;
        prefix.push_back(i);
        if (dfs(facets, prefix, used)) return true;
        prefix.pop_back();
        used[static_cast<size_t>(i)] = false;
    }
    return false;
}

}  // namespace

ShellingResult is_shellable(const SimplicialComplex& c, int max_facets) {
    const auto& facets = c.facet_masks();
    if (static_cast<int>(facets.size()) > max_facets) return {ShellStatus::undecided, {}};
    if (facets.size() == 1) return {ShellStatus::shellable, {0}};

    // Candidates tried in index order, so the first complete order found is
    // the lexicographically least valid one.
    std::vector<int> prefix;
    std::vector<bool> used(facets.size(), false);
    if (dfs(facets, prefix, used)) return {ShellStatus::shellable, prefix};
    return {ShellStatus::not_shellable, {}};
}

bool verify_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
    const auto& facets = c.facet_masks();
    if (order.size() != facets.size()) return false;
    {
        std::unordered_set<int> seen(order.begin(), order.end());
        if (seen.size() != facets.size()) return false;
        for (int i : order)
            if (i < 0 || i >= static_cast<int>(facets.size())) return false;
    }

    for (size_t j = 1; j < order.size(); ++j) {
        const VertexSet F = facets[static_cast<size_t>(order[j])];
        const int m = popcount(F);

        // Faces of <F> ∩ <earlier facets>: all subsets of the pairwise
        // intersections.
        std::unordered_set<VertexSet> inter_faces;
        for (size_t i = 0; i < j; ++i) {
            const VertexSet I = F & facets[static_cast<size_t>(order[i])];
            VertexSet sub = I;
            while (true) {
                inter_faces.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & I;
            }
        }

        if (m == 1) {
            // codim-1 face is the empty face; the intersection must be {∅}
            if (inter_faces != std::unordered_set<VertexSet>{0}) return false;
            continue;
        }

        // codim-1 faces of F that are present
        std::vector<VertexSet> present;
        for (int v : set_to_vertices(F)) {
            VertexSet cf = F & ~(VertexSet{1} << (v - 1));
            if (inter_faces.count(cf)) present.push_back(cf);
        }
        if (present.empty()) return false;

        // every face of the intersection must lie under a present codim-1 face
        for (VertexSet face : inter_faces) {
            bool covered = false;
            for (VertexSet cf : present)
                if ((face & cf) == face) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    }
    return true;
}

}  // namespace hkface
