#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "florist/error.hpp"

namespace florist::detail {

// Bounded-size engine shared by the exhaustive list-assignment checks.
// Vertices fit in a uint32_t mask, colors in a uint64_t mask.
inline constexpr int kMaxSearchVertices = 12;
inline constexpr int kMaxSearchColors = 64;

// Proper-coloring count of the graph given by adjacency masks, clamped at
// cap.  Lists may be empty (an uncolored vertex with an empty list gives 0).
// Fail-first order: always branch on an uncolored vertex with the fewest
// remaining colors.
int count_colorings_capped(int n, const uint32_t* adj, const uint64_t* lists, int cap);

// Partial or complete list assignment expressed by its color classes.
// classes[i] = (vertex mask, multiplicity): that many colors were given to
// exactly that set of vertices.  Color identities are the introduction order:
// class copies occupy consecutive color indices.
struct AssignmentState {
    int n = 0;
    int colors_used = 0;
    std::vector<std::uint64_t> lists;                     // per-vertex color masks
    std::vector<std::pair<std::uint32_t, int>> classes;   // walk order
};

enum class Walk { Continue, Prune, Stop };

enum class MultiplicityOrder {
    Descending,  // richest assignments first; finds equal-list witnesses early
    Ascending,   // sparse first; a good partial prunes all higher multiplicities
};

struct WalkStats {
    std::uint64_t nodes = 0;
    std::uint64_t partial_checks = 0;
    std::uint64_t leaves = 0;
    bool stopped = false;
};

// Enumerates every multiset of color classes covering vertex v exactly
// sizes[v] times with at most `universe` colors in total — one representative
// of every list assignment with |L(v)| = sizes[v], up to renaming colors.
//
// Class masks are visited in canonical order: descending by the key that
// reads vertex 0 as the most significant bit, so the first complete
// assignment is the lexicographically least labeled representative.
//
// on_partial runs whenever a class choice leaves every list non-empty;
// returning Walk::Prune skips all completions of that partial (sound for
// properties monotone under list growth).  on_complete runs at every full
// assignment; returning Walk::Stop aborts the whole walk.
template <class OnPartial, class OnComplete>
WalkStats walk_assignments(const std::vector<int>& sizes, int universe,
                           MultiplicityOrder order, OnPartial&& on_partial,
                           OnComplete&& on_complete) {
    const int n = static_cast<int>(sizes.size());
    if (n > kMaxSearchVertices)
        throw Error(Errc::SizeCapExceeded,
                    "assignment search supports at most " +
                        std::to_string(kMaxSearchVertices) + " vertices, got " +
                        std::to_string(n));
    long long total = 0;
    int max_size = 0;
    for (int s : sizes) {
        if (s < 0) throw Error(Errc::Validation, "negative list size");
        total += s;
        max_size = std::max(max_size, s);
    }
    if (universe < max_size)
        throw Error(Errc::Validation, "universe smaller than the largest list size");
    if (std::min<long long>(total, universe) > kMaxSearchColors)
        throw Error(Errc::SizeCapExceeded,
                    "assignment search supports at most " +
                        std::to_string(kMaxSearchColors) + " colors");
    const int color_cap = static_cast<int>(std::min<long long>(total, universe));

    // All nonempty vertex subsets, canonically ordered (vertex 0 = MSB).
    auto key_of = [n](std::uint32_t mask) {
        std::uint32_t key = 0;
        for (int v = 0; v < n; ++v) key = (key << 1) | ((mask >> v) & 1u);
        return key;
    };
    std::vector<std::uint32_t> masks;
    masks.reserve((1u << n) - 1);
    for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(),
              [&](std::uint32_t a, std::uint32_t b) { return key_of(a) > key_of(b); });
    const int nmasks = static_cast<int>(masks.size());
    std::vector<std::uint32_t> suffix_union(nmasks + 1, 0);
    for (int i = nmasks - 1; i >= 0; --i) suffix_union[i] = suffix_union[i + 1] | masks[i];

    AssignmentState st;
    st.n = n;
    st.lists.assign(n, 0);
    std::vector<int> residual(sizes.begin(), sizes.end());
    std::uint32_t support = 0;
    int empties = 0;
    for (int v = 0; v < n; ++v) {
        if (residual[v] > 0) support |= (1u << v);
        ++empties;  // all lists start empty
    }
    WalkStats stats;

    auto apply = [&](std::uint32_t mask, int m) {
        const std::uint64_t colors = ((m == 64) ? ~0ull : ((1ull << m) - 1)) << st.colors_used;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (st.lists[v] == 0) --empties;
            st.lists[v] |= colors;
            residual[v] -= m;
            if (residual[v] == 0) support &= ~(1u << v);
        }
        st.colors_used += m;
        st.classes.push_back({mask, m});
    };
    auto undo = [&](std::uint32_t mask, int m) {
        st.classes.pop_back();
        st.colors_used -= m;
        const std::uint64_t colors = ((m == 64) ? ~0ull : ((1ull << m) - 1)) << st.colors_used;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            st.lists[v] &= ~colors;
            if (st.lists[v] == 0) ++empties;
            if (residual[v] == 0) support |= (1u << v);
            residual[v] += m;
        }
    };

    auto rec = [&](auto&& self, int i) -> Walk {
        ++stats.nodes;
        if (support == 0) {
            ++stats.leaves;
            return on_complete(static_cast<const AssignmentState&>(st)) == Walk::Stop
                       ? Walk::Stop
                       : Walk::Continue;
        }
        if (i == nmasks) return Walk::Continue;
        if ((support & ~suffix_union[i]) != 0) return Walk::Continue;
        int max_residual = 0;
        for (std::uint32_t rest = support; rest != 0; rest &= rest - 1)
            max_residual = std::max(max_residual, residual[std::countr_zero(rest)]);
        if (st.colors_used + max_residual > color_cap) return Walk::Continue;

        const std::uint32_t mask = masks[i];
        int mmax = 0;
        if ((mask & ~support) == 0) {
            mmax = color_cap - st.colors_used;
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
                mmax = std::min(mmax, residual[std::countr_zero(rest)]);
        }

        const bool asc = (order == MultiplicityOrder::Ascending);
        for (int step = 0; step <= mmax; ++step) {
            const int m = asc ? step : mmax - step;
            if (m == 0) {
                if (self(self, i + 1) == Walk::Stop) return Walk::Stop;
                continue;
            }
            apply(mask, m);
            Walk sig = Walk::Continue;
            if (empties == 0 && support != 0) {
                ++stats.partial_checks;
                sig = on_partial(static_cast<const AssignmentState&>(st));
            }
            if (sig == Walk::Continue) sig = self(self, i + 1);
            undo(mask, m);
            if (sig == Walk::Stop) return Walk::Stop;
            if (sig == Walk::Prune && asc) break;  // larger m only grows the lists
        }
        return Walk::Continue;
    };

    if (rec(rec, 0) == Walk::Stop) stats.stopped = true;
    return stats;
}

}  // namespace florist::detail
