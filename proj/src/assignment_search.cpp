#include "florist/detail/assignment_search.hpp"

#include <bit>

namespace florist::detail {

namespace {

struct CappedCounter {
    int n;
    const std::uint32_t* adj;
    std::uint64_t avail[kMaxSearchVertices];
    std::uint32_t uncolored;
    int cap;

    int rec() {
        if (uncolored == 0) return 1;
        // fewest remaining colors first
        int v = -1, best = 65;
        for (std::uint32_t rest = uncolored; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            const int k = std::popcount(avail[u]);
            if (k < best) {
                best = k;
                v = u;
                if (k == 0) return 0;
            }
        }
        uncolored &= ~(1u << v);
        int total = 0;
        std::uint64_t saved[kMaxSearchVertices];
        for (std::uint64_t colors = avail[v]; colors != 0; colors &= colors - 1) {
            const std::uint64_t c = colors & (~colors + 1);
            const std::uint32_t touched = adj[v] & uncolored;
            for (std::uint32_t rest = touched; rest != 0; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                saved[w] = avail[w];
                avail[w] &= ~c;
            }
            total += rec();
            for (std::uint32_t rest = touched; rest != 0; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                avail[w] = saved[w];
            }
            if (total >= cap) break;
        }
        uncolored |= (1u << v);
        return total < cap ? total : cap;
    }
};

}  // namespace

int count_colorings_capped(int n, const std::uint32_t* adj, const std::uint64_t* lists, int cap) {
    if (n > kMaxSearchVertices)
        throw Error(Errc::SizeCapExceeded, "capped counter supports at most " +
                                               std::to_string(kMaxSearchVertices) + " vertices");
    if (cap < 1) return 0;
    CappedCounter c;
    c.n = n;
    c.adj = adj;
    c.uncolored = (n == 32) ? ~0u : ((1u << n) - 1);
    c.cap = cap;
    for (int v = 0; v < n; ++v) c.avail[v] = lists[v];
    return c.rec();
}

}  // namespace florist::detail
