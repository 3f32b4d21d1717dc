#include "florist/list_coloring.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "florist/detail/assignment_search.hpp"

namespace florist {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

ListAssignment ListAssignment::uniform(int n, int k) {
    std::vector<Color> palette(k);
    for (int c = 0; c < k; ++c) palette[c] = c;
    return ListAssignment(std::vector<std::vector<Color>>(n, palette));
}

int ListAssignment::min_size() const {
    int m = lists_.empty() ? 0 : static_cast<int>(lists_[0].size());
    for (const auto& l : lists_) m = std::min(m, static_cast<int>(l.size()));
    return m;
}

bool ListAssignment::is_k_list(int k) const {
    for (const auto& l : lists_)
        if (static_cast<int>(l.size()) < k) return false;
    return true;
}

ListAssignment ListAssignment::restricted_to(const std::vector<Vertex>& keep) const {
    std::vector<std::vector<Color>> out;
    out.reserve(keep.size());
    for (Vertex v : keep) {
        if (v < 0 || v >= size()) throw Error(Errc::Validation, "restriction names a missing list");
        out.push_back(lists_[v]);
    }
    return ListAssignment(std::move(out));
}

std::vector<Vertex> Precoloring::domain() const {
    std::vector<Vertex> out;
    out.reserve(map_.size());
    for (const auto& [v, c] : map_) out.push_back(v);
    return out;
}

void validate_precoloring(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi) {
    for (const auto& [v, c] : phi.entries()) {
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::ImproperPrecoloring,
                        "precolored vertex " + std::to_string(v) + " is not in the graph");
        const auto& lv = l.at(v);
        if (!std::binary_search(lv.begin(), lv.end(), c))
            throw Error(Errc::ImproperPrecoloring, "color of vertex " + std::to_string(v) +
                                                       " is outside its list");
    }
    for (const auto& [v, c] : phi.entries())
        for (Vertex w : g.rotation(v))
            if (phi.contains(w) && phi.at(w) == c && w > v)
                throw Error(Errc::ImproperPrecoloring,
                            "adjacent vertices " + std::to_string(v) + " and " +
                                std::to_string(w) + " share a color");
}

namespace {

// Backtracking counter over residual lists; branches on an uncolored vertex
// with the fewest currently feasible colors, smallest index breaking ties.
struct ExtensionCounter {
    const EmbeddedGraph& g;
    std::vector<std::vector<Color>> cand;  // empty for precolored vertices
    std::vector<char> colored;
    std::vector<Color> value;
    Int limit;
    bool use_limit = false;
    const std::atomic<bool>* external_stop = nullptr;

    Int count = 0;
    bool hit_limit = false;

    ExtensionCounter(const EmbeddedGraph& graph, std::vector<std::vector<Color>> candidates,
                     std::vector<char> colored_flags, std::vector<Color> values)
        : g(graph),
          cand(std::move(candidates)),
          colored(std::move(colored_flags)),
          value(std::move(values)) {}

    int feasible(Vertex v, std::vector<Color>* out) const {
        int k = 0;
        for (Color c : cand[v]) {
            bool ok = true;
            for (Vertex w : g.rotation(v))
                if (colored[w] && value[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                ++k;
                if (out) out->push_back(c);
            }
        }
        return k;
    }

    // Uncolored vertex with fewest feasible colors, or -1 if none uncolored.
    Vertex pick() const {
        Vertex best = -1;
        int best_k = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (colored[v]) continue;
            int k = feasible(v, nullptr);
            if (best == -1 || k < best_k) {
                best = v;
                best_k = k;
                if (k == 0) break;
            }
        }
        return best;
    }

    bool stopped() const {
        return hit_limit || (external_stop && external_stop->load(std::memory_order_relaxed));
    }

    void run() {
        if (stopped()) return;
        Vertex v = pick();
        if (v == -1) {
            ++count;
            if (use_limit && count >= limit) hit_limit = true;
            return;
        }
        std::vector<Color> options;
        feasible(v, &options);
        colored[v] = 1;
        for (Color c : options) {
            value[v] = c;
            run();
            if (stopped()) break;
        }
        colored[v] = 0;
    }
};

struct PreparedInstance {
    std::vector<std::vector<Color>> cand;
    std::vector<char> colored;
    std::vector<Color> value;
};

PreparedInstance prepare(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi) {
    const int n = g.vertex_count();
    if (l.size() != n) throw Error(Errc::Validation, "list count differs from vertex count");
    validate_precoloring(g, l, phi);
    PreparedInstance p;
    p.cand.resize(n);
    p.colored.assign(n, 0);
    p.value.assign(n, 0);
    for (const auto& [v, c] : phi.entries()) {
        p.colored[v] = 1;
        p.value[v] = c;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (p.colored[v]) continue;
        if (l.at(v).empty())
            throw Error(Errc::EmptyList, "vertex " + std::to_string(v) + " has an empty list");
        for (Color c : l.at(v)) {
            bool blocked = false;
            for (Vertex w : g.rotation(v))
                if (p.colored[w] && p.value[w] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked) p.cand[v].push_back(c);
        }
    }
    return p;
}

}  // namespace

CountResult count_extensions(const EmbeddedGraph& g, const ListAssignment& l,
                             const Precoloring& phi, const std::optional<Int>& threshold,
                             int jobs) {
    if (threshold && *threshold <= 0)
        throw Error(Errc::Validation, "threshold must be positive");
    PreparedInstance p = prepare(g, l, phi);

    Int total = 0;
    bool any_hit = false;
    if (jobs <= 1) {
        ExtensionCounter counter(g, p.cand, p.colored, p.value);
        if (threshold) {
            counter.use_limit = true;
            counter.limit = *threshold;
        }
        counter.run();
        total = counter.count;
        any_hit = counter.hit_limit;
    } else {
        // Split the colors of the root branch vertex across workers.
        ExtensionCounter probe(g, p.cand, p.colored, p.value);
        Vertex root = probe.pick();
        if (root == -1) return CountResult::exact(1);
        std::vector<Color> options;
        probe.feasible(root, &options);
        std::atomic<bool> stop{false};
        std::vector<Int> partial(jobs, 0);
        std::vector<char> hit(jobs, 0);
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t]() {
                ExtensionCounter counter(g, p.cand, p.colored, p.value);
                if (threshold) {
                    counter.use_limit = true;
                    counter.limit = *threshold;
                }
                counter.external_stop = &stop;
                counter.colored[root] = 1;
                for (std::size_t i = t; i < options.size(); i += jobs) {
                    counter.value[root] = options[i];
                    counter.run();
                    if (counter.stopped()) break;
                }
                partial[t] = counter.count;
                if (counter.hit_limit) {
                    hit[t] = 1;
                    stop.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& w : workers) w.join();
        for (int t = 0; t < jobs; ++t) {
            total += partial[t];
            any_hit = any_hit || hit[t];
        }
    }
    if (threshold && (any_hit || total >= *threshold)) return CountResult::reached(*threshold);
    return CountResult::exact(total);
}

bool extends_to_at_least(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi,
                         const Int& k) {
    if (k <= 0) return true;
    CountResult r = count_extensions(g, l, phi, k);
    return r.threshold_reached || r.value >= k;
}

void for_each_coloring(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi,
                       const std::function<bool(const std::vector<Color>&)>& visit) {
    PreparedInstance p = prepare(g, l, phi);
    const int n = g.vertex_count();
    std::vector<Vertex> open;
    for (Vertex v = 0; v < n; ++v)
        if (!p.colored[v]) open.push_back(v);

    bool stop = false;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (stop) return;
        if (idx == open.size()) {
            if (!visit(p.value)) stop = true;
            return;
        }
        Vertex v = open[idx];
        p.colored[v] = 1;
        for (Color c : p.cand[v]) {
            bool ok = true;
            for (Vertex w : g.rotation(v))
                if (p.colored[w] && w != v && p.value[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            p.value[v] = c;
            self(self, idx + 1);
            if (stop) break;
        }
        p.colored[v] = 0;
    };
    rec(rec, 0);
}

bool is_gallai_tree(const EmbeddedGraph& g) {
    for (const Block& b : blocks(g)) {
        const int nv = static_cast<int>(b.vertices.size());
        const int ne = static_cast<int>(b.edges.size());
        const bool clique = (ne == nv * (nv - 1) / 2);
        const bool odd_cycle = (nv >= 3 && nv % 2 == 1 && ne == nv);
        if (!clique && !odd_cycle) return false;
    }
    return true;
}

bool is_degree_choosable_structural(const EmbeddedGraph& g) {
    if (!g.is_connected()) throw Error(Errc::DisconnectedInput, "degree-choosability needs a connected graph");
    return !is_gallai_tree(g);
}

namespace {

ListAssignment materialize(const detail::AssignmentState& st) {
    std::vector<std::vector<Color>> lists(st.n);
    for (int v = 0; v < st.n; ++v)
        for (int c = 0; c < st.colors_used; ++c)
            if ((st.lists[v] >> c) & 1ull) lists[v].push_back(c);
    return ListAssignment(std::move(lists));
}

std::vector<std::uint32_t> adjacency_masks(const EmbeddedGraph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.rotation(v)) adj[v] |= (1u << w);
    return adj;
}

}  // namespace

ChoosabilityResult is_degree_choosable_bruteforce(const EmbeddedGraph& g, const SearchCaps& caps) {
    if (!g.is_connected())
        throw Error(Errc::DisconnectedInput, "degree-choosability needs a connected graph");
    const int n = g.vertex_count();
    if (n > caps.max_vertices || n > detail::kMaxSearchVertices)
        throw Error(Errc::SizeCapExceeded, "graph too large for the exhaustive search");

    std::vector<int> sizes(n);
    long long total = 0;
    for (Vertex v = 0; v < n; ++v) {
        sizes[v] = g.degree(v);
        total += sizes[v];
    }
    if (total > detail::kMaxSearchColors)
        throw Error(Errc::SizeCapExceeded, "degree sum exceeds the color budget");

    const std::vector<std::uint32_t> adj = adjacency_masks(g);
    ChoosabilityResult res;
    res.choosable = true;
    auto colorable = [&](const detail::AssignmentState& st) {
        return detail::count_colorings_capped(st.n, adj.data(), st.lists.data(), 1) >= 1;
    };
    detail::WalkStats stats = detail::walk_assignments(
        sizes, static_cast<int>(total), detail::MultiplicityOrder::Descending,
        [&](const detail::AssignmentState& st) {
            return colorable(st) ? detail::Walk::Prune : detail::Walk::Continue;
        },
        [&](const detail::AssignmentState& st) {
            if (colorable(st)) return detail::Walk::Continue;
            res.choosable = false;
            res.witness = materialize(st);
            return detail::Walk::Stop;
        });
    res.nodes_visited = stats.nodes;
    return res;
}

void for_each_canonical_assignment(const std::vector<int>& sizes, int universe,
                                   const std::function<bool(const ListAssignment&)>& visit,
                                   const SearchCaps& caps) {
    if (static_cast<int>(sizes.size()) > caps.max_vertices)
        throw Error(Errc::SizeCapExceeded, "too many vertices for assignment enumeration");
    detail::walk_assignments(
        sizes, universe, detail::MultiplicityOrder::Descending,
        [](const detail::AssignmentState&) { return detail::Walk::Continue; },
        [&](const detail::AssignmentState& st) {
            return visit(materialize(st)) ? detail::Walk::Continue : detail::Walk::Stop;
        });
}

std::vector<ListAssignment> canonical_list_assignments(const std::vector<int>& sizes, int universe,
                                                       const SearchCaps& caps) {
    std::vector<ListAssignment> out;
    for_each_canonical_assignment(
        sizes, universe,
        [&](const ListAssignment& a) {
            if (out.size() >= caps.max_yield)
                throw Error(Errc::SizeCapExceeded, "assignment stream exceeded the yield cap");
            out.push_back(a);
            return true;
        },
        caps);
    return out;
}

}  // namespace florist
