#include "florist/configurations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "florist/detail/assignment_search.hpp"

namespace florist {

std::vector<Vertex> Stamen::internals() const {
    if (path.size() <= 2) return {};
    return std::vector<Vertex>(path.begin() + 1, path.end() - 1);
}

std::vector<Vertex> Poppy::vertex_set() const {
    std::set<Vertex> vs{center};
    for (const Stamen& s : stamens) vs.insert(s.path.begin(), s.path.end());
    return std::vector<Vertex>(vs.begin(), vs.end());
}

std::vector<FaceWalk> find_small_4faces(const EmbeddedGraph& g, const SubgraphMask& h) {
    std::vector<FaceWalk> out;
    for (const FaceWalk& f : g.faces()) {
        if (f.length() != 4 || !f.is_simple_cycle()) continue;
        bool ok = true;
        for (Vertex v : f.vertices())
            if (h.has_vertex(v) || g.degree(v) > 4) {
                ok = false;
                break;
            }
        if (ok) out.push_back(f);
    }
    return out;
}

std::vector<Stamen> find_stamens(const EmbeddedGraph& g, const SubgraphMask& h, Vertex v,
                                 int max_vertices) {
    if (v < 0 || v >= g.vertex_count()) throw Error(Errc::Validation, "stamen root out of range");
    std::vector<Stamen> out;
    std::vector<Vertex> path{v};
    std::vector<char> used(g.vertex_count(), 0);
    used[v] = 1;

    auto rec = [&](auto&& self) -> void {
        Vertex last = path.back();
        for (Vertex w : g.rotation(last)) {
            if (used[w] || h.has_vertex(w)) continue;
            if (g.degree(w) == 3 && static_cast<int>(path.size()) + 1 <= max_vertices) {
                path.push_back(w);
                out.push_back(Stamen{path});
                path.pop_back();
            }
            if (g.degree(w) == 4 && static_cast<int>(path.size()) + 2 <= max_vertices) {
                path.push_back(w);
                used[w] = 1;
                self(self);
                used[w] = 0;
                path.pop_back();
            }
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Largest internally disjoint sub-collection, preferring earlier candidates.
std::vector<int> max_disjoint_packing(const std::vector<std::vector<Vertex>>& internal_sets) {
    const int n = static_cast<int>(internal_sets.size());
    std::vector<int> best, cur;
    auto conflict = [&](int a, int b) {
        for (Vertex x : internal_sets[a])
            for (Vertex y : internal_sets[b])
                if (x == y) return true;
        return false;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<int>(cur.size()) + (n - i) <= static_cast<int>(best.size())) return;
        if (i == n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        bool ok = true;
        for (int j : cur)
            if (conflict(j, i)) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return best;
}

}  // namespace

std::vector<Poppy> find_poppies(const EmbeddedGraph& g, const SubgraphMask& h,
                                int max_stamen_vertices) {
    std::vector<Poppy> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (h.has_vertex(v)) continue;
        const int need = g.degree(v) - 2;
        if (need <= 0) {
            out.push_back(Poppy{v, {}});
            continue;
        }
        std::vector<Stamen> stamens = find_stamens(g, h, v, max_stamen_vertices);
        if (static_cast<int>(stamens.size()) < need) continue;
        std::vector<std::vector<Vertex>> internals;
        internals.reserve(stamens.size());
        for (const Stamen& s : stamens) internals.push_back(s.internals());
        std::vector<int> packing = max_disjoint_packing(internals);
        if (static_cast<int>(packing.size()) < need) continue;
        Poppy p;
        p.center = v;
        for (int i : packing) p.stamens.push_back(stamens[i]);
        out.push_back(std::move(p));
    }
    return out;
}

Configuration configuration_from_subset(const EmbeddedGraph& g, const SubgraphMask& h,
                                        const std::vector<Vertex>& subset) {
    if (subset.empty()) throw Error(Errc::Validation, "configuration subset is empty");
    std::vector<Vertex> sorted(subset);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::Validation, "configuration subset has repeats");
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::Validation, "configuration subset names a missing vertex");
        if (h.has_vertex(v))
            throw Error(Errc::Validation,
                        "configuration vertex " + std::to_string(v) + " lies in the mask");
    }
    std::vector<char> keep(g.vertex_count(), 0);
    for (Vertex v : sorted) keep[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!keep[v]) rest.push_back(v);
    DeletionResult del = delete_vertices(g, rest);
    Configuration c;
    c.original = std::move(del.old_of_new);
    c.ext.resize(c.original.size());
    for (std::size_t i = 0; i < c.original.size(); ++i)
        c.ext[i] = g.degree(c.original[i]) - del.graph.degree(static_cast<Vertex>(i));
    c.q = std::move(del.graph);
    return c;
}

ReducibilityVerdict check_reducible_concrete(const EmbeddedGraph& g, const SubgraphMask& h,
                                             const std::vector<Vertex>& subset,
                                             const ListAssignment& l, const ConfigCaps& caps) {
    configuration_from_subset(g, h, subset);  // validates subset shape
    DeletionResult rem = delete_vertices(g, subset);
    if (rem.graph.vertex_count() > caps.max_remainder_vertices)
        throw Error(Errc::SizeCapExceeded, "remainder too large to enumerate");
    ListAssignment l_rem = l.restricted_to(rem.old_of_new);

    ReducibilityVerdict verdict;
    verdict.reducible = true;
    std::uint64_t seen = 0;
    bool capped = false;
    for_each_coloring(rem.graph, l_rem, Precoloring{},
                      [&](const std::vector<Color>& values) {
                          if (++seen > caps.max_remainder_colorings) {
                              capped = true;
                              return false;
                          }
                          Precoloring phi;
                          for (std::size_t i = 0; i < rem.old_of_new.size(); ++i)
                              phi.set(rem.old_of_new[i], values[i]);
                          CountResult r = count_extensions(g, l, phi, Int(2));
                          if (r.threshold_reached) return true;
                          verdict.reducible = false;
                          verdict.witness = ReducibilityWitness{std::nullopt, phi, r.value};
                          return false;
                      });
    if (capped) throw Error(Errc::SizeCapExceeded, "too many remainder colorings");
    return verdict;
}

ReducibilityVerdict check_reducible_abstract(const Configuration& c, int k,
                                             const ConfigCaps& caps) {
    (void)caps;
    const int n = c.size();
    std::vector<int> sizes(n);
    for (int i = 0; i < n; ++i) {
        sizes[i] = c.residual_size(i, k);
        if (sizes[i] <= 0) {
            ReducibilityVerdict v;
            v.reducible = false;
            v.witness = ReducibilityWitness{};
            v.note = "vertex " + std::to_string(c.original[i]) +
                     " has nonpositive residual size " + std::to_string(sizes[i]);
            return v;
        }
    }
    long long universe = 0;
    for (int s : sizes) universe += s;

    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : c.q.rotation(v)) adj[v] |= (1u << w);

    ReducibilityVerdict verdict;
    verdict.reducible = true;
    detail::walk_assignments(
        sizes, static_cast<int>(universe), detail::MultiplicityOrder::Descending,
        [&](const detail::AssignmentState& st) {
            return detail::count_colorings_capped(st.n, adj.data(), st.lists.data(), 2) >= 2
                       ? detail::Walk::Prune
                       : detail::Walk::Continue;
        },
        [&](const detail::AssignmentState& st) {
            int cnt = detail::count_colorings_capped(st.n, adj.data(), st.lists.data(), 2);
            if (cnt >= 2) return detail::Walk::Continue;
            verdict.reducible = false;
            ReducibilityWitness w;
            std::vector<std::vector<Color>> lists(st.n);
            for (int v = 0; v < st.n; ++v)
                for (int col = 0; col < st.colors_used; ++col)
                    if ((st.lists[v] >> col) & 1ull) lists[v].push_back(col);
            w.residual = ListAssignment(std::move(lists));
            w.extension_count = cnt;
            verdict.witness = std::move(w);
            return detail::Walk::Stop;
        });
    return verdict;
}

bool verify_poppy_constructive(const Poppy& p, const Configuration& c) {
    const int n = c.size();
    std::map<Vertex, int> qindex;
    for (int i = 0; i < n; ++i) qindex[c.original[i]] = i;

    auto degree_in_g = [&](int qi) { return c.q.degree(qi) + c.ext[qi]; };

    if (!qindex.count(p.center)) throw Error(Errc::NotAPoppy, "center is not in the configuration");
    const int center = qindex.at(p.center);

    std::set<Vertex> poppy_vertices{p.center};
    std::set<Vertex> internal_seen;
    for (const Stamen& s : p.stamens) {
        if (s.path.size() < 2) throw Error(Errc::NotAPoppy, "stamen with fewer than two vertices");
        if (s.root() != p.center) throw Error(Errc::NotAPoppy, "stamen not rooted at the center");
        std::set<Vertex> distinct(s.path.begin(), s.path.end());
        if (distinct.size() != s.path.size()) throw Error(Errc::NotAPoppy, "stamen path repeats a vertex");
        for (std::size_t i = 0; i < s.path.size(); ++i) {
            if (!qindex.count(s.path[i]))
                throw Error(Errc::NotAPoppy, "stamen vertex missing from the configuration");
            if (i > 0 && !c.q.adjacent(qindex.at(s.path[i - 1]), qindex.at(s.path[i])))
                throw Error(Errc::NotAPoppy, "stamen path skips a missing edge");
        }
        if (degree_in_g(qindex.at(s.tip())) != 3)
            throw Error(Errc::NotAPoppy, "stamen tip is not a 3-vertex");
        for (Vertex w : s.internals()) {
            if (degree_in_g(qindex.at(w)) != 4)
                throw Error(Errc::NotAPoppy, "stamen internal vertex is not a 4-vertex");
            if (!internal_seen.insert(w).second)
                throw Error(Errc::NotAPoppy, "stamens are not internally disjoint");
        }
        poppy_vertices.insert(s.path.begin(), s.path.end());
    }
    if (static_cast<int>(p.stamens.size()) < degree_in_g(center) - 2)
        throw Error(Errc::NotAPoppy, "fewer stamens than the center degree requires");
    std::vector<Vertex> expected(poppy_vertices.begin(), poppy_vertices.end());
    if (expected != c.original)
        throw Error(Errc::NotAPoppy, "configuration vertices differ from the poppy's");

    // Two spare colors at the center under worst-case 4-lists.
    if (4 - c.ext[center] < 2) return false;

    // Each component of Q - center must be colorable once the center is
    // colored: lists cover component degrees, with a strict surplus
    // somewhere, or the component is degree-choosable outright.
    DeletionResult del = delete_vertices(c.q, {center});
    for (const ComponentPiece& piece :
         components(del.graph, SubgraphMask::empty(del.graph.vertex_count()))) {
        bool surplus = false;
        for (Vertex w = 0; w < piece.graph.vertex_count(); ++w) {
            const int qi = del.old_of_new[piece.old_of_new[w]];
            const int budget =
                4 - c.ext[qi] - (c.q.adjacent(qi, center) ? 1 : 0);
            if (budget < piece.graph.degree(w)) return false;
            if (budget > piece.graph.degree(w)) surplus = true;
        }
        if (!surplus && !is_degree_choosable_structural(piece.graph)) return false;
    }
    return true;
}

std::vector<ScanEntry> scan_reducible_up_to_size(const EmbeddedGraph& g, const SubgraphMask& h,
                                                 int max_size, const ConfigCaps& caps) {
    if (max_size < 1) throw Error(Errc::Validation, "scan size must be at least 1");
    std::vector<std::vector<Vertex>> subsets;

    // Connected subsets are grown from their minimum vertex; each candidate
    // neighbor is either added or banned, so every subset appears once.
    std::vector<char> in_set(g.vertex_count(), 0), banned(g.vertex_count(), 0);
    std::vector<Vertex> cur;
    auto grow = [&](auto&& self, Vertex start) -> void {
        if (subsets.size() > caps.max_subsets)
            throw Error(Errc::SizeCapExceeded, "too many subsets in scan");
        std::vector<Vertex> sorted(cur);
        std::sort(sorted.begin(), sorted.end());
        subsets.push_back(std::move(sorted));
        if (static_cast<int>(cur.size()) == max_size) return;
        std::vector<Vertex> frontier;
        for (Vertex v : cur)
            for (Vertex w : g.rotation(v))
                if (w > start && !in_set[w] && !banned[w] && !h.has_vertex(w))
                    frontier.push_back(w);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        for (Vertex w : frontier) {
            in_set[w] = 1;
            cur.push_back(w);
            self(self, start);
            cur.pop_back();
            in_set[w] = 0;
            banned[w] = 1;
        }
        for (Vertex w : frontier) banned[w] = 0;
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (h.has_vertex(v)) continue;
        in_set[v] = 1;
        cur.push_back(v);
        grow(grow, v);
        cur.pop_back();
        in_set[v] = 0;
    }

    std::sort(subsets.begin(), subsets.end());
    std::vector<ScanEntry> out;
    out.reserve(subsets.size());
    for (auto& s : subsets) {
        Configuration c = configuration_from_subset(g, h, s);
        out.push_back(ScanEntry{std::move(s), check_reducible_abstract(c, 4, caps)});
    }
    return out;
}

namespace {

bool stamen_has_incident_4face(const EmbeddedGraph& g, const Stamen& s) {
    for (const FaceWalk& f : g.faces()) {
        if (f.length() != 4) continue;
        bool all = true;
        for (Vertex v : s.path)
            if (!f.contains_vertex(v)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

// If the edges form a simple path, return its vertex sequence.
std::optional<std::vector<Vertex>> edges_as_path(const std::set<std::pair<Vertex, Vertex>>& edges) {
    if (edges.empty()) return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<Vertex> ends;
    for (const auto& [v, nb] : adj) {
        if (nb.size() > 2) return std::nullopt;
        if (nb.size() == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<Vertex> seq{std::min(ends[0], ends[1])};
    Vertex prev = -1;
    while (true) {
        Vertex at = seq.back();
        Vertex next = -1;
        for (Vertex w : adj[at])
            if (w != prev) next = w;
        if (next == -1) break;
        prev = at;
        seq.push_back(next);
    }
    if (seq.size() != adj.size()) return std::nullopt;  // disconnected or cyclic
    return seq;
}

bool path_is_stamen(const EmbeddedGraph& g, const SubgraphMask& h,
                    const std::vector<Vertex>& seq) {
    if (seq.size() < 2) return false;
    auto qualifies = [&](const std::vector<Vertex>& p) {
        Vertex tip = p.back();
        if (g.degree(tip) != 3 || h.has_vertex(tip)) return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (g.degree(p[i]) != 4 || h.has_vertex(p[i])) return false;
        return true;
    };
    std::vector<Vertex> rev(seq.rbegin(), seq.rend());
    return qualifies(seq) || qualifies(rev);
}

}  // namespace

std::vector<StamenOverlap> stamen_overlap_property(const EmbeddedGraph& g, const SubgraphMask& h,
                                                   Vertex v, int max_stamen_vertices) {
    std::vector<Stamen> stamens = find_stamens(g, h, v, max_stamen_vertices);
    std::vector<Stamen> qualified;
    for (const Stamen& s : stamens)
        if (stamen_has_incident_4face(g, s)) qualified.push_back(s);

    auto edge_set = [](const Stamen& s) {
        std::set<std::pair<Vertex, Vertex>> es;
        for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
            Vertex a = s.path[i], b = s.path[i + 1];
            es.insert({std::min(a, b), std::max(a, b)});
        }
        return es;
    };

    std::vector<StamenOverlap> out;
    for (std::size_t i = 0; i < qualified.size(); ++i) {
        for (std::size_t j = i + 1; j < qualified.size(); ++j) {
            if (qualified[i].path[1] != qualified[j].path[1]) continue;  // distinct first edges
            StamenOverlap rec;
            rec.center = v;
            rec.first = qualified[i];
            rec.second = qualified[j];
            std::set<std::pair<Vertex, Vertex>> diff;
            for (const auto& e : edge_set(qualified[i])) diff.insert(e);
            for (const auto& e : edge_set(qualified[j])) {
                if (diff.count(e))
                    diff.erase(e);
                else
                    diff.insert(e);
            }
            if (auto seq = edges_as_path(diff)) {
                rec.difference = *seq;
                rec.difference_is_stamen = path_is_stamen(g, h, *seq);
                rec.short_enough = diff.size() <= 5;
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace florist
