#include "florist/theorem_harness.hpp"

#include <algorithm>

#include "florist/configurations.hpp"

namespace florist {

namespace {

// Extension count that treats an unusable precoloring as having zero
// extensions instead of rejecting it, so quantifiers over colorings of H
// stay total.
Int safe_count(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi) {
    for (const auto& [v, c] : phi.entries()) {
        const auto& list = l.at(v);
        if (std::find(list.begin(), list.end(), c) == list.end()) return 0;
    }
    for (const auto& [v, c] : phi.entries())
        for (Vertex w : g.rotation(v))
            if (phi.contains(w) && phi.at(w) == c) return 0;
    return count_extensions(g, l, phi).value;
}

bool reaches_threshold(const Int& count, const Rat& exponent) {
    return reaches_power_of_two(count, numerator(exponent), denominator(exponent));
}

// All colorings of H's vertices from their lists that are proper on H's own
// edges (not on edges H doesn't contain).
std::vector<Precoloring> colorings_of_mask(const SubgraphMask& h, const ListAssignment& l) {
    std::vector<Vertex> verts = h.vertex_list();
    std::vector<Precoloring> out;
    Precoloring cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == verts.size()) {
            out.push_back(cur);
            return;
        }
        Vertex v = verts[i];
        for (Color c : l.at(v)) {
            bool ok = true;
            for (Vertex w : verts)
                if (cur.contains(w) && cur.at(w) == c && h.has_edge(v, w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.set(v, c);
            self(self, i + 1);
            cur.erase(v);
        }
    };
    rec(rec, 0);
    return out;
}

Rat genus_of_chi(int chi) { return Rat(2 - chi) / 2; }

Rat bound_exponent(int n, const Rat& genus, int h_count, const CriticalityParams& params) {
    return params.eps * (Rat(n) - params.alpha * (genus + h_count));
}

struct ReducedInstance {
    EmbeddedGraph graph;
    ListAssignment lists;
    Precoloring phi;
};

ReducedInstance restrict_to_deletion(const DeletionResult& del, const ListAssignment& l,
                                     const Precoloring& phi) {
    ListAssignment lists = l.restricted_to(del.old_of_new);
    Precoloring mapped;
    for (const auto& [v, c] : phi.entries())
        if (del.new_of_old[v] >= 0) mapped.set(del.new_of_old[v], c);
    return ReducedInstance{del.graph, std::move(lists), std::move(mapped)};
}

EmbeddedGraph delete_edge(const EmbeddedGraph& g, Vertex a, Vertex b) {
    std::vector<std::vector<Vertex>> rotations = g.rotations();
    std::erase(rotations[a], b);
    std::erase(rotations[b], a);
    return EmbeddedGraph::build(g.vertex_count(), std::move(rotations));
}

}  // namespace

BoundReport main_bound_check(const EmbeddedGraph& g, const SubgraphMask& h,
                             const ListAssignment& l, const Precoloring& phi,
                             const CriticalityParams& params) {
    if (g.has_triangle()) throw Error(Errc::HypothesisViolated, "host contains a triangle");
    if (!l.is_k_list(4)) throw Error(Errc::HypothesisViolated, "lists are smaller than 4");
    for (Vertex v : phi.domain())
        if (!h.has_vertex(v))
            throw Error(Errc::HypothesisViolated, "precolored vertex outside the hypothesis graph");
    if (phi.size() != h.vertex_count())
        throw Error(Errc::HypothesisViolated, "precoloring does not cover the hypothesis graph");
    for (const auto& [v, c] : phi.entries()) {
        const auto& list = l.at(v);
        if (std::find(list.begin(), list.end(), c) == list.end())
            throw Error(Errc::HypothesisViolated, "precoloring leaves its list");
        for (Vertex w : g.rotation(v))
            if (phi.contains(w) && phi.at(w) == c)
                throw Error(Errc::HypothesisViolated, "precoloring is improper");
    }

    BoundReport r;
    r.n = g.vertex_count();
    r.chi = g.euler_characteristic();
    r.genus = genus_of_chi(r.chi);
    r.h_count = h.vertex_count();
    r.exponent = bound_exponent(r.n, r.genus, r.h_count, params);
    r.count = count_extensions(g, l, phi).value;
    if (r.count == 0) throw Error(Errc::HypothesisViolated, "precoloring does not extend");
    r.pass = reaches_threshold(r.count, r.exponent);
    r.paper_constants = params.paper_constants();
    return r;
}

DoublingReport doubling_check(const EmbeddedGraph& g, const SubgraphMask& h,
                              const ListAssignment& l, const std::vector<Vertex>& q,
                              const HarnessCaps& caps) {
    if (g.vertex_count() > caps.max_counting_vertices)
        throw Error(Errc::SizeCapExceeded, "host too large for exhaustive counting");

    DoublingReport report;
    report.precondition_ok = check_reducible_concrete(g, h, q, l).reducible;
    if (!report.precondition_ok) return report;

    DeletionResult del = delete_vertices(g, q);
    report.holds = true;
    for (const Precoloring& phi : colorings_of_mask(h, l)) {
        Int whole = safe_count(g, l, phi);
        ReducedInstance rest = restrict_to_deletion(del, l, phi);
        Int remainder = safe_count(rest.graph, rest.lists, rest.phi);
        if (whole < 2 * remainder) {
            report.holds = false;
            break;
        }
    }
    return report;
}

bool criticality_check(const EmbeddedGraph& g, const SubgraphMask& h, const ListAssignment& l,
                       const CriticalityParams& params, PhiReading reading,
                       const HarnessCaps& caps) {
    const int n = g.vertex_count();
    if (n > caps.max_criticality_vertices)
        throw Error(Errc::SizeCapExceeded, "host too large for the subgraph quantifier");

    const Rat genus = genus_of_chi(g.euler_characteristic());
    const int h_count = h.vertex_count();
    const Rat whole_exponent = bound_exponent(n, genus, h_count, params);

    const std::vector<Precoloring> colorings = colorings_of_mask(h, l);
    std::vector<Int> whole_counts;
    whole_counts.reserve(colorings.size());
    for (const Precoloring& phi : colorings) whole_counts.push_back(safe_count(g, l, phi));

    if (reading == PhiReading::GlobalNonexistence)
        for (const Int& c : whole_counts)
            if (reaches_threshold(c, whole_exponent)) return false;

    struct Subgraph {
        EmbeddedGraph graph;
        ListAssignment lists;
        std::vector<int> new_of_old;  // -1 marks the deleted vertex
    };
    std::vector<Subgraph> subgraphs;
    std::vector<int> identity(n);
    for (Vertex v = 0; v < n; ++v) identity[v] = v;
    for (Vertex v = 0; v < n; ++v) {
        if (h.has_vertex(v)) continue;
        DeletionResult del = delete_vertices(g, {v});
        ListAssignment lists = l.restricted_to(del.old_of_new);
        subgraphs.push_back(Subgraph{std::move(del.graph), std::move(lists),
                                     std::move(del.new_of_old)});
    }
    for (const auto& [a, b] : g.edges()) {
        if (h.has_edge(a, b)) continue;
        subgraphs.push_back(Subgraph{delete_edge(g, a, b), l, identity});
    }

    for (const Subgraph& sub : subgraphs) {
        const Rat sub_exponent =
            bound_exponent(sub.graph.vertex_count(), genus, h_count, params);
        bool witnessed = false;
        for (std::size_t i = 0; i < colorings.size(); ++i) {
            Precoloring mapped;
            for (const auto& [v, c] : colorings[i].entries()) mapped.set(sub.new_of_old[v], c);
            Int count = safe_count(sub.graph, sub.lists, mapped);
            if (!reaches_threshold(count, sub_exponent)) continue;
            if (reading == PhiReading::Shared && reaches_threshold(whole_counts[i], whole_exponent))
                continue;
            witnessed = true;
            break;
        }
        if (!witnessed) return false;
    }
    return true;
}

std::vector<ComponentBound> per_component_bound(const EmbeddedGraph& g, const SubgraphMask& h,
                                                const DischargeParams& p) {
    std::vector<ComponentBound> out;
    for (const ComponentPiece& piece : components(g, SubgraphMask::empty(g.vertex_count()))) {
        ComponentBound cb;
        cb.vertices = piece.old_of_new;
        std::sort(cb.vertices.begin(), cb.vertices.end());
        cb.chi = piece.graph.euler_characteristic();
        for (Vertex v : cb.vertices)
            if (h.has_vertex(v)) ++cb.h_count;
        cb.bound = vertex_bound_from_charges(cb.h_count, cb.chi, p);
        out.push_back(std::move(cb));
    }
    return out;
}

}  // namespace florist
