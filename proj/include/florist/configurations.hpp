#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "florist/embedded_graph.hpp"
#include "florist/list_coloring.hpp"

namespace florist {

// Path whose tip has degree exactly 3 and lies outside H, with every
// internal vertex of degree exactly 4 and outside H.  The root is the other
// end; no constraint is placed on it.
struct Stamen {
    std::vector<Vertex> path;  // root first, tip last; simple path in the host

    Vertex root() const { return path.front(); }
    Vertex tip() const { return path.back(); }
    int length() const { return static_cast<int>(path.size()) - 1; }  // edges
    std::vector<Vertex> internals() const;

    bool operator==(const Stamen&) const = default;
    auto operator<=>(const Stamen&) const = default;
};

// Center v plus at least d(v) - 2 pairwise internally disjoint stamens
// rooted at v, all vertices outside H.
struct Poppy {
    Vertex center = -1;
    std::vector<Stamen> stamens;

    std::vector<Vertex> vertex_set() const;  // sorted, deduplicated
};

// Subgraph Q singled out for reducibility analysis.  ext(u) counts the edges
// from u into the colored remainder (worst case: each forbids one color).
struct Configuration {
    EmbeddedGraph q;
    std::vector<Vertex> original;  // q vertex i corresponds to original[i] in the host
    std::vector<int> ext;

    int size() const { return q.vertex_count(); }
    // Residual list size under k-lists; the host degree is d_Q(u) + ext(u).
    int residual_size(int qi, int k = 4) const { return k - ext[qi]; }
};

struct ReducibilityWitness {
    // Failing residual assignment on Q (abstract check), colors 0-based.
    std::optional<ListAssignment> residual;
    // Failing coloring of the remainder g - Q (concrete check), host vertex ids.
    std::optional<Precoloring> remainder_coloring;
    Int extension_count = 0;  // extensions the failing instance admits (< 2)
};

struct ReducibilityVerdict {
    bool reducible = false;
    std::optional<ReducibilityWitness> witness;  // present iff not reducible
    std::string note;                            // e.g. the nonpositive-residual guard
};

struct ConfigCaps {
    int max_remainder_vertices = 18;
    std::uint64_t max_remainder_colorings = 5'000'000;
    std::uint64_t max_subsets = 200'000;  // scan guard
    int max_stamen_vertices = 4;          // covers every face-incident stamen
};

// Facial 4-cycles disjoint from H whose vertices all have degree <= 4.
std::vector<FaceWalk> find_small_4faces(const EmbeddedGraph& g, const SubgraphMask& h);

// All v-stamens with at most max_vertices vertices, sorted by vertex sequence.
std::vector<Stamen> find_stamens(const EmbeddedGraph& g, const SubgraphMask& h, Vertex v,
                                 int max_vertices = 4);

// For every center outside H, a maximum internally disjoint packing of
// v-stamens; emitted as a poppy when the packing reaches d(v) - 2.
std::vector<Poppy> find_poppies(const EmbeddedGraph& g, const SubgraphMask& h,
                                int max_stamen_vertices = 4);

// Extract Q = g[subset] with worst-case deficits ext(u) = d_g(u) - d_Q(u).
// The subset must be non-empty and disjoint from H.
Configuration configuration_from_subset(const EmbeddedGraph& g, const SubgraphMask& h,
                                        const std::vector<Vertex>& subset);

// Q is reducible for (g, L) when every L-coloring of g - Q admits at least
// two extensions to all of g.  Enumerates the remainder colorings.
ReducibilityVerdict check_reducible_concrete(const EmbeddedGraph& g, const SubgraphMask& h,
                                             const std::vector<Vertex>& subset,
                                             const ListAssignment& l,
                                             const ConfigCaps& caps = {});

// Worst-case form: reducible when every residual assignment with sizes
// exactly k - ext(u) gives Q at least two list colorings.  A vertex with
// nonpositive residual size fails immediately (guard noted in the verdict).
ReducibilityVerdict check_reducible_abstract(const Configuration& c, int k = 4,
                                             const ConfigCaps& caps = {});

// Replays the poppy reducibility argument structurally: two spare colors at
// the center, and every component of Q - center is colorable because its
// lists cover its degrees with a strict surplus at some tip.  Throws
// NotAPoppy if p is malformed or c does not match p's vertex set.
bool verify_poppy_constructive(const Poppy& p, const Configuration& c);

struct ScanEntry {
    std::vector<Vertex> subset;  // sorted
    ReducibilityVerdict verdict;
};

// Abstract verdicts for every connected subset of V(g) \ V(h) with size
// <= max_size, in lexicographic subset order.
std::vector<ScanEntry> scan_reducible_up_to_size(const EmbeddedGraph& g, const SubgraphMask& h,
                                                 int max_size, const ConfigCaps& caps = {});

struct StamenOverlap {
    Vertex center = -1;
    Stamen first, second;           // both incident with 4-faces, sharing the root edge
    std::vector<Vertex> difference; // the path formed by the symmetric difference
    bool difference_is_stamen = false;
    bool short_enough = false;      // at most 5 edges
};

// For every pair of distinct v-stamens that are each incident with a 4-face
// and share their first edge, record whether their symmetric difference is a
// stamen with at most 5 edges.  Returns one entry per qualifying pair.
std::vector<StamenOverlap> stamen_overlap_property(const EmbeddedGraph& g, const SubgraphMask& h,
                                                   Vertex v, int max_stamen_vertices = 4);

}  // namespace florist
