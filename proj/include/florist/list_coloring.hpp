#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "florist/embedded_graph.hpp"
#include "florist/rational.hpp"

namespace florist {

using Color = int;

// Color lists per vertex, stored sorted and deduplicated.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);
    static ListAssignment uniform(int n, int k);  // every list {0,...,k-1}

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<Color>& at(Vertex v) const { return lists_[v]; }
    const std::vector<std::vector<Color>>& lists() const { return lists_; }
    int min_size() const;
    bool is_k_list(int k) const;  // every list has at least k colors

    // Lists of keep[i] become the lists of new vertex i.
    ListAssignment restricted_to(const std::vector<Vertex>& keep) const;

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<Color>> lists_;
};

// Partial coloring; the domain is the key set.
class Precoloring {
public:
    Precoloring() = default;

    void set(Vertex v, Color c) { map_[v] = c; }
    void erase(Vertex v) { map_.erase(v); }
    bool contains(Vertex v) const { return map_.count(v) != 0; }
    Color at(Vertex v) const { return map_.at(v); }
    int size() const { return static_cast<int>(map_.size()); }
    const std::map<Vertex, Color>& entries() const { return map_; }
    std::vector<Vertex> domain() const;

private:
    std::map<Vertex, Color> map_;
};

// Exact count, or confirmation that the count reached a requested threshold
// (value then holds the threshold and the true count is >= it).
struct CountResult {
    Int value;
    bool threshold_reached = false;

    static CountResult exact(Int v) { return CountResult{std::move(v), false}; }
    static CountResult reached(Int t) { return CountResult{std::move(t), true}; }
};

// Throws ImproperPrecoloring unless phi maps its domain into g's vertices,
// respects the lists, and is proper on g restricted to its domain.
void validate_precoloring(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi);

// Number of proper colorings of g extending phi with every color drawn from
// its list.  Short-circuits once `threshold` colorings are confirmed.  With
// jobs > 1 the top-level branch is split across threads; results match the
// sequential ones.  Throws EmptyList if an uncolored vertex has no colors.
CountResult count_extensions(const EmbeddedGraph& g, const ListAssignment& l,
                             const Precoloring& phi,
                             const std::optional<Int>& threshold = std::nullopt, int jobs = 1);

bool extends_to_at_least(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi,
                         const Int& k);

// Visits every full proper list coloring extending phi, in lexicographic
// order (vertex 0's color ascending, then vertex 1's, ...).  Return false
// from the visitor to stop early.
void for_each_coloring(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi,
                       const std::function<bool(const std::vector<Color>&)>& visit);

// Every block is a clique or an odd cycle: exactly the connected graphs that
// are not colorable from some assignment with |L(v)| = d(v).
bool is_gallai_tree(const EmbeddedGraph& g);

// Structural test: connected g is degree-choosable iff it is not a Gallai
// tree.  Throws DisconnectedInput.
bool is_degree_choosable_structural(const EmbeddedGraph& g);

struct SearchCaps {
    int max_vertices = 12;
    std::uint64_t max_yield = 1u << 20;  // collector guard for assignment streams
};

struct ChoosabilityResult {
    bool choosable = false;
    // Uncolorable assignment with |L(v)| = d(v); present iff not choosable.
    std::optional<ListAssignment> witness;
    std::uint64_t nodes_visited = 0;
};

// Exhaustive check over all assignments with |L(v)| = d(v), one per color
// renaming, pruning any partial assignment that is already colorable.
// Throws DisconnectedInput / SizeCapExceeded.
ChoosabilityResult is_degree_choosable_bruteforce(const EmbeddedGraph& g,
                                                  const SearchCaps& caps = {});

// Streams one representative per color-renaming orbit of the assignments
// with |L(v)| = sizes[v] drawn from `universe` colors, in canonical order
// (first item is the lexicographically least labeled assignment).  Return
// false from the visitor to stop.  Throws Validation if universe is smaller
// than the largest requested list.
void for_each_canonical_assignment(const std::vector<int>& sizes, int universe,
                                   const std::function<bool(const ListAssignment&)>& visit,
                                   const SearchCaps& caps = {});

// Materialized stream; throws SizeCapExceeded beyond caps.max_yield items.
std::vector<ListAssignment> canonical_list_assignments(const std::vector<int>& sizes, int universe,
                                                       const SearchCaps& caps = {});

}  // namespace florist
