#pragma once

#include <set>
#include <utility>
#include <vector>

#include "florist/error.hpp"

namespace florist {

using Vertex = int;

// One side of an edge: the edge {tail,head} traversed from tail to head.
struct Dart {
    Vertex tail = -1;
    Vertex head = -1;

    bool operator==(const Dart&) const = default;
};

// Closed boundary walk of one face, as the cyclic dart sequence produced by
// face tracing.  A vertex can appear more than once (cut vertices, bridges).
struct FaceWalk {
    std::vector<Dart> darts;

    int length() const { return static_cast<int>(darts.size()); }
    std::vector<Vertex> vertices() const;          // tails, in walk order
    bool contains_vertex(Vertex v) const;
    int instances_of(Vertex v) const;              // tail occurrences of v
    bool is_simple_cycle() const;                  // all walk vertices distinct
};

// Vertex/edge subset of a host graph, used for the precolored subgraph H.
// Invariant: every edge has both endpoints selected.
struct SubgraphMask {
    std::vector<char> vertex;                      // size n, 0/1 flags
    std::set<std::pair<Vertex, Vertex>> edges;     // normalized a < b

    static SubgraphMask empty(int n) { return SubgraphMask{std::vector<char>(n, 0), {}}; }

    int size() const { return static_cast<int>(vertex.size()); }
    bool has_vertex(Vertex v) const { return v >= 0 && v < size() && vertex[v] != 0; }
    bool has_edge(Vertex a, Vertex b) const;
    void add_vertex(Vertex v);
    void add_edge(Vertex a, Vertex b);             // selects endpoints too
    int vertex_count() const;
    std::vector<Vertex> vertex_list() const;       // ascending
};

// Simple graph with a rotation system (clockwise neighbor order per vertex).
// Immutable once built; faces and Euler characteristic are computed eagerly.
class EmbeddedGraph {
public:
    // Validates simplicity (no loops or parallel darts) and rotation
    // consistency ((a,b) listed at a iff (b,a) listed at b).
    static EmbeddedGraph build(int n, std::vector<std::vector<Vertex>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
    bool adjacent(Vertex a, Vertex b) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // normalized, sorted

    const std::vector<FaceWalk>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int euler_characteristic() const { return n_ - m_ + face_count(); }
    // Euler genus 2 - chi; for a connected orientable embedding the
    // orientable genus is half of it.
    int euler_genus() const { return 2 - euler_characteristic(); }

    bool has_triangle() const;
    bool is_connected() const;

    EmbeddedGraph() = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> rotations_;
    std::vector<FaceWalk> faces_;

    void trace_all_faces();
};

// Result of deleting a vertex set: the surviving graph plus remap tables.
struct DeletionResult {
    EmbeddedGraph graph;
    std::vector<Vertex> old_of_new;   // index: new id -> original id
    std::vector<Vertex> new_of_old;   // index: original id -> new id, -1 if deleted
};

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g);

DeletionResult delete_vertices(const EmbeddedGraph& g, const std::vector<Vertex>& s);

// Maximal 2-connected pieces; bridges are 2-vertex blocks and isolated
// vertices appear as single-vertex blocks.
struct Block {
    std::vector<Vertex> vertices;                     // ascending
    std::vector<std::pair<Vertex, Vertex>> edges;     // normalized, sorted
};

std::vector<Block> blocks(const EmbeddedGraph& g);

// One connected component with the mask restricted and remapped onto it.
struct ComponentPiece {
    EmbeddedGraph graph;
    SubgraphMask mask;
    std::vector<Vertex> old_of_new;
};

std::vector<ComponentPiece> components(const EmbeddedGraph& g, const SubgraphMask& h);

// Shortest-path distances from src in g (-1 for unreachable).
std::vector<int> bfs_distances(const EmbeddedGraph& g, Vertex src);

}  // namespace florist
