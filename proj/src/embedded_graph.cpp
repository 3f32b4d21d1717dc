#include "florist/embedded_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace florist {

std::vector<Vertex> FaceWalk::vertices() const {
    std::vector<Vertex> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.tail);
    return out;
}

bool FaceWalk::contains_vertex(Vertex v) const {
    for (const Dart& d : darts)
        if (d.tail == v) return true;
    return false;
}

int FaceWalk::instances_of(Vertex v) const {
    int k = 0;
    for (const Dart& d : darts)
        if (d.tail == v) ++k;
    return k;
}

bool FaceWalk::is_simple_cycle() const {
    std::vector<Vertex> vs = vertices();
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool SubgraphMask::has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) != 0;
}

void SubgraphMask::add_vertex(Vertex v) {
    if (v < 0 || v >= size()) throw Error(Errc::Validation, "mask vertex out of range");
    vertex[v] = 1;
}

void SubgraphMask::add_edge(Vertex a, Vertex b) {
    add_vertex(a);
    add_vertex(b);
    if (a == b) throw Error(Errc::Validation, "mask edge is a loop");
    if (a > b) std::swap(a, b);
    edges.insert({a, b});
}

int SubgraphMask::vertex_count() const {
    int k = 0;
    for (char c : vertex) k += (c != 0);
    return k;
}

std::vector<Vertex> SubgraphMask::vertex_list() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (vertex[v]) out.push_back(v);
    return out;
}

EmbeddedGraph EmbeddedGraph::build(int n, std::vector<std::vector<Vertex>> rotations) {
    if (n < 0) throw Error(Errc::Validation, "negative vertex count");
    if (static_cast<int>(rotations.size()) != n)
        throw Error(Errc::InconsistentRotation,
                    "expected " + std::to_string(n) + " rotations, got " +
                        std::to_string(rotations.size()));
    EmbeddedGraph g;
    g.n_ = n;
    g.rotations_ = std::move(rotations);

    long long dart_total = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::unordered_set<Vertex> seen;
        for (Vertex w : g.rotations_[v]) {
            if (w < 0 || w >= n)
                throw Error(Errc::InconsistentRotation,
                            "rotation of " + std::to_string(v) + " names vertex " +
                                std::to_string(w) + " outside 0.." + std::to_string(n - 1));
            if (w == v)
                throw Error(Errc::NonSimpleGraph, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw Error(Errc::NonSimpleGraph,
                            "parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        }
        dart_total += static_cast<long long>(g.rotations_[v].size());
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.rotations_[v]) {
            const auto& rw = g.rotations_[w];
            if (std::find(rw.begin(), rw.end(), v) == rw.end())
                throw Error(Errc::InconsistentRotation,
                            "dart " + std::to_string(v) + "->" + std::to_string(w) +
                                " has no reverse");
        }
    }
    g.m_ = static_cast<int>(dart_total / 2);
    g.trace_all_faces();
    return g;
}

bool EmbeddedGraph::adjacent(Vertex a, Vertex b) const {
    const auto& ra = rotations_[a];
    return std::find(ra.begin(), ra.end(), b) != ra.end();
}

std::vector<std::pair<Vertex, Vertex>> EmbeddedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : rotations_[v])
            if (v < w) out.push_back({v, w});
    std::sort(out.begin(), out.end());
    return out;
}

void EmbeddedGraph::trace_all_faces() {
    // Position of each neighbor inside each rotation, for dart successors.
    std::vector<std::unordered_map<Vertex, int>> pos(n_);
    for (Vertex v = 0; v < n_; ++v)
        for (int i = 0; i < degree(v); ++i) pos[v][rotations_[v][i]] = i;

    // visited darts keyed by (tail, index in tail's rotation)
    std::vector<std::vector<char>> visited(n_);
    for (Vertex v = 0; v < n_; ++v) visited[v].assign(degree(v), 0);

    faces_.clear();
    for (Vertex v0 = 0; v0 < n_; ++v0) {
        for (int i0 = 0; i0 < degree(v0); ++i0) {
            if (visited[v0][i0]) continue;
            FaceWalk walk;
            Vertex a = v0;
            int ia = i0;
            do {
                visited[a][ia] = 1;
                Vertex b = rotations_[a][ia];
                walk.darts.push_back({a, b});
                // Next dart: successor of (b,a) in the rotation at b.
                int j = pos[b][a];
                ia = (j + 1) % degree(b);
                a = b;
            } while (!(a == v0 && ia == i0));
            faces_.push_back(std::move(walk));
        }
    }
}

bool EmbeddedGraph::has_triangle() const {
    std::vector<std::vector<char>> adj(n_, std::vector<char>(n_, 0));
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : rotations_[v]) adj[v][w] = 1;
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : rotations_[v]) {
            if (w < v) continue;
            for (Vertex u : rotations_[w])
                if (u > w && adj[v][u]) return true;
        }
    return false;
}

bool EmbeddedGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> dist = bfs_distances(*this, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g) { return g.faces(); }

DeletionResult delete_vertices(const EmbeddedGraph& g, const std::vector<Vertex>& s) {
    const int n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (Vertex v : s) {
        if (v < 0 || v >= n) throw Error(Errc::Validation, "delete set names a missing vertex");
        drop[v] = 1;
    }
    DeletionResult res;
    res.new_of_old.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (drop[v]) continue;
        res.new_of_old[v] = static_cast<Vertex>(res.old_of_new.size());
        res.old_of_new.push_back(v);
    }
    std::vector<std::vector<Vertex>> rot(res.old_of_new.size());
    for (std::size_t i = 0; i < res.old_of_new.size(); ++i) {
        for (Vertex w : g.rotation(res.old_of_new[i]))
            if (!drop[w]) rot[i].push_back(res.new_of_old[w]);
    }
    const int kept = static_cast<int>(rot.size());
    res.graph = EmbeddedGraph::build(kept, std::move(rot));
    return res;
}

namespace {

struct BlockFinder {
    const EmbeddedGraph& g;
    std::vector<int> num, low;
    std::vector<std::pair<Vertex, Vertex>> stack;
    std::vector<Block> out;
    int timer = 0;

    explicit BlockFinder(const EmbeddedGraph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(const std::pair<Vertex, Vertex>& until) {
        Block b;
        std::set<Vertex> vs;
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            Vertex a = std::min(e.first, e.second), c = std::max(e.first, e.second);
            b.edges.push_back({a, c});
            vs.insert(a);
            vs.insert(c);
            if (e == until) break;
        }
        b.vertices.assign(vs.begin(), vs.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
    }

    void dfs(Vertex v, Vertex parent) {
        num[v] = low[v] = timer++;
        for (Vertex w : g.rotation(v)) {
            if (w == parent) {
                parent = -2;  // skip the tree edge once; parallel edges are impossible
                continue;
            }
            if (num[w] == -1) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) pop_block({v, w});
            } else if (num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

}  // namespace

std::vector<Block> blocks(const EmbeddedGraph& g) {
    BlockFinder f(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (f.num[v] != -1) continue;
        f.dfs(v, -1);
        if (g.degree(v) == 0) f.out.push_back(Block{{v}, {}});
    }
    return f.out;
}

std::vector<ComponentPiece> components(const EmbeddedGraph& g, const SubgraphMask& h) {
    const int n = g.vertex_count();
    if (h.size() != n) throw Error(Errc::Validation, "mask size differs from graph");
    std::vector<int> comp(n, -1);
    int k = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::queue<Vertex> q;
        q.push(v);
        comp[v] = k;
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (Vertex b : g.rotation(a))
                if (comp[b] == -1) {
                    comp[b] = k;
                    q.push(b);
                }
        }
        ++k;
    }
    std::vector<ComponentPiece> out;
    out.reserve(k);
    for (int c = 0; c < k; ++c) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (comp[v] != c) rest.push_back(v);
        DeletionResult del = delete_vertices(g, rest);
        ComponentPiece piece;
        piece.mask = SubgraphMask::empty(del.graph.vertex_count());
        for (Vertex v = 0; v < n; ++v)
            if (comp[v] == c && h.has_vertex(v)) piece.mask.add_vertex(del.new_of_old[v]);
        for (const auto& e : h.edges)
            if (comp[e.first] == c)
                piece.mask.add_edge(del.new_of_old[e.first], del.new_of_old[e.second]);
        piece.graph = std::move(del.graph);
        piece.old_of_new = std::move(del.old_of_new);
        out.push_back(std::move(piece));
    }
    return out;
}

std::vector<int> bfs_distances(const EmbeddedGraph& g, Vertex src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex a = q.front();
        q.pop();
        for (Vertex b : g.rotation(a))
            if (dist[b] == -1) {
                dist[b] = dist[a] + 1;
                q.push(b);
            }
    }
    return dist;
}

}  // namespace florist
