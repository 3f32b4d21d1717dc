#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace florist;
using namespace florist::testing;

namespace {

// Every dart (a,b) and (b,a) must appear in exactly one face walk.
void check_dart_partition(const EmbeddedGraph& g) {
    std::map<std::pair<Vertex, Vertex>, int> seen;
    int total = 0;
    for (const FaceWalk& f : g.faces()) {
        for (const Dart& d : f.darts) {
            ++seen[{d.tail, d.head}];
            ++total;
        }
    }
    CHECK(total == 2 * g.edge_count());
    for (const auto& [dart, times] : seen) {
        CAPTURE(dart.first);
        CAPTURE(dart.second);
        CHECK(times == 1);
        CHECK(g.adjacent(dart.first, dart.second));
    }
    CHECK(static_cast<int>(seen.size()) == 2 * g.edge_count());
}

}  // namespace

TEST_SUITE("embedded_graph") {
    TEST_CASE("build rejects malformed rotation systems") {
        // missing reverse dart
        CHECK(thrown_code([] { EmbeddedGraph::build(2, {{1}, {}}); }) ==
              Errc::InconsistentRotation);
        // neighbor out of range
        CHECK(thrown_code([] { EmbeddedGraph::build(2, {{5}, {0}}); }) ==
              Errc::InconsistentRotation);
        // wrong number of rotation rows
        CHECK(thrown_code([] { EmbeddedGraph::build(3, {{1}, {0}}); }) ==
              Errc::InconsistentRotation);
        // loop
        CHECK(thrown_code([] { EmbeddedGraph::build(1, {{0}}); }) == Errc::NonSimpleGraph);
        // parallel edge
        CHECK(thrown_code([] { EmbeddedGraph::build(2, {{1, 1}, {0, 0}}); }) ==
              Errc::NonSimpleGraph);
        CHECK_NOTHROW(EmbeddedGraph::build(0, {}));
        CHECK_NOTHROW(EmbeddedGraph::build(2, {{1}, {0}}));
    }

    TEST_CASE("face tracing partitions the darts on every fixture") {
        for (const char* name :
             {"c4.json", "cube.json", "torus_4x4.json", "petersen.json", "k4.json", "k55.json",
              "path3_4lists.json", "c4_pendant.json", "fig1_stamen_host.json",
              "fig1_poppy_host.json", "figure2_host.json", "shared_stamen_host.json",
              "cor28_host.json"}) {
            CAPTURE(name);
            const Fixture fx = load_fixture(name);
            check_dart_partition(fx.graph);
            CHECK(trace_faces(fx.graph).size() == fx.graph.faces().size());
        }
    }

    TEST_CASE("Euler characteristic of the reference embeddings") {
        auto chi = [](const char* name) { return load_fixture(name).graph.euler_characteristic(); };
        CHECK(chi("c4.json") == 2);
        CHECK(chi("cube.json") == 2);
        CHECK(chi("path3_4lists.json") == 2);
        CHECK(chi("c4_pendant.json") == 2);
        CHECK(chi("figure2_host.json") == 2);
        CHECK(chi("torus_4x4.json") == 0);
        CHECK(chi("petersen.json") == -2);
        CHECK(chi("k55.json") == -10);

        const Fixture cube = load_fixture("cube.json");
        CHECK(cube.graph.face_count() == 6);
        for (const FaceWalk& f : cube.graph.faces()) {
            CHECK(f.length() == 4);
            CHECK(f.is_simple_cycle());
        }
        const Fixture torus = load_fixture("torus_4x4.json");
        CHECK(torus.graph.face_count() == 16);
        for (const FaceWalk& f : torus.graph.faces()) CHECK(f.length() == 4);
        CHECK(torus.graph.euler_genus() == 2);
        CHECK(cube.graph.euler_genus() == 0);
        CHECK(load_fixture("petersen.json").graph.euler_genus() == 4);
    }

    TEST_CASE("boundary walks may repeat vertices") {
        const Fixture path = load_fixture("path3_4lists.json");
        REQUIRE(path.graph.face_count() == 1);
        const FaceWalk& walk = path.graph.faces().front();
        CHECK(walk.length() == 4);
        CHECK(walk.instances_of(1) == 2);
        CHECK(walk.instances_of(0) == 1);
        CHECK(walk.instances_of(3) == 0);
        CHECK_FALSE(walk.is_simple_cycle());
        CHECK(walk.contains_vertex(2));
        CHECK_FALSE(walk.contains_vertex(3));

        const Fixture c4 = load_fixture("c4.json");
        for (const FaceWalk& f : c4.graph.faces()) {
            CHECK(f.is_simple_cycle());
            CHECK(f.vertices().size() == 4);
        }
    }

    TEST_CASE("triangle detection and connectivity") {
        CHECK(load_fixture("k4.json").graph.has_triangle());
        for (const char* name : {"c4.json", "cube.json", "torus_4x4.json", "petersen.json",
                                 "k55.json", "figure2_host.json"}) {
            CAPTURE(name);
            const Fixture fx = load_fixture(name);
            CHECK_FALSE(fx.graph.has_triangle());
            CHECK(fx.graph.is_connected());
        }
        const EmbeddedGraph two_edges = EmbeddedGraph::build(4, {{1}, {0}, {3}, {2}});
        CHECK_FALSE(two_edges.is_connected());
        CHECK(EmbeddedGraph::build(0, {}).is_connected());
        CHECK(EmbeddedGraph::build(1, {{}}).is_connected());
    }

    TEST_CASE("vertex deletion remaps consistently") {
        const Fixture c4 = load_fixture("c4.json");

        DeletionResult unchanged = delete_vertices(c4.graph, {});
        CHECK(unchanged.graph.rotations() == c4.graph.rotations());
        for (Vertex v = 0; v < 4; ++v) {
            CHECK(unchanged.old_of_new[v] == v);
            CHECK(unchanged.new_of_old[v] == v);
        }

        DeletionResult del = delete_vertices(c4.graph, {2});
        CHECK(del.graph.vertex_count() == 3);
        CHECK(del.graph.edge_count() == 2);
        CHECK(del.new_of_old[2] == -1);
        for (Vertex nv = 0; nv < 3; ++nv) CHECK(del.new_of_old[del.old_of_new[nv]] == nv);
        // the survivors keep their mutual adjacency: 0-1 and 0-3 remain, 1-3 absent
        CHECK(del.graph.adjacent(del.new_of_old[0], del.new_of_old[1]));
        CHECK(del.graph.adjacent(del.new_of_old[0], del.new_of_old[3]));
        CHECK_FALSE(del.graph.adjacent(del.new_of_old[1], del.new_of_old[3]));

        const Fixture cube = load_fixture("cube.json");
        DeletionResult half = delete_vertices(cube.graph, {4, 5, 6, 7});
        CHECK(half.graph.vertex_count() == 4);
        CHECK(half.graph.edge_count() == 4);  // the inner 4-cycle survives
        for (Vertex nv = 0; nv < 4; ++nv) CHECK(half.graph.degree(nv) == 2);
    }

    TEST_CASE("blocks split at cut vertices") {
        const Fixture pend = load_fixture("c4_pendant.json");
        std::vector<Block> bs = blocks(pend.graph);
        REQUIRE(bs.size() == 2);
        std::sort(bs.begin(), bs.end(),
                  [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
        CHECK(bs[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(bs[0].edges.size() == 4);
        CHECK(bs[1].vertices == std::vector<Vertex>{0, 4});
        CHECK(bs[1].edges == std::vector<std::pair<Vertex, Vertex>>{{0, 4}});

        CHECK(blocks(load_fixture("k4.json").graph).size() == 1);
        CHECK(blocks(load_fixture("c4.json").graph).size() == 1);
        CHECK(blocks(load_fixture("path3_4lists.json").graph).size() == 2);

        const EmbeddedGraph with_isolated = EmbeddedGraph::build(3, {{1}, {0}, {}});
        std::vector<Block> iso_blocks = blocks(with_isolated);
        REQUIRE(iso_blocks.size() == 2);
        std::sort(iso_blocks.begin(), iso_blocks.end(),
                  [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
        CHECK(iso_blocks[1].vertices == std::vector<Vertex>{2});
        CHECK(iso_blocks[1].edges.empty());
    }

    TEST_CASE("components carry the restricted mask") {
        // two disjoint 4-cycles, H = {1, 2} with the edge 1-2 in the first copy
        EmbeddedGraph two = EmbeddedGraph::build(
            8, {{1, 3}, {2, 0}, {3, 1}, {0, 2}, {5, 7}, {6, 4}, {7, 5}, {4, 6}});
        SubgraphMask h = SubgraphMask::empty(8);
        h.add_edge(1, 2);
        std::vector<ComponentPiece> parts = components(two, h);
        REQUIRE(parts.size() == 2);
        std::sort(parts.begin(), parts.end(), [](const ComponentPiece& a, const ComponentPiece& b) {
            return a.old_of_new < b.old_of_new;
        });
        CHECK(parts[0].old_of_new == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(parts[1].old_of_new == std::vector<Vertex>{4, 5, 6, 7});
        CHECK(parts[0].mask.vertex_count() == 2);
        CHECK(parts[0].mask.has_edge(1, 2));
        CHECK(parts[1].mask.vertex_count() == 0);
        CHECK(parts[0].graph.euler_characteristic() == 2);
        CHECK(parts[1].graph.euler_characteristic() == 2);

        const Fixture cube = load_fixture("cube.json");
        std::vector<ComponentPiece> one = components(cube.graph, SubgraphMask::empty(8));
        REQUIRE(one.size() == 1);
        CHECK(one[0].graph.rotations() == cube.graph.rotations());
    }

    TEST_CASE("breadth-first distances") {
        const Fixture cube = load_fixture("cube.json");
        std::vector<int> d = bfs_distances(cube.graph, 0);
        CHECK(d[0] == 0);
        CHECK(d[1] == 1);
        CHECK(d[3] == 1);
        CHECK(d[4] == 1);
        CHECK(d[2] == 2);
        CHECK(d[6] == 3);

        const EmbeddedGraph split = EmbeddedGraph::build(3, {{1}, {0}, {}});
        std::vector<int> far = bfs_distances(split, 0);
        CHECK(far[1] == 1);
        CHECK(far[2] == -1);
    }

    TEST_CASE("mask invariants") {
        SubgraphMask h = SubgraphMask::empty(5);
        CHECK(h.vertex_count() == 0);
        h.add_edge(3, 1);
        CHECK(h.has_vertex(1));
        CHECK(h.has_vertex(3));
        CHECK(h.has_edge(1, 3));
        CHECK(h.has_edge(3, 1));  // normalized storage
        CHECK_FALSE(h.has_edge(1, 2));
        h.add_vertex(0);
        CHECK(h.vertex_list() == std::vector<Vertex>{0, 1, 3});
        CHECK_FALSE(h.has_vertex(-1));
        CHECK_FALSE(h.has_vertex(99));
    }
}
