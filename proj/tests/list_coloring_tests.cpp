#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace florist;
using namespace florist::testing;

namespace {

// Independent reference counter: a plain mixed-radix odometer over every
// combination of list choices, with no propagation or pruning.
Int odometer_count(const EmbeddedGraph& g, const ListAssignment& l, const Precoloring& phi) {
    const int n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> es = g.edges();
    for (Vertex v = 0; v < n; ++v)
        if (l.at(v).empty()) return 0;
    std::vector<int> digit(n, 0);
    Int total = 0;
    while (true) {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            if (phi.contains(v) && l.at(v)[digit[v]] != phi.at(v)) ok = false;
        for (std::size_t i = 0; i < es.size() && ok; ++i)
            if (l.at(es[i].first)[digit[es[i].first]] == l.at(es[i].second)[digit[es[i].second]])
                ok = false;
        if (ok) ++total;
        int pos = n - 1;
        while (pos >= 0 && digit[pos] + 1 == static_cast<int>(l.at(pos).size())) {
            digit[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digit[pos];
    }
    return total;
}

EmbeddedGraph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& es) {
    std::vector<std::vector<Vertex>> rot(n);
    for (const auto& [a, b] : es) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    return EmbeddedGraph::build(n, std::move(rot));
}

}  // namespace

TEST_SUITE("list_coloring") {
    TEST_CASE("list assignments normalize their colors") {
        ListAssignment l({{3, 1, 1, 2}, {0}});
        CHECK(l.at(0) == std::vector<Color>{1, 2, 3});
        CHECK(l.at(1) == std::vector<Color>{0});
        CHECK(l.min_size() == 1);
        CHECK(l.is_k_list(1));
        CHECK_FALSE(l.is_k_list(2));
        CHECK(ListAssignment::uniform(3, 4).is_k_list(4));
        CHECK(l.restricted_to({1}).at(0) == std::vector<Color>{0});
        CHECK_THROWS_AS(l.restricted_to({5}), Error);
    }

    TEST_CASE("precoloring validation") {
        const Fixture c4 = load_fixture("c4_4lists.json");
        Precoloring ok;
        ok.set(0, 1);
        ok.set(2, 1);  // 0 and 2 are non-adjacent in C4
        CHECK_NOTHROW(validate_precoloring(c4.graph, c4.lists, ok));

        Precoloring outside;
        outside.set(7, 0);
        CHECK(thrown_code([&] { validate_precoloring(c4.graph, c4.lists, outside); }) ==
              Errc::ImproperPrecoloring);

        Precoloring off_list;
        off_list.set(1, 99);
        CHECK(thrown_code([&] { validate_precoloring(c4.graph, c4.lists, off_list); }) ==
              Errc::ImproperPrecoloring);

        Precoloring clash;
        clash.set(0, 2);
        clash.set(1, 2);
        CHECK(thrown_code([&] { validate_precoloring(c4.graph, c4.lists, clash); }) ==
              Errc::ImproperPrecoloring);
    }

    TEST_CASE("counting matches the reference values") {
        auto count = [](const char* name) {
            const Fixture fx = load_fixture(name);
            return count_extensions(fx.graph, fx.lists, fx.phi).value;
        };
        CHECK(count("c4_2lists.json") == 2);
        CHECK(count("c4_4lists.json") == 84);
        CHECK(count("c4_H1.json") == 21);
        CHECK(count("c5_2lists.json") == 0);
        CHECK(count("path3_4lists.json") == 36);
        CHECK(count("c4_pendant.json") == 252);
        CHECK(count("cube.json") == 2652);
        CHECK(count("petersen.json") == 12960);
    }

    TEST_CASE("counting agrees with the odometer on the small fixtures") {
        for (const char* name : {"c4_2lists.json", "c4_4lists.json", "c4_H1.json",
                                 "c5_2lists.json", "path3_4lists.json", "c4_pendant.json",
                                 "cube.json", "cor28_host.json", "k4.json"}) {
            CAPTURE(name);
            const Fixture fx = load_fixture(name);
            CHECK(count_extensions(fx.graph, fx.lists, fx.phi).value ==
                  odometer_count(fx.graph, fx.lists, fx.phi));
        }
    }

    TEST_CASE("counting agrees with the odometer on random instances") {
        std::mt19937 rng(20260814);
        for (int trial = 0; trial < 40; ++trial) {
            CAPTURE(trial);
            const int n = 4 + static_cast<int>(rng() % 4);
            std::vector<std::pair<Vertex, Vertex>> es;
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if (rng() % 10 < 4) es.push_back({a, b});
            EmbeddedGraph g = graph_from_edges(n, es);

            std::vector<std::vector<Color>> lists(n);
            for (Vertex v = 0; v < n; ++v) {
                const int size = 1 + static_cast<int>(rng() % 4);
                while (static_cast<int>(lists[v].size()) < size)
                    lists[v].push_back(static_cast<Color>(rng() % 6));
                std::sort(lists[v].begin(), lists[v].end());
                lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
            }
            ListAssignment l(lists);

            Precoloring phi;
            const Vertex seed = static_cast<Vertex>(rng() % n);
            phi.set(seed, l.at(seed)[rng() % l.at(seed).size()]);

            CHECK(count_extensions(g, l, phi).value == odometer_count(g, l, phi));
        }
    }

    TEST_CASE("counts are invariant under renaming the colors") {
        const Fixture fx = load_fixture("c4_H1.json");
        auto rename = [](Color c) { return 10 - c; };
        std::vector<std::vector<Color>> lists;
        for (const auto& l : fx.lists.lists()) {
            std::vector<Color> renamed;
            for (Color c : l) renamed.push_back(rename(c));
            lists.push_back(std::move(renamed));
        }
        Precoloring phi;
        for (const auto& [v, c] : fx.phi.entries()) phi.set(v, rename(c));
        CHECK(count_extensions(fx.graph, ListAssignment(lists), phi).value ==
              count_extensions(fx.graph, fx.lists, fx.phi).value);
    }

    TEST_CASE("counts satisfy the branching recurrence") {
        const Fixture cube = load_fixture("cube.json");
        Int total = 0;
        for (Color c : cube.lists.at(0)) {
            Precoloring phi;
            phi.set(0, c);
            total += count_extensions(cube.graph, cube.lists, phi).value;
        }
        CHECK(total == 2652);
    }

    TEST_CASE("threshold short-circuit and parallel runs agree") {
        const Fixture cube = load_fixture("cube.json");

        CountResult below = count_extensions(cube.graph, cube.lists, cube.phi, Int(100));
        CHECK(below.threshold_reached);
        CHECK(below.value == 100);

        CountResult at = count_extensions(cube.graph, cube.lists, cube.phi, Int(2652));
        CHECK(at.threshold_reached);
        CHECK(at.value == 2652);

        CountResult above = count_extensions(cube.graph, cube.lists, cube.phi, Int(2653));
        CHECK_FALSE(above.threshold_reached);
        CHECK(above.value == 2652);

        for (int jobs : {2, 3, 4}) {
            CAPTURE(jobs);
            CHECK(count_extensions(cube.graph, cube.lists, cube.phi, std::nullopt, jobs).value ==
                  2652);
            CountResult t = count_extensions(cube.graph, cube.lists, cube.phi, Int(100), jobs);
            CHECK(t.threshold_reached);
            CHECK(t.value == 100);
        }

        CHECK(extends_to_at_least(cube.graph, cube.lists, cube.phi, 2652));
        CHECK_FALSE(extends_to_at_least(cube.graph, cube.lists, cube.phi, 2653));
        CHECK(extends_to_at_least(cube.graph, cube.lists, cube.phi, 0));
        CHECK_THROWS_AS(count_extensions(cube.graph, cube.lists, cube.phi, Int(0)), Error);
    }

    TEST_CASE("empty lists are rejected unless precolored") {
        EmbeddedGraph edge = graph_from_edges(2, {{0, 1}});
        ListAssignment l({{0, 1}, {}});
        CHECK(thrown_code([&] { count_extensions(edge, l, {}); }) == Errc::EmptyList);
        // a precolored vertex may have any listed color; an empty list still
        // fails its own membership check
        ListAssignment single({{0, 1}, {2}});
        Precoloring phi;
        phi.set(1, 2);
        CHECK(count_extensions(edge, single, phi).value == 2);
    }

    TEST_CASE("coloring visitor runs in lexicographic order") {
        const Fixture path = load_fixture("path3_4lists.json");
        std::vector<std::vector<Color>> seen;
        for_each_coloring(path.graph, path.lists, path.phi, [&](const std::vector<Color>& col) {
            seen.push_back(col);
            return true;
        });
        CHECK(static_cast<Int>(seen.size()) ==
              count_extensions(path.graph, path.lists, path.phi).value);
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        REQUIRE(!seen.empty());
        CHECK(seen.front() == std::vector<Color>{1, 2, 1});  // lists start at color 1

        int visits = 0;
        for_each_coloring(path.graph, path.lists, path.phi, [&](const std::vector<Color>&) {
            ++visits;
            return false;
        });
        CHECK(visits == 1);
    }

    TEST_CASE("Gallai-tree recognition") {
        CHECK(is_gallai_tree(load_fixture("k4.json").graph));            // clique
        CHECK_FALSE(is_gallai_tree(load_fixture("c4.json").graph));      // even cycle
        CHECK(is_gallai_tree(load_fixture("c5_2lists.json").graph));     // odd cycle
        CHECK(is_gallai_tree(load_fixture("path3_4lists.json").graph));  // tree
        CHECK_FALSE(is_gallai_tree(load_fixture("cube.json").graph));
        CHECK_FALSE(is_gallai_tree(load_fixture("c4_pendant.json").graph));

        // bowtie: two triangles sharing vertex 0 - every block is a clique
        EmbeddedGraph bowtie =
            graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
        CHECK(is_gallai_tree(bowtie));

        // K4 minus an edge: one block, neither clique nor odd cycle
        EmbeddedGraph diamond = graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
        CHECK_FALSE(is_gallai_tree(diamond));
    }

    TEST_CASE("degree-choosability: structural test") {
        CHECK_FALSE(is_degree_choosable_structural(load_fixture("k4.json").graph));
        CHECK(is_degree_choosable_structural(load_fixture("c4.json").graph));
        CHECK(is_degree_choosable_structural(load_fixture("cube.json").graph));
        CHECK(thrown_code([] {
                  is_degree_choosable_structural(EmbeddedGraph::build(2, {{}, {}}));
              }) == Errc::DisconnectedInput);
    }

    TEST_CASE("degree-choosability: exhaustive witness search") {
        ChoosabilityResult c4 = is_degree_choosable_bruteforce(load_fixture("c4.json").graph);
        CHECK(c4.choosable);
        CHECK_FALSE(c4.witness.has_value());

        const EmbeddedGraph k4 = load_fixture("k4.json").graph;
        ChoosabilityResult k4r = is_degree_choosable_bruteforce(k4);
        CHECK_FALSE(k4r.choosable);
        REQUIRE(k4r.witness.has_value());
        for (Vertex v = 0; v < 4; ++v)
            CHECK(static_cast<int>(k4r.witness->at(v).size()) == k4.degree(v));
        CHECK(count_extensions(k4, *k4r.witness, {}).value == 0);

        const EmbeddedGraph c5 = load_fixture("c5_2lists.json").graph;
        ChoosabilityResult c5r = is_degree_choosable_bruteforce(c5);
        CHECK_FALSE(c5r.choosable);
        REQUIRE(c5r.witness.has_value());
        CHECK(count_extensions(c5, *c5r.witness, {}).value == 0);

        CHECK(thrown_code([] {
                  is_degree_choosable_bruteforce(EmbeddedGraph::build(2, {{}, {}}));
              }) == Errc::DisconnectedInput);
        SearchCaps tight;
        tight.max_vertices = 3;
        CHECK(thrown_code([&] {
                  is_degree_choosable_bruteforce(load_fixture("c4.json").graph, tight);
              }) == Errc::SizeCapExceeded);
    }

    TEST_CASE("structural and exhaustive tests agree on small connected graphs") {
        const std::string text = read_file(corpus_path("connected_n1_6.g6"));
        int tested = 0;
        for (const EmbeddingDocument& doc : import_graph6(text)) {
            if (doc.n > 5) continue;
            EmbeddedGraph g = document_graph(doc);
            CAPTURE(doc.n);
            CAPTURE(g.edge_count());
            CHECK(is_degree_choosable_structural(g) == is_degree_choosable_bruteforce(g).choosable);
            ++tested;
        }
        CHECK(tested == 31);  // 1 + 1 + 2 + 6 + 21 connected graphs up to 5 vertices
    }

    TEST_CASE("canonical assignment streams") {
        std::vector<ListAssignment> pairs = canonical_list_assignments({2, 2}, 4);
        REQUIRE(pairs.size() == 3);
        CHECK(pairs[0] == ListAssignment({{0, 1}, {0, 1}}));
        std::set<std::vector<std::vector<Color>>> seen;
        for (const ListAssignment& a : pairs) seen.insert(a.lists());
        CHECK(seen.count({{0, 1}, {0, 1}}) == 1);
        CHECK(seen.count({{0, 1}, {0, 2}}) == 1);
        CHECK(seen.count({{0, 1}, {2, 3}}) == 1);

        // orbit counts depend only on the meet pattern once the universe is
        // at least the total size
        CHECK(canonical_list_assignments({2, 2}, 3).size() == 2);
        CHECK(canonical_list_assignments({2, 2}, 6).size() == 3);
        CHECK(canonical_list_assignments({2, 2, 2}, 6).size() == 16);
        CHECK(canonical_list_assignments({2, 2, 2, 2}, 8).size() == 139);

        CHECK(thrown_code([] { canonical_list_assignments({3}, 2); }) == Errc::Validation);
        SearchCaps tiny;
        tiny.max_yield = 2;
        CHECK(thrown_code([&] { canonical_list_assignments({2, 2, 2}, 6, tiny); }) ==
              Errc::SizeCapExceeded);

        int visited = 0;
        for_each_canonical_assignment({2, 2, 2}, 6, [&](const ListAssignment&) {
            ++visited;
            return visited < 5;
        });
        CHECK(visited == 5);
    }
}
