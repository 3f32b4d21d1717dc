#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "florist/cli_io.hpp"
#include "florist/embedded_graph.hpp"
#include "florist/list_coloring.hpp"

namespace florist::testing {

// Runs f, requiring it to throw a florist::Error, and returns its code.
template <class F>
Errc thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a florist::Error");
    return Errc::Validation;
}

inline std::string corpus_path(const std::string& name) {
    return std::string(FLORIST_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline EmbeddingDocument load_doc(const std::string& name) {
    return parse_embedding(read_file(corpus_path(name)));
}

struct Fixture {
    EmbeddingDocument doc;
    EmbeddedGraph graph;
    SubgraphMask mask;
    ListAssignment lists;
    Precoloring phi;
};

inline Fixture load_fixture(const std::string& name) {
    EmbeddingDocument doc = load_doc(name);
    EmbeddedGraph g = document_graph(doc);
    SubgraphMask h = document_mask(doc, g);
    ListAssignment l = document_lists(doc);
    Precoloring phi = document_precoloring(doc);
    return Fixture{std::move(doc), std::move(g), std::move(h), std::move(l), std::move(phi)};
}

}  // namespace florist::testing
