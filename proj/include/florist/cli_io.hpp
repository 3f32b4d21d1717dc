#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "florist/embedded_graph.hpp"
#include "florist/list_coloring.hpp"

namespace florist {

// On-disk embedding: a rotation system plus optional hypothesis subgraph,
// lists, and precoloring.  Version "1" is the only one accepted.
struct EmbeddingDocument {
    std::string version = "1";
    int n = 0;
    std::vector<std::vector<Vertex>> rotations;
    std::vector<Vertex> h_vertices;
    std::vector<std::pair<Vertex, Vertex>> h_edges;
    std::optional<std::vector<std::vector<Color>>> lists;
    std::optional<std::vector<std::pair<Vertex, Color>>> precoloring;

    bool operator==(const EmbeddingDocument&) const = default;
};

// Throws Syntax on malformed JSON and Validation (naming the field path) on
// structural problems; serialize -> parse round-trips byte-for-byte inputs
// into equal documents.
EmbeddingDocument parse_embedding(const std::string& text);
std::string serialize_embedding(const EmbeddingDocument& doc);

EmbeddedGraph document_graph(const EmbeddingDocument& doc);
SubgraphMask document_mask(const EmbeddingDocument& doc, const EmbeddedGraph& g);
// Falls back to uniform 4-lists {0,1,2,3} when the document has none.
ListAssignment document_lists(const EmbeddingDocument& doc);
Precoloring document_precoloring(const EmbeddingDocument& doc);

// graph6 batch import; one document per input line, order preserved.  The
// optional side file is a JSON array of per-vertex neighbor lists imposed as
// the rotation system of every imported graph (default: ascending order).
std::vector<EmbeddingDocument> import_graph6(const std::string& text,
                                             const std::optional<std::string>& rotations_text =
                                                 std::nullopt);

// 64-bit FNV-1a, rendered as 16 hex digits; stamps inputs into reports.
std::string fnv1a_digest(const std::string& bytes);

// Executes one subcommand (faces, genus, count, check-reducible,
// find-configs, discharge, verify-bound, criticality, scan) against an
// embedding document or .g6 file.  Prints a JSON report to `out` and
// returns the process exit code: 0 pass, 1 verified-false, 2 input error,
// 3 cap exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace florist
