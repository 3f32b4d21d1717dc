#include "florist/cli_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "florist/configurations.hpp"
#include "florist/discharging.hpp"
#include "florist/rational.hpp"
#include "florist/theorem_harness.hpp"

namespace florist {

using nlohmann::json;

namespace {

[[noreturn]] void fail_field(const std::string& path, const std::string& why) {
    throw Error(Errc::Validation, path + ": " + why);
}

int field_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail_field(path, "expected an integer");
    return j.get<int>();
}

std::vector<int> field_int_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail_field(path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(field_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

EmbeddingDocument parse_embedding(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::Syntax, e.what());
    }
    if (!j.is_object()) fail_field("$", "expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "version" && key != "n" && key != "rotations" && key != "H_vertices" &&
            key != "H_edges" && key != "lists" && key != "precoloring")
            fail_field(key, "unknown field");

    EmbeddingDocument doc;
    if (!j.contains("version") || !j["version"].is_string())
        fail_field("version", "expected a string");
    doc.version = j["version"].get<std::string>();
    if (doc.version != "1") fail_field("version", "unsupported version '" + doc.version + "'");

    if (!j.contains("n")) fail_field("n", "missing");
    doc.n = field_int(j["n"], "n");
    if (doc.n < 0) fail_field("n", "negative");

    if (!j.contains("rotations") || !j["rotations"].is_array())
        fail_field("rotations", "expected an array");
    if (static_cast<int>(j["rotations"].size()) != doc.n)
        fail_field("rotations", "expected exactly n entries");
    for (int v = 0; v < doc.n; ++v)
        doc.rotations.push_back(
            field_int_array(j["rotations"][v], "rotations[" + std::to_string(v) + "]"));

    auto check_vertex = [&](int v, const std::string& path) {
        if (v < 0 || v >= doc.n) fail_field(path, "vertex out of range");
    };

    if (j.contains("H_vertices")) {
        doc.h_vertices = field_int_array(j["H_vertices"], "H_vertices");
        std::vector<Vertex> sorted(doc.h_vertices);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail_field("H_vertices", "repeated vertex");
        for (std::size_t i = 0; i < doc.h_vertices.size(); ++i)
            check_vertex(doc.h_vertices[i], "H_vertices[" + std::to_string(i) + "]");
    }
    if (j.contains("H_edges")) {
        if (!j["H_edges"].is_array()) fail_field("H_edges", "expected an array");
        for (std::size_t i = 0; i < j["H_edges"].size(); ++i) {
            const std::string path = "H_edges[" + std::to_string(i) + "]";
            std::vector<int> pair = field_int_array(j["H_edges"][i], path);
            if (pair.size() != 2) fail_field(path, "expected two endpoints");
            check_vertex(pair[0], path);
            check_vertex(pair[1], path);
            for (int end : pair)
                if (std::find(doc.h_vertices.begin(), doc.h_vertices.end(), end) ==
                    doc.h_vertices.end())
                    fail_field(path, "endpoint " + std::to_string(end) + " not in H_vertices");
            doc.h_edges.emplace_back(pair[0], pair[1]);
        }
    }
    if (j.contains("lists")) {
        if (!j["lists"].is_array() || static_cast<int>(j["lists"].size()) != doc.n)
            fail_field("lists", "expected exactly n entries");
        std::vector<std::vector<Color>> lists;
        for (int v = 0; v < doc.n; ++v)
            lists.push_back(field_int_array(j["lists"][v], "lists[" + std::to_string(v) + "]"));
        doc.lists = std::move(lists);
    }
    if (j.contains("precoloring")) {
        if (!j["precoloring"].is_array()) fail_field("precoloring", "expected an array of pairs");
        std::vector<std::pair<Vertex, Color>> entries;
        for (std::size_t i = 0; i < j["precoloring"].size(); ++i) {
            const std::string path = "precoloring[" + std::to_string(i) + "]";
            std::vector<int> pair = field_int_array(j["precoloring"][i], path);
            if (pair.size() != 2) fail_field(path, "expected [vertex, color]");
            check_vertex(pair[0], path);
            for (const auto& [v, c] : entries)
                if (v == pair[0]) fail_field(path, "vertex colored twice");
            entries.emplace_back(pair[0], pair[1]);
        }
        doc.precoloring = std::move(entries);
    }
    return doc;
}

std::string serialize_embedding(const EmbeddingDocument& doc) {
    json j;
    j["version"] = doc.version;
    j["n"] = doc.n;
    j["rotations"] = doc.rotations;
    if (!doc.h_vertices.empty()) j["H_vertices"] = doc.h_vertices;
    if (!doc.h_edges.empty()) {
        json edges = json::array();
        for (const auto& [a, b] : doc.h_edges) edges.push_back(json::array({a, b}));
        j["H_edges"] = std::move(edges);
    }
    if (doc.lists) j["lists"] = *doc.lists;
    if (doc.precoloring) {
        json entries = json::array();
        for (const auto& [v, c] : *doc.precoloring) entries.push_back(json::array({v, c}));
        j["precoloring"] = std::move(entries);
    }
    return j.dump(2) + "\n";
}

EmbeddedGraph document_graph(const EmbeddingDocument& doc) {
    return EmbeddedGraph::build(doc.n, doc.rotations);
}

SubgraphMask document_mask(const EmbeddingDocument& doc, const EmbeddedGraph& g) {
    SubgraphMask mask = SubgraphMask::empty(g.vertex_count());
    for (Vertex v : doc.h_vertices) mask.add_vertex(v);
    for (const auto& [a, b] : doc.h_edges) {
        if (!mask.has_vertex(a) || !mask.has_vertex(b))
            fail_field("H_edges", "endpoint not in H_vertices");
        if (!g.adjacent(a, b))
            fail_field("H_edges", "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                      " not in the graph");
        mask.add_edge(a, b);
    }
    return mask;
}

ListAssignment document_lists(const EmbeddingDocument& doc) {
    if (!doc.lists) return ListAssignment::uniform(doc.n, 4);
    return ListAssignment(*doc.lists);
}

Precoloring document_precoloring(const EmbeddingDocument& doc) {
    Precoloring phi;
    if (doc.precoloring)
        for (const auto& [v, c] : *doc.precoloring) phi.set(v, c);
    return phi;
}

namespace {

int g6_symbol(const std::string& line, std::size_t pos) {
    if (pos >= line.size()) throw Error(Errc::Graph6Syntax, "truncated graph6 line");
    const unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Error(Errc::Graph6Syntax, "byte out of graph6 range");
    return c - 63;
}

EmbeddingDocument decode_graph6_line(const std::string& line,
                                     const std::optional<std::vector<std::vector<Vertex>>>& side) {
    std::size_t pos = 0;
    long long n = g6_symbol(line, pos++);
    if (n == 63) {
        if (pos < line.size() && g6_symbol(line, pos) == 63)
            throw Error(Errc::Graph6Syntax, "graph too large for this importer");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | g6_symbol(line, pos++);
    }
    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    std::vector<std::vector<Vertex>> adj(n);
    long long t = 0;
    for (long long b = 0; b < bytes; ++b) {
        int value = g6_symbol(line, pos++);
        for (int k = 5; k >= 0; --k, ++t) {
            const int bit = (value >> k) & 1;
            if (t >= bits) {
                if (bit) throw Error(Errc::Graph6Syntax, "nonzero padding bits");
                continue;
            }
            if (!bit) continue;
            // Column-major upper triangle: recover (i, j) from t.
            long long j = 1;
            long long acc = 0;
            while (acc + j <= t) acc += j++;
            long long i = t - acc;
            adj[i].push_back(static_cast<Vertex>(j));
            adj[j].push_back(static_cast<Vertex>(i));
        }
    }
    if (pos != line.size()) throw Error(Errc::Graph6Syntax, "trailing characters");

    EmbeddingDocument doc;
    doc.n = static_cast<int>(n);
    if (side) {
        if (static_cast<long long>(side->size()) != n)
            throw Error(Errc::RotationMismatch, "rotation file covers " +
                                                    std::to_string(side->size()) +
                                                    " vertices, graph has " + std::to_string(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> a(adj[v]), b((*side)[v]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw Error(Errc::RotationMismatch,
                            "rotation at vertex " + std::to_string(v) +
                                " does not match the graph's neighbors");
        }
        doc.rotations = *side;
    } else {
        doc.rotations = std::move(adj);
    }
    return doc;
}

}  // namespace

std::vector<EmbeddingDocument> import_graph6(const std::string& text,
                                             const std::optional<std::string>& rotations_text) {
    std::optional<std::vector<std::vector<Vertex>>> side;
    if (rotations_text) {
        json j;
        try {
            j = json::parse(*rotations_text);
        } catch (const json::parse_error& e) {
            throw Error(Errc::Syntax, e.what());
        }
        if (!j.is_array()) fail_field("rotations", "expected an array of arrays");
        std::vector<std::vector<Vertex>> parsed;
        for (std::size_t v = 0; v < j.size(); ++v)
            parsed.push_back(field_int_array(j[v], "rotations[" + std::to_string(v) + "]"));
        side = std::move(parsed);
    }

    std::vector<EmbeddingDocument> out;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(decode_graph6_line(line, side));
    }
    return out;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace {

struct LoadedInput {
    EmbeddingDocument doc;
    std::string digest;
};

LoadedInput load_input(const std::string& path, const std::optional<std::string>& rotations_path,
                       int index) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Syntax, "cannot open input file: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    LoadedInput in;
    in.digest = fnv1a_digest(text);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::optional<std::string> rot;
        if (rotations_path) {
            std::ifstream rf(*rotations_path, std::ios::binary);
            if (!rf) throw Error(Errc::Syntax, "cannot open rotation file: " + *rotations_path);
            rot = std::string((std::istreambuf_iterator<char>(rf)),
                              std::istreambuf_iterator<char>());
        }
        std::vector<EmbeddingDocument> docs = import_graph6(text, rot);
        if (index < 0 || index >= static_cast<int>(docs.size()))
            fail_field("--index", "no graph at index " + std::to_string(index));
        in.doc = std::move(docs[index]);
    } else {
        if (rotations_path)
            fail_field("--rotations", "rotation side files only apply to .g6 inputs");
        in.doc = parse_embedding(text);
    }
    return in;
}

json jrat(const Rat& r) { return rat_to_string(r); }
json jint(const Int& i) { return int_to_string(i); }

json jwitness(const ReducibilityWitness& w) {
    json j;
    if (w.residual) j["residual_lists"] = w.residual->lists();
    if (w.remainder_coloring) {
        json entries = json::array();
        for (const auto& [v, c] : w.remainder_coloring->entries())
            entries.push_back(json::array({v, c}));
        j["remainder_coloring"] = std::move(entries);
    }
    j["extension_count"] = jint(w.extension_count);
    return j;
}

json jverdict(const ReducibilityVerdict& v) {
    json j;
    j["reducible"] = v.reducible;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) j["witness"] = jwitness(*v.witness);
    return j;
}

json jstamen(const Stamen& s) { return s.path; }

json jtransfer(const Transfer& t) {
    json j;
    j["rule"] = t.rule;
    j["source"] = json{{"kind", t.source_is_face ? "face" : "vertex"}, {"index", t.source}};
    j["target"] = t.target;
    j["amount"] = jrat(t.amount);
    if (t.stamen) j["stamen"] = jstamen(*t.stamen);
    if (t.face) j["face"] = *t.face;
    if (t.walk_instance) j["walk_instance"] = *t.walk_instance;
    return j;
}

json jbound_eval(const BoundEvaluation& b) {
    return json{{"per_vertex_floor", jrat(b.minimum_used)},
                {"charge_bound", jrat(b.charge_bound)},
                {"genus", jrat(b.genus)},
                {"rounded_form", jrat(b.rounded_form)},
                {"charge_at_most_rounded", b.charge_at_most_rounded}};
}

// Commands that evaluate the 4-list hypothesis reject short lists up front.
ListAssignment four_lists_or_throw(const EmbeddingDocument& doc) {
    ListAssignment l = document_lists(doc);
    for (Vertex v = 0; v < l.size(); ++v)
        if (static_cast<int>(l.at(v).size()) < 4)
            throw Error(Errc::Validation, "lists[" + std::to_string(v) + "]: vertex " +
                                              std::to_string(v) + " has a " +
                                              std::to_string(l.at(v).size()) +
                                              "-list; this command requires 4-lists");
    return l;
}

void emit(std::ostream& out, const std::string& command, const std::string& digest, json result,
          bool pass) {
    json r;
    r["command"] = command;
    r["input"] = digest;
    r["result"] = std::move(result);
    r["status"] = pass ? "pass" : "fail";
    out << r.dump(2) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact list-coloring counts, reducible configurations, and discharging"};
    app.require_subcommand(1);

    std::string input_path;
    std::optional<std::string> rotations_path;
    int g6_index = 0;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "embedding document (.json) or graph6 (.g6) file")
            ->required();
        cmd->add_option("--rotations", rotations_path,
                        "rotation side file for .g6 inputs (JSON array of neighbor lists)");
        cmd->add_option("--index", g6_index, "graph index within a .g6 batch");
    };

    CLI::App* faces_cmd = app.add_subcommand("faces", "trace all faces of the embedding");
    add_input(faces_cmd);

    CLI::App* genus_cmd = app.add_subcommand("genus", "Euler characteristic and genus");
    add_input(genus_cmd);

    CLI::App* count_cmd = app.add_subcommand("count", "count list-coloring extensions exactly");
    add_input(count_cmd);
    std::string threshold_text;
    int jobs = 1;
    count_cmd->add_option("--threshold", threshold_text,
                          "stop once this many colorings are confirmed");
    count_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* reducible_cmd =
        app.add_subcommand("check-reducible", "decide reducibility of a vertex subset");
    add_input(reducible_cmd);
    std::vector<int> subset;
    bool abstract_mode = false;
    int k_lists = 4;
    reducible_cmd->add_option("--q", subset, "configuration vertices")
        ->required()
        ->delimiter(',');
    reducible_cmd->add_flag("--abstract", abstract_mode,
                            "residual-list check over all assignments (ignores document lists)");
    reducible_cmd->add_option("--k", k_lists, "list size for the abstract check");

    CLI::App* configs_cmd =
        app.add_subcommand("find-configs", "detect small 4-faces and poppies");
    add_input(configs_cmd);
    int stamen_cap = 4;
    configs_cmd->add_option("--stamen-cap", stamen_cap, "max vertices per stamen");

    CLI::App* discharge_cmd =
        app.add_subcommand("discharge", "run the charging rules and verify the claims");
    add_input(discharge_cmd);
    std::string gamma_text = "4/195";
    std::string mode_text = "default";
    int scan_max_size = 0;
    discharge_cmd->add_option("--gamma", gamma_text, "charge parameter, as p/q");
    discharge_cmd->add_option("--mode", mode_text, "rule-1 mode")
        ->check(CLI::IsMember({"default", "strict"}));
    discharge_cmd->add_option("--scan-max-size", scan_max_size,
                              "also scan for reducible configurations up to this size");

    CLI::App* bound_cmd =
        app.add_subcommand("verify-bound", "count extensions against the exponential bound");
    add_input(bound_cmd);
    std::string eps_text = "1/8";
    std::string alpha_text = "130";
    bound_cmd->add_option("--eps", eps_text, "exponent scale, as p/q");
    bound_cmd->add_option("--alpha", alpha_text, "genus/hypothesis penalty, as p/q");

    CLI::App* crit_cmd =
        app.add_subcommand("criticality", "decide exponential criticality exhaustively");
    add_input(crit_cmd);
    std::string crit_eps_text = "1/8";
    std::string crit_alpha_text = "130";
    std::string reading_text = "shared";
    crit_cmd->add_option("--eps", crit_eps_text, "exponent scale, as p/q");
    crit_cmd->add_option("--alpha", crit_alpha_text, "genus/hypothesis penalty, as p/q");
    crit_cmd->add_option("--reading", reading_text, "coloring quantifier reading")
        ->check(CLI::IsMember({"shared", "global"}));

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "reducibility verdicts for all small connected subsets");
    add_input(scan_cmd);
    int max_size = 3;
    scan_cmd->add_option("--max-size", max_size, "largest subset size");

    std::vector<const char*> argv;
    argv.push_back("florist");
    for (const std::string& a : args) argv.push_back(a.c_str());

    int exit_code = 0;
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        const LoadedInput in = load_input(input_path, rotations_path, g6_index);
        const EmbeddedGraph g = document_graph(in.doc);

        if (app.got_subcommand(faces_cmd)) {
            json walks = json::array();
            for (const FaceWalk& f : g.faces()) {
                json walk = json::array();
                for (const Dart& d : f.darts) walk.push_back(d.tail);
                walks.push_back(std::move(walk));
            }
            emit(out, "faces", in.digest,
                 json{{"n", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"face_count", g.face_count()},
                      {"faces", std::move(walks)},
                      {"euler_characteristic", g.euler_characteristic()}},
                 true);
        } else if (app.got_subcommand(genus_cmd)) {
            emit(out, "genus", in.digest,
                 json{{"n", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"face_count", g.face_count()},
                      {"euler_characteristic", g.euler_characteristic()},
                      {"euler_genus", g.euler_genus()},
                      {"orientable_genus", jrat(Rat(2 - g.euler_characteristic()) / 2)}},
                 true);
        } else if (app.got_subcommand(count_cmd)) {
            std::optional<Int> threshold;
            if (!threshold_text.empty()) threshold = int_from_string(threshold_text);
            CountResult r =
                count_extensions(g, document_lists(in.doc), document_precoloring(in.doc),
                                 threshold, jobs);
            emit(out, "count", in.digest,
                 json{{"count", jint(r.value)}, {"threshold_reached", r.threshold_reached}},
                 true);
        } else if (app.got_subcommand(reducible_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            ReducibilityVerdict verdict;
            if (abstract_mode) {
                Configuration c = configuration_from_subset(g, h, subset);
                verdict = check_reducible_abstract(c, k_lists);
            } else {
                verdict = check_reducible_concrete(g, h, subset, document_lists(in.doc));
            }
            emit(out, "check-reducible", in.digest, jverdict(verdict), verdict.reducible);
            exit_code = verdict.reducible ? 0 : 1;
        } else if (app.got_subcommand(configs_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            json faces4 = json::array();
            for (const FaceWalk& f : find_small_4faces(g, h)) {
                json walk = json::array();
                for (const Dart& d : f.darts) walk.push_back(d.tail);
                faces4.push_back(std::move(walk));
            }
            json poppies = json::array();
            for (const Poppy& p : find_poppies(g, h, stamen_cap)) {
                json stamens = json::array();
                for (const Stamen& s : p.stamens) stamens.push_back(jstamen(s));
                poppies.push_back(json{{"center", p.center}, {"stamens", std::move(stamens)}});
            }
            emit(out, "find-configs", in.digest,
                 json{{"small_4faces", std::move(faces4)}, {"poppies", std::move(poppies)}},
                 true);
        } else if (app.got_subcommand(discharge_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            DischargeParams params;
            params.gamma = rat_from_string(gamma_text);
            params.rule1_mode =
                mode_text == "strict" ? Rule1Mode::StrictDistance : Rule1Mode::PerStamen;
            const int chi = g.euler_characteristic();
            const int h_count = h.vertex_count();

            ChargeLedger initial = initial_charges(g, h, params);
            IdentityCheck identity = check_charge_identity(initial, chi, h_count, params);
            DischargeOutcome outcome = apply_rules(g, h, params);
            const bool conserved = initial.total() == outcome.final_ledger.total();
            ClaimReport claims = verify_claim_bounds(g, h, params, outcome.final_ledger);
            ThresholdReport thresholds = threshold_arithmetic(params);

            json result;
            result["gamma"] = jrat(params.gamma);
            result["mode"] = mode_text;
            result["identity"] = json{{"left", jrat(identity.left)},
                                      {"right", jrat(identity.right)},
                                      {"pass", identity.pass}};
            result["conserved"] = conserved;
            json transfers = json::array();
            for (const Transfer& t : outcome.log.transfers) transfers.push_back(jtransfer(t));
            result["transfers"] = std::move(transfers);
            json claim_summary;
            claim_summary["all_pass"] = claims.all_pass;
            if (claims.vertex_minimum)
                claim_summary["vertex_minimum"] = jrat(*claims.vertex_minimum);
            if (claims.face_minimum) claim_summary["face_minimum"] = jrat(*claims.face_minimum);
            json violations = json::array();
            for (std::size_t idx : claims.violations) {
                const ClaimCheck& c = claims.checks[idx];
                violations.push_back(json{{"kind", c.is_face ? "face" : "vertex"},
                                          {"index", c.index},
                                          {"class", c.class_name},
                                          {"threshold", jrat(c.threshold)},
                                          {"actual", jrat(c.actual)}});
            }
            claim_summary["violations"] = std::move(violations);
            result["claims"] = std::move(claim_summary);
            result["thresholds"] = json{{"minimum", jrat(thresholds.minimum)},
                                        {"attained_by", thresholds.attained_by},
                                        {"coefficient", jrat(thresholds.coefficient)},
                                        {"gamma_at_most_2_13", thresholds.gamma_at_most_2_13},
                                        {"gamma_at_most_1_15", thresholds.gamma_at_most_1_15}};
            try {
                result["bound"] = jbound_eval(vertex_bound_from_charges(h_count, chi, params));
                json comps = json::array();
                for (const ComponentBound& cb : per_component_bound(g, h, params))
                    comps.push_back(json{{"vertices", cb.vertices},
                                         {"euler_characteristic", cb.chi},
                                         {"h_count", cb.h_count},
                                         {"bound", jbound_eval(cb.bound)}});
                result["components"] = std::move(comps);
            } catch (const Error& e) {
                result["bound"] = json{{"error", e.what()}};
            }
            json overlaps = json::array();
            for (const Rule1Overlap& o : rule1_disjointness_violations(outcome.log))
                overlaps.push_back(json{{"source", o.source},
                                        {"first", jstamen(o.first)},
                                        {"second", jstamen(o.second)}});
            result["rule1_overlaps"] = std::move(overlaps);
            if (scan_max_size > 0) {
                json reducible_subsets = json::array();
                std::size_t entries = 0;
                for (const ScanEntry& e : scan_reducible_up_to_size(g, h, scan_max_size)) {
                    ++entries;
                    if (e.verdict.reducible) reducible_subsets.push_back(e.subset);
                }
                result["scan"] = json{{"subsets_examined", entries},
                                      {"reducible_subsets", reducible_subsets},
                                      {"hypothesis_ok", reducible_subsets.empty()}};
            }
            const bool pass = identity.pass && conserved && claims.all_pass;
            emit(out, "discharge", in.digest, std::move(result), pass);
            exit_code = pass ? 0 : 1;
        } else if (app.got_subcommand(bound_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            CriticalityParams params;
            params.eps = rat_from_string(eps_text);
            params.alpha = rat_from_string(alpha_text);
            BoundReport r = main_bound_check(g, h, four_lists_or_throw(in.doc),
                                             document_precoloring(in.doc), params);
            emit(out, "verify-bound", in.digest,
                 json{{"n", r.n},
                      {"euler_characteristic", r.chi},
                      {"genus", jrat(r.genus)},
                      {"h_count", r.h_count},
                      {"exponent", jrat(r.exponent)},
                      {"count", jint(r.count)},
                      {"paper_constants", r.paper_constants},
                      {"pass", r.pass}},
                 r.pass);
            exit_code = r.pass ? 0 : 1;
        } else if (app.got_subcommand(crit_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            CriticalityParams params;
            params.eps = rat_from_string(crit_eps_text);
            params.alpha = rat_from_string(crit_alpha_text);
            const PhiReading reading = reading_text == "global" ? PhiReading::GlobalNonexistence
                                                                : PhiReading::Shared;
            const bool critical =
                criticality_check(g, h, document_lists(in.doc), params, reading);
            emit(out, "criticality", in.digest,
                 json{{"critical", critical},
                      {"eps", jrat(params.eps)},
                      {"alpha", jrat(params.alpha)},
                      {"paper_regime", params.paper_regime()},
                      {"reading", reading_text}},
                 critical);
            exit_code = critical ? 0 : 1;
        } else if (app.got_subcommand(scan_cmd)) {
            const SubgraphMask h = document_mask(in.doc, g);
            json entries = json::array();
            std::size_t reducible_count = 0;
            for (const ScanEntry& e : scan_reducible_up_to_size(g, h, max_size)) {
                json entry;
                entry["subset"] = e.subset;
                entry["reducible"] = e.verdict.reducible;
                if (!e.verdict.note.empty()) entry["note"] = e.verdict.note;
                entries.push_back(std::move(entry));
                if (e.verdict.reducible) ++reducible_count;
            }
            emit(out, "scan", in.digest,
                 json{{"entries", std::move(entries)}, {"reducible_count", reducible_count}},
                 true);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == Errc::SizeCapExceeded ? 3 : 2;
    }
    return exit_code;
}

}  // namespace florist
