#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "florist/configurations.hpp"
#include "florist/embedded_graph.hpp"
#include "florist/rational.hpp"

namespace florist {

// Rule 1 rewards a major vertex's stamens that run along a 4-face.  The
// distance-two wording can be read as implied by that incidence (it is, in
// triangle-free hosts) or as an extra side condition; both are available.
enum class Rule1Mode { PerStamen, StrictDistance };

struct DischargeParams {
    Rat gamma = Rat(4, 195);
    Rule1Mode rule1_mode = Rule1Mode::PerStamen;
    int max_stamen_vertices = 4;
};

enum class ChargePhase { Initial, Final };

struct ChargeLedger {
    std::vector<Rat> vertex;
    std::vector<Rat> face;
    ChargePhase phase = ChargePhase::Initial;

    Rat total() const;
};

// major = 5+-vertex or a hypothesis vertex.
struct VertexClassification {
    int degree = 0;
    bool in_h = false;
    bool major = false;
};

struct MajorityClassification {
    std::vector<VertexClassification> vertex;
};

MajorityClassification classify_vertices(const EmbeddedGraph& g, const SubgraphMask& h);

struct Transfer {
    int rule = 0;                      // 1..4
    bool source_is_face = false;       // rules 3/4
    int source = -1;                   // vertex id, or face index for rules 3/4
    Vertex target = -1;
    Rat amount;
    std::optional<Stamen> stamen;      // rule 1
    std::optional<int> face;           // rule 1 evidence face / rule 2..4 face index
    std::optional<int> walk_instance;  // rules 3/4: dart position in the face walk
};

struct TransferLog {
    std::vector<Transfer> transfers;
};

// ch(v) = d(v) - 4 off the hypothesis graph, d(v) + 3g - 1 on it;
// ch(f) = |f| - 4.
ChargeLedger initial_charges(const EmbeddedGraph& g, const SubgraphMask& h,
                             const DischargeParams& p);

struct IdentityCheck {
    Rat left;   // ledger total
    Rat right;  // (3 + 3g)|V(H)| - 4 * chi
    bool pass = false;
};

IdentityCheck check_charge_identity(const ChargeLedger& ledger, int chi, int h_count,
                                    const DischargeParams& p);

struct DischargeOutcome {
    ChargeLedger final_ledger;
    TransferLog log;
};

// Rule 1: major v sends 1/3 + g along each v-stamen that shares a 4-face.
// Rule 2: major v sends 3g/4 to each 4-vertex sharing a 4-face, per face.
// Rules 3/4: each 5+-face sends 1/3 + g per boundary-walk instance of a
// 3-vertex and 3g/4 per instance of a 4-vertex.  Hypothesis vertices send
// but never receive.
DischargeOutcome apply_rules(const EmbeddedGraph& g, const SubgraphMask& h,
                             const DischargeParams& p);

struct ClaimCheck {
    bool is_face = false;
    int index = -1;
    std::string class_name;
    Rat threshold;
    Rat actual;
    bool pass = false;
};

struct ClaimReport {
    std::vector<ClaimCheck> checks;
    std::optional<Rat> vertex_minimum;
    std::optional<Rat> face_minimum;
    bool all_pass = false;
    bool gamma_at_most_2_13 = false;  // needed by the 5+-vertex and hypothesis claims
    bool gamma_at_most_1_15 = false;  // needed by the face claim
    std::vector<std::size_t> violations;  // indices into checks
};

// Final-charge floors by class: 3g for degree <= 4; 1/3 - 53g/4 (degree 5);
// 2/3 - 35g/2 (degree 6); 2/3 - 91g/4 (degree 7+); min{3g, 1/3 - 7g/2} on
// the hypothesis graph; 0 for faces.
ClaimReport verify_claim_bounds(const EmbeddedGraph& g, const SubgraphMask& h,
                                const DischargeParams& p, const ChargeLedger& final_ledger);

struct ThresholdReport {
    Rat degree_at_most_4;    // 3g
    Rat degree_5;            // 1/3 - 53g/4
    Rat degree_6;            // 2/3 - 35g/2
    Rat degree_7_plus;       // 2/3 - 91g/4
    Rat hypothesis_second;   // 1/3 - 7g/2 (hypothesis floor is min of this and 3g)
    Rat minimum;
    std::vector<std::string> attained_by;
    Rat coefficient;         // 3 + 3g
    bool gamma_at_most_2_13 = false;
    bool gamma_at_most_1_15 = false;
};

ThresholdReport threshold_arithmetic(const DischargeParams& p);

struct BoundEvaluation {
    Rat minimum_used;       // per-vertex floor m from threshold_arithmetic
    Rat charge_bound;       // ((3 + 3g)h - 4 chi) / m
    Rat genus;              // (2 - chi) / 2, kept exact
    Rat rounded_form;       // 50(h - 13/5) + 130 genus
    bool charge_at_most_rounded = false;
};

// Bounds |V(G)| by total charge over the per-vertex floor, and compares
// against the rounded closed form.  Requires a positive floor.
BoundEvaluation vertex_bound_from_charges(int h_count, int chi, const DischargeParams& p);

struct Rule1Overlap {
    Vertex source = -1;
    Stamen first, second;
};

// Pairs of same-source Rule-1 stamens that share an internal vertex.  Empty
// on hosts free of small reducible configurations.
std::vector<Rule1Overlap> rule1_disjointness_violations(const TransferLog& log);

}  // namespace florist
