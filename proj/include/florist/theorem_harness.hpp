#pragma once

#include <vector>

#include "florist/discharging.hpp"
#include "florist/embedded_graph.hpp"
#include "florist/list_coloring.hpp"
#include "florist/rational.hpp"

namespace florist {

struct CriticalityParams {
    Rat eps = Rat(1, 8);
    Rat alpha = 130;

    bool paper_regime() const { return eps >= 0 && eps <= Rat(1, 8); }
    bool paper_constants() const { return eps == Rat(1, 8) && alpha == 130; }
};

struct HarnessCaps {
    int max_counting_vertices = 12;
    int max_criticality_vertices = 7;
};

struct BoundReport {
    int n = 0;
    int chi = 0;
    Rat genus;     // (2 - chi) / 2, kept exact
    int h_count = 0;
    Rat exponent;  // eps * (n - alpha * (genus + h_count))
    Int count;
    bool pass = false;            // count >= 2^exponent, decided in integers
    bool paper_constants = false;
};

// Counts extensions of phi exactly and compares against 2^exponent without
// real arithmetic (count^den vs 2^num).  Custom eps/alpha act as a rescaled
// diagnostic; the report records whether the canonical constants were used.
BoundReport main_bound_check(const EmbeddedGraph& g, const SubgraphMask& h,
                             const ListAssignment& l, const Precoloring& phi,
                             const CriticalityParams& params);

struct DoublingReport {
    bool precondition_ok = false;  // the subset re-verified as reducible
    bool holds = false;            // count(g, phi) >= 2 count(g - Q, phi) for every phi
};

DoublingReport doubling_check(const EmbeddedGraph& g, const SubgraphMask& h,
                              const ListAssignment& l, const std::vector<Vertex>& q,
                              const HarnessCaps& caps = {});

// The definition pairs each proper subgraph with a coloring of H that meets
// the subgraph's threshold; the non-existence clause for the whole graph can
// read as using that same coloring or as a separate global statement.
enum class PhiReading { Shared, GlobalNonexistence };

// Decides exponential criticality exhaustively: proper subgraphs are the
// single-vertex deletions off H and single-edge deletions off H, colorings
// of H run over its lists.
bool criticality_check(const EmbeddedGraph& g, const SubgraphMask& h, const ListAssignment& l,
                       const CriticalityParams& params, PhiReading reading = PhiReading::Shared,
                       const HarnessCaps& caps = {});

struct ComponentBound {
    std::vector<Vertex> vertices;  // original ids, ascending
    int chi = 0;
    int h_count = 0;
    BoundEvaluation bound;
};

// Splits the host into connected components and evaluates the charge-derived
// vertex bound on each, with the hypothesis graph restricted accordingly.
std::vector<ComponentBound> per_component_bound(const EmbeddedGraph& g, const SubgraphMask& h,
                                                const DischargeParams& p);

}  // namespace florist
