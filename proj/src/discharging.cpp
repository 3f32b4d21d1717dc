#include "florist/discharging.hpp"

#include <algorithm>
#include <set>

namespace florist {

Rat ChargeLedger::total() const {
    Rat t = 0;
    for (const Rat& x : vertex) t += x;
    for (const Rat& x : face) t += x;
    return t;
}

MajorityClassification classify_vertices(const EmbeddedGraph& g, const SubgraphMask& h) {
    MajorityClassification mc;
    mc.vertex.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexClassification& c = mc.vertex[v];
        c.degree = g.degree(v);
        c.in_h = h.has_vertex(v);
        c.major = c.in_h || c.degree >= 5;
    }
    return mc;
}

ChargeLedger initial_charges(const EmbeddedGraph& g, const SubgraphMask& h,
                             const DischargeParams& p) {
    ChargeLedger ledger;
    ledger.phase = ChargePhase::Initial;
    ledger.vertex.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ledger.vertex[v] = h.has_vertex(v) ? Rat(g.degree(v)) + 3 * p.gamma - 1
                                           : Rat(g.degree(v) - 4);
    const auto& faces = g.faces();
    ledger.face.resize(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) ledger.face[i] = Rat(faces[i].length() - 4);
    return ledger;
}

IdentityCheck check_charge_identity(const ChargeLedger& ledger, int chi, int h_count,
                                    const DischargeParams& p) {
    IdentityCheck r;
    r.left = ledger.total();
    r.right = (3 + 3 * p.gamma) * h_count - 4 * Rat(chi);
    r.pass = (r.left == r.right);
    return r;
}

namespace {

std::vector<Vertex> walk_vertex_set(const FaceWalk& f) {
    std::vector<Vertex> vs = f.vertices();
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool face_contains_path(const FaceWalk& f, const std::vector<Vertex>& path) {
    for (Vertex v : path)
        if (!f.contains_vertex(v)) return false;
    return true;
}

}  // namespace

DischargeOutcome apply_rules(const EmbeddedGraph& g, const SubgraphMask& h,
                             const DischargeParams& p) {
    const MajorityClassification mc = classify_vertices(g, h);
    const auto& faces = g.faces();
    const Rat rule1_amount = Rat(1, 3) + p.gamma;
    const Rat rule24_amount = 3 * p.gamma / 4;

    DischargeOutcome out;
    out.final_ledger = initial_charges(g, h, p);
    out.final_ledger.phase = ChargePhase::Final;

    auto record = [&](Transfer t) {
        if (t.source_is_face)
            out.final_ledger.face[t.source] -= t.amount;
        else
            out.final_ledger.vertex[t.source] -= t.amount;
        out.final_ledger.vertex[t.target] += t.amount;
        out.log.transfers.push_back(std::move(t));
    };

    // Rules 1 and 2, per major vertex.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!mc.vertex[v].major) continue;

        std::vector<int> distance;
        if (p.rule1_mode == Rule1Mode::StrictDistance) distance = bfs_distances(g, v);

        for (const Stamen& s : find_stamens(g, h, v, p.max_stamen_vertices)) {
            std::optional<int> evidence;
            for (std::size_t fi = 0; fi < faces.size(); ++fi)
                if (faces[fi].length() == 4 && face_contains_path(faces[fi], s.path)) {
                    evidence = static_cast<int>(fi);
                    break;
                }
            if (!evidence) continue;
            if (p.rule1_mode == Rule1Mode::StrictDistance &&
                (distance[s.tip()] < 0 || distance[s.tip()] > 2))
                continue;
            Transfer t;
            t.rule = 1;
            t.source = v;
            t.target = s.tip();
            t.amount = rule1_amount;
            t.stamen = s;
            t.face = evidence;
            record(std::move(t));
        }

        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            if (faces[fi].length() != 4 || !faces[fi].contains_vertex(v)) continue;
            for (Vertex u : walk_vertex_set(faces[fi])) {
                if (u == v || h.has_vertex(u) || g.degree(u) != 4) continue;
                if (p.rule1_mode == Rule1Mode::StrictDistance &&
                    (distance[u] < 0 || distance[u] > 2))
                    continue;
                Transfer t;
                t.rule = 2;
                t.source = v;
                t.target = u;
                t.amount = rule24_amount;
                t.face = static_cast<int>(fi);
                record(std::move(t));
            }
        }
    }

    // Rules 3 and 4, per boundary-walk instance on big faces.
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        if (faces[fi].length() < 5) continue;
        const auto& darts = faces[fi].darts;
        for (std::size_t k = 0; k < darts.size(); ++k) {
            Vertex u = darts[k].tail;
            if (h.has_vertex(u)) continue;
            const int d = g.degree(u);
            if (d != 3 && d != 4) continue;
            Transfer t;
            t.rule = (d == 3) ? 3 : 4;
            t.source_is_face = true;
            t.source = static_cast<int>(fi);
            t.target = u;
            t.amount = (d == 3) ? rule1_amount : rule24_amount;
            t.face = static_cast<int>(fi);
            t.walk_instance = static_cast<int>(k);
            record(std::move(t));
        }
    }

    return out;
}

namespace {

struct VertexClaim {
    std::string name;
    Rat threshold;
};

VertexClaim vertex_claim(int degree, bool in_h, const Rat& gamma) {
    if (in_h) return {"hypothesis-vertex", std::min(Rat(3 * gamma), Rat(Rat(1, 3) - 7 * gamma / 2))};
    if (degree <= 4) return {std::to_string(degree) + "-vertex", 3 * gamma};
    if (degree == 5) return {"5-vertex", Rat(1, 3) - 53 * gamma / 4};
    if (degree == 6) return {"6-vertex", Rat(2, 3) - 35 * gamma / 2};
    return {"7+-vertex", Rat(2, 3) - 91 * gamma / 4};
}

}  // namespace

ClaimReport verify_claim_bounds(const EmbeddedGraph& g, const SubgraphMask& h,
                                const DischargeParams& p, const ChargeLedger& final_ledger) {
    ClaimReport report;
    report.gamma_at_most_2_13 = p.gamma <= Rat(2, 13);
    report.gamma_at_most_1_15 = p.gamma <= Rat(1, 15);
    report.all_pass = true;

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexClaim claim = vertex_claim(g.degree(v), h.has_vertex(v), p.gamma);
        ClaimCheck c;
        c.index = v;
        c.class_name = std::move(claim.name);
        c.threshold = std::move(claim.threshold);
        c.actual = final_ledger.vertex[v];
        c.pass = c.actual >= c.threshold;
        if (!report.vertex_minimum || c.actual < *report.vertex_minimum)
            report.vertex_minimum = c.actual;
        report.checks.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < final_ledger.face.size(); ++i) {
        ClaimCheck c;
        c.is_face = true;
        c.index = static_cast<int>(i);
        c.class_name = "face";
        c.threshold = 0;
        c.actual = final_ledger.face[i];
        c.pass = c.actual >= 0;
        if (!report.face_minimum || c.actual < *report.face_minimum)
            report.face_minimum = c.actual;
        report.checks.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < report.checks.size(); ++i)
        if (!report.checks[i].pass) {
            report.all_pass = false;
            report.violations.push_back(i);
        }
    return report;
}

ThresholdReport threshold_arithmetic(const DischargeParams& p) {
    ThresholdReport r;
    r.degree_at_most_4 = 3 * p.gamma;
    r.degree_5 = Rat(1, 3) - 53 * p.gamma / 4;
    r.degree_6 = Rat(2, 3) - 35 * p.gamma / 2;
    r.degree_7_plus = Rat(2, 3) - 91 * p.gamma / 4;
    r.hypothesis_second = Rat(1, 3) - 7 * p.gamma / 2;

    const std::pair<const char*, const Rat*> named[] = {
        {"3g", &r.degree_at_most_4},
        {"2/3-91g/4", &r.degree_7_plus},
        {"1/3-53g/4", &r.degree_5},
        {"2/3-35g/2", &r.degree_6},
        {"1/3-7g/2", &r.hypothesis_second},
    };
    r.minimum = *named[0].second;
    for (const auto& [name, value] : named)
        if (*value < r.minimum) r.minimum = *value;
    for (const auto& [name, value] : named)
        if (*value == r.minimum) r.attained_by.push_back(name);

    r.coefficient = 3 + 3 * p.gamma;
    r.gamma_at_most_2_13 = p.gamma <= Rat(2, 13);
    r.gamma_at_most_1_15 = p.gamma <= Rat(1, 15);
    return r;
}

BoundEvaluation vertex_bound_from_charges(int h_count, int chi, const DischargeParams& p) {
    if (h_count < 0) throw Error(Errc::Validation, "negative hypothesis size");
    ThresholdReport t = threshold_arithmetic(p);
    if (t.minimum <= 0)
        throw Error(Errc::Validation, "per-vertex floor is not positive for this gamma");
    BoundEvaluation b;
    b.minimum_used = t.minimum;
    b.charge_bound = (t.coefficient * h_count - 4 * Rat(chi)) / t.minimum;
    b.genus = Rat(2 - chi) / 2;
    b.rounded_form = 50 * (Rat(h_count) - Rat(13, 5)) + 130 * b.genus;
    b.charge_at_most_rounded = b.charge_bound <= b.rounded_form;
    return b;
}

std::vector<Rule1Overlap> rule1_disjointness_violations(const TransferLog& log) {
    std::vector<Rule1Overlap> out;
    std::vector<const Transfer*> rule1;
    for (const Transfer& t : log.transfers)
        if (t.rule == 1 && t.stamen) rule1.push_back(&t);
    for (std::size_t i = 0; i < rule1.size(); ++i) {
        for (std::size_t j = i + 1; j < rule1.size(); ++j) {
            if (rule1[i]->source != rule1[j]->source) continue;
            std::vector<Vertex> a = rule1[i]->stamen->internals();
            std::vector<Vertex> b = rule1[j]->stamen->internals();
            bool overlap = false;
            for (Vertex x : a)
                for (Vertex y : b)
                    if (x == y) overlap = true;
            if (overlap)
                out.push_back(Rule1Overlap{static_cast<Vertex>(rule1[i]->source),
                                           *rule1[i]->stamen, *rule1[j]->stamen});
        }
    }
    return out;
}

}  // namespace florist
