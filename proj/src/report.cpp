#include "frobsing/report.hpp"

#include <sstream>

namespace frobsing {

std::string verdict_token(const Verdict& v) {
    std::string base = verdict_kind_name(v.kind);
    switch (v.kind) {
        case VerdictKind::Refuted:
        case VerdictKind::HoldsUpToLevel:
        case VerdictKind::CertifiedPositive:
            return base + "(" + std::to_string(v.level) + ")";
        case VerdictKind::Inconclusive:
            return base;
    }
    return base;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["level"] = v.level;
    j["reason"] = v.reason;
    if (v.witness.has_value()) j["witness"] = v.witness->str();
    j["budget_truncated"] = v.budget_truncated;
    Json rows = Json::array();
    for (const LevelOutcome& row : v.transcript) {
        Json r;
        r["e"] = row.e;
        r["q"] = row.q;
        r["r"] = row.r;
        r["pass"] = row.pass;
        rows.push_back(std::move(r));
    }
    j["transcript"] = std::move(rows);
    if (!v.tau.empty()) {
        Json taus = Json::array();
        for (const TauIdeal& t : v.tau) {
            Json entry;
            entry["e"] = t.e;
            Json gens = Json::array();
            for (const Polynomial& g : t.ideal.generators()) gens.push_back(g.str());
            entry["generators"] = std::move(gens);
            taus.push_back(std::move(entry));
        }
        j["tau"] = std::move(taus);
    }
    return j;
}

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream os;
    os << "verdict: " << verdict_token(v) << "\n";
    os << "  " << v.reason << "\n";
    if (v.witness.has_value()) os << "  witness: " << v.witness->str() << "\n";
    for (const LevelOutcome& row : v.transcript) {
        os << "  e=" << row.e << " q=" << row.q << " r=" << row.r << " "
           << (row.pass ? "pass" : "FAIL") << "\n";
    }
    for (const TauIdeal& t : v.tau) {
        os << "  tau[e=" << t.e << "]: " << t.ideal.generator_count() << " generators\n";
    }
    if (v.budget_truncated) os << "  (truncated by budget)\n";
    return os.str();
}

int verdict_exit_code(const Verdict& v) {
    if (v.budget_truncated) return 3;
    switch (v.kind) {
        case VerdictKind::HoldsUpToLevel:
        case VerdictKind::CertifiedPositive:
            return 0;
        case VerdictKind::Refuted:
        case VerdictKind::Inconclusive:
            return 1;
    }
    return 1;
}

namespace {

Json prediction_to_json(const JacobianPrediction& p) {
    Json j;
    j["multiplicity"] = p.multiplicity;
    j["lower"] = p.lower.str();
    j["upper"] = p.upper.str();
    j["applicable"] = p.applicable;
    Json powers = Json::array();
    for (const auto& m : p.containment_powers) {
        if (m.has_value()) {
            powers.push_back(*m);
        } else {
            powers.push_back(nullptr);
        }
    }
    j["containment_powers"] = std::move(powers);
    j["hypothesis_ok"] = p.hypothesis_ok;
    j["cap"] = p.cap;
    if (p.mu.has_value()) j["mu"] = p.mu->str();
    if (p.predicts_strongly_fpure.has_value()) {
        j["predicts_strongly_fpure"] = *p.predicts_strongly_fpure;
    }
    return j;
}

}  // namespace

Json threshold_to_json(const ThresholdReport& r) {
    Json j;
    Json nu = Json::array();
    for (const NuEntry& n : r.nu) {
        Json e;
        e["e"] = n.e;
        e["q"] = n.q;
        e["j"] = n.j;
        nu.push_back(std::move(e));
    }
    j["nu"] = std::move(nu);
    j["upper"] = r.upper.str();
    j["watermark"] = r.watermark.str();
    j["estimate"] = r.estimate.str();
    j["estimate_note"] = "heuristic value j_E/(q_E-1); no convergence is claimed";
    if (r.prediction.has_value()) j["prediction"] = prediction_to_json(*r.prediction);
    return j;
}

std::string threshold_to_text(const ThresholdReport& r) {
    std::ostringstream os;
    for (const NuEntry& n : r.nu) {
        os << "  e=" << n.e << " q=" << n.q << " j=" << n.j << "\n";
    }
    os << "  certified upper bound: " << r.upper.pretty() << "\n";
    os << "  watermark (passes all computed levels): " << r.watermark.pretty() << "\n";
    os << "  estimate (heuristic): " << r.estimate.pretty() << "\n";
    if (r.prediction.has_value()) {
        const JacobianPrediction& p = *r.prediction;
        os << "  multiplicity n=" << p.multiplicity << ", bounds [" << p.lower.pretty()
           << ", " << p.upper.pretty() << "]\n";
        if (p.hypothesis_ok) {
            os << "  containment powers:";
            for (const auto& m : p.containment_powers) os << " " << *m;
            os << "\n";
            if (p.mu.has_value()) {
                os << "  mu = " << p.mu->pretty() << " => predicts strongly F-pure: "
                   << (*p.predicts_strongly_fpure ? "yes (p >= mu)" : "no (p < mu)") << "\n";
            }
        } else {
            os << "  smooth-initial-form hypothesis fails (missing containment power)\n";
        }
    }
    return os.str();
}

Json graph_to_json(const DualGraph& g, const DiscrepancyVector& dv, GraphType type,
                   const std::optional<FClass>& predicted) {
    Json j;
    Json graph;
    Json verts = Json::array();
    for (std::int64_t b : g.b) {
        Json v;
        v["b"] = b;
        verts.push_back(std::move(v));
    }
    graph["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    graph["edges"] = std::move(edges);
    graph["boundary"] = g.boundary;
    j["graph"] = std::move(graph);
    Json a = Json::array();
    for (const Rational& x : dv.a) a.push_back(x.str());
    j["discrepancies"] = std::move(a);
    j["lc_class"] = lc_class_name(dv.lc_class);
    j["graph_type"] = graph_type_name(type);
    if (predicted.has_value()) j["predicted_f_class"] = fclass_name(*predicted);
    return j;
}

std::string graph_to_text(const DualGraph& g, const DiscrepancyVector& dv, GraphType type,
                          const std::optional<FClass>& predicted) {
    std::ostringstream os;
    os << "  vertices: " << g.size() << ", edges: " << g.edges.size() << "\n";
    os << "  discrepancies:";
    for (const Rational& x : dv.a) os << " " << x.pretty();
    os << "\n";
    os << "  class: " << lc_class_name(dv.lc_class) << ", type: " << graph_type_name(type);
    if (predicted.has_value()) os << ", predicted: " << fclass_name(*predicted);
    os << "\n";
    return os.str();
}

Json toric_to_json(const ToricCheck& c) {
    Json j;
    j["ok"] = c.ok;
    j["canonical_count"] = c.canonical_count;
    j["target_count"] = c.target_count;
    j["strict_witnesses"] = c.strict_witnesses;
    j["scaling_injective"] = c.scaling_injective;
    return j;
}

std::string toric_to_text(const ToricCheck& c) {
    std::ostringstream os;
    os << "  result: " << (c.ok ? "ok" : "FAILED") << "\n";
    os << "  canonical window: " << c.canonical_count
       << " points, target window: " << c.target_count << "\n";
    if (c.strict_witnesses > 0) {
        os << "  strict containment witnesses: " << c.strict_witnesses << "\n";
    }
    return os.str();
}

Json implication_to_json(const ImplicationReport& r) {
    Json j;
    Json rows = Json::array();
    for (const ImplicationRow& row : r.rows) {
        Json x;
        x["e"] = row.e;
        x["q"] = row.q;
        x["r_weak"] = row.r_weak;
        x["r_strong"] = row.r_strong;
        x["pass_weak"] = row.pass_weak;
        x["pass_strong"] = row.pass_strong;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["violations"] = r.violations;
    return j;
}

Json envelope(const std::string& command, Json params, Json payload,
              std::int64_t timing_ms) {
    Json j;
    j["schema"] = kSchemaTag;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(payload);
    j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace frobsing
