#pragma once

#include <json.hpp>

#include "slq/audit.hpp"
#include "slq/containment.hpp"
#include "slq/report.hpp"
#include "slq/search.hpp"
#include "slq/spectra.hpp"

namespace slq {

using ordered_json = nlohmann::ordered_json;

// All doubles pass through round12 so serialized output carries exactly the
// documented 12 significant digits and is byte-stable across runs.

inline ordered_json tree_json(const CanonicalTree& t) { return ordered_json(t.levels); }

inline ordered_json missing_report_json(const MissingReport& m) {
    ordered_json j;
    j["t"] = m.t;
    j["all_present"] = m.all_present;
    if (m.first_missing) {
        j["first_missing"] = tree_json(*m.first_missing);
        j["first_missing_text"] = level_sequence_string(*m.first_missing);
    } else {
        j["first_missing"] = nullptr;
    }
    j["checked"] = m.checked;
    return j;
}

inline ordered_json audit_entry_json(const AuditEntry& e) {
    ordered_json j;
    j["id"] = e.id;
    j["hypothesis_met"] = e.hypothesis_met;
    j["holds"] = e.holds;
    j["slack"] = round12(e.slack);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

inline ordered_json audit_report_json(const AuditReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["k"] = r.k;
    j["prime"] = r.prime;
    j["alpha"] = round12(r.alpha);
    j["beta"] = round12(r.beta);
    j["q"] = round12(r.q);
    j["residual"] = round12(r.residual);
    j["tol"] = round12(r.tol);
    j["iterations"] = r.iterations;
    j["L_size"] = r.L_size;
    j["S_size"] = r.S_size;
    j["Lprime_size"] = r.Lprime_size;
    j["Sprime_size"] = r.Sprime_size;
    j["boundary_vertices"] = r.boundary_vertices;
    j["entries"] = ordered_json::array();
    for (const auto& e : r.entries) j["entries"].push_back(audit_entry_json(e));
    j["hard_failure"] = r.hard_failure();
    return j;
}

inline ordered_json bound_report_json(long long n, long long k, const BoundReport& b) {
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["lower"] = round12(b.lower);
    j["q_S"] = round12(b.q_S);
    j["q_S_plus"] = round12(b.q_S_plus);
    j["upper"] = round12(b.upper);
    j["chain_holds"] = b.chain_holds;
    return j;
}

inline ordered_json search_report_json(const SearchReport& r) {
    ordered_json j;
    j["mode"] = r.mode;
    j["n"] = r.n;
    j["k"] = r.k;
    j["prime"] = r.prime;
    j["best_graph"] = r.best_graph;
    j["best_q"] = round12(r.best_q);
    j["q_of_S"] = round12(r.q_of_S);
    j["candidates_examined"] = r.candidates_examined;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    j["missing_tree_witness"] = tree_json(r.missing_tree_witness);
    j["missing_tree_witness_text"] = level_sequence_string(r.missing_tree_witness);
    if (r.mode == "exhaustive") j["labeled_graphs_scanned"] = r.labeled_graphs_scanned;
    if (r.mode == "family") {
        j["family_candidates"] = ordered_json::array();
        for (const auto& c : r.family_candidates) {
            ordered_json cj;
            cj["pattern"] = c.pattern;
            cj["pattern_edges"] = c.pattern_edges;
            cj["member"] = c.member;
            cj["q"] = c.member ? ordered_json(round12(c.q)) : ordered_json(nullptr);
            j["family_candidates"].push_back(cj);
        }
    }
    if (r.mode == "hillclimb") {
        j["restart_inits"] = r.restart_inits;
        j["matches_construction"] =
            r.matches_construction ? ordered_json(*r.matches_construction) : ordered_json(nullptr);
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace slq
