#include "hbtrace/report.hpp"

namespace hbtrace {

Json to_json(const Monomial& u, const Ring& ring) { return to_string(u, ring); }

Json to_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    Json exps = Json::array();
    for (const auto& g : I.generators()) {
        gens.push_back(to_string(g, I.ring()));
        exps.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
    }
    return {{"ring", I.ring().names()}, {"generators", gens}, {"exponents", exps}, {"text", to_string(I)}};
}

Json variables_json(const std::vector<std::size_t>& vars, const Ring& ring) {
    Json out = Json::array();
    for (auto v : vars) out.push_back(ring.names().at(v));
    return out;
}

Json to_json(const SignedMonomialMatrix& X) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& d : X.row_degrees()) rows.push_back(to_string(d, X.ring()));
    for (const auto& d : X.col_degrees()) cols.push_back(to_string(d, X.ring()));
    for (std::size_t r = 0; r < X.rows(); ++r)
        for (std::size_t c = 0; c < X.cols(); ++c) {
            const auto& e = X.at(r, c);
            if (e.is_zero()) continue;
            entries.push_back({{"row", r}, {"col", c}, {"coeff", e.coefficient},
                               {"monomial", to_string(e.monomial, X.ring())}});
        }
    return {{"rows", X.rows()}, {"cols", X.cols()}, {"row_degrees", rows}, {"col_degrees", cols},
            {"entries", entries}};
}

Json to_json(const BettiTable& table, const Ring& ring) {
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries())
        entries.push_back({{"index", key.first + 1}, {"degree", to_string(key.second, ring)}, {"value", value}});
    Json totals = Json::array();
    for (int i = 0; i <= table.top_ideal_index() + 1; ++i) totals.push_back(table.quotient_total(i));
    return {{"indexing", "quotient"}, {"totals", totals}, {"entries", entries}};
}

Json to_json(const SimpleGraph& G) {
    Json edges = Json::array();
    for (const auto& [u, v] : G.edges()) edges.push_back({G.labels()[u], G.labels()[v]});
    return {{"vertices", G.labels()}, {"edges", edges}};
}

Json to_json(const EdgeSequenceData& data) {
    Json edges = Json::array();
    for (const auto& e : data.edges)
        edges.push_back({{"i", data.ring->names()[e.i]}, {"j", data.ring->names()[e.j]}, {"a", e.a}, {"b", e.b}});
    return {{"ring", data.ring->names()}, {"edges", edges}};
}

Json to_json(const TraceReport& r) {
    return {{"ideal", to_json(r.ideal)},
            {"m", r.m},
            {"hb_matrix", to_json(r.hb_matrix)},
            {"trace", to_json(r.trace)},
            {"basis", to_string(r.basis)},
            {"proven", is_proven(r.basis)},
            {"cohen_macaulay", r.is_cm},
            {"gorenstein", r.is_gorenstein},
            {"nearly_gorenstein", r.is_nearly_gorenstein},
            {"generically_gorenstein", r.is_generically_gorenstein}};
}

Json to_json(const NGClassification& c, const Ring& ring) {
    Json params = Json::object();
    for (const auto& [name, value] : c.parameters) params[name] = value;
    return {{"label", to_string(c.label)},
            {"relabeling", variables_json(c.relabeling, ring)},
            {"parameters", params},
            {"excess_variables", variables_json(c.excess_variables, ring)},
            {"predicts_nearly_gorenstein", c.predicts_nearly_gorenstein()}};
}

Json to_json(const ConsistencyReport& r, const Ring& ring) {
    Json out = {{"consistent", r.consistent},
                {"trace_nearly_gorenstein", r.trace_nearly_gorenstein},
                {"degree_filter", to_string(r.filter_decision)},
                {"classification", to_json(r.classification, ring)}};
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

Json to_json(const VerificationReport& r) {
    const auto& ring = r.ideal.ring();
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& w : r.lhs) lhs.push_back(to_string(w, ring));
    for (const auto& w : r.rhs) rhs.push_back(to_string(w, ring));
    Json out = {{"statement", r.statement},
                {"ideal", to_json(r.ideal)},
                {"bound", to_string(r.degree_bound, ring)},
                {"comparison_bound", to_string(r.comparison_bound, ring)},
                {"verdict", to_string(r.verdict)},
                {"lhs", lhs},
                {"rhs", rhs}};
    if (r.witness)
        out["witness"] = {{"monomial", to_string(r.witness->monomial, ring)},
                          {"side", r.witness->in_lhs ? "lhs-only" : "rhs-only"}};
    return out;
}

Json to_json(const InclusionReport& r) {
    const auto& ring = r.ideal.ring();
    Json out = {{"statement", "I_(m-2)(X) + I in I_1(alpha) + I, psi(c_A) = 0 for all A"},
                {"ideal", to_json(r.ideal)},
                {"bound", to_string(r.degree_bound, ring)},
                {"comparison_bound", to_string(r.comparison_bound, ring)},
                {"ideal_inclusion", r.ideal_inclusion},
                {"cofactor_vectors_in_kernel", r.cofactor_vectors_in_kernel},
                {"subsets_checked", r.subsets_checked},
                {"verdict", r.holds() ? "confirmed" : "refuted"}};
    if (r.failing_subset) out["witness"] = {{"rows", *r.failing_subset}};
    return out;
}

}  // namespace hbtrace
