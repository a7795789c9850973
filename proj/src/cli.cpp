#include "hbtrace/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include "hbtrace/errors.hpp"
#include "hbtrace/parse.hpp"
#include "hbtrace/report.hpp"
#include "hbtrace/sweep.hpp"
#include "hbtrace/version.hpp"

namespace hbtrace {

namespace {

const std::string kExactBasis = "exact computation, no trace formula involved";

struct Outcome {
    Json result;
    std::string text;
    std::string basis = kExactBasis;
    bool proven = true;
    std::optional<std::string> degree_bound;
    int exit_code = kExitOk;
};

struct Context {
    const RunConfig& config;
    std::string input;

    MonomialIdeal ideal() const {
        RingPtr declared;
        if (config.vars) declared = make_ring(parse_name_list(*config.vars));
        return parse_ideal(input, declared);
    }

    std::optional<Monomial> bound(const MonomialIdeal& I) const {
        if (!config.bound) return std::nullopt;
        return parse_exponent_vector(*config.bound, I.arity());
    }

    std::size_t cap() const { return config.cap.value_or(kMaxLatticePoints); }
};

std::string names(const std::vector<std::size_t>& vars, const Ring& ring) {
    std::string out = "(";
    for (std::size_t k = 0; k < vars.size(); ++k) out += (k ? ", " : "") + ring.names()[vars[k]];
    return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trace_basis_text(TraceBasis b) {
    switch (b) {
        case TraceBasis::TwoVariables: return "proven: two-variable Cohen-Macaulay quotient";
        case TraceBasis::GenericallyGorenstein: return "proven: generically Gorenstein height-two quotient";
        case TraceBasis::ConjecturalOnly: return "CONJECTURAL: not generically Gorenstein, trace formula unproven here";
    }
    return "unknown";
}

TraceBasis basis_of(const MonomialIdeal& I) {
    if (I.arity() == 2) return TraceBasis::TwoVariables;
    return is_generically_gorenstein(I).value ? TraceBasis::GenericallyGorenstein : TraceBasis::ConjecturalOnly;
}

Outcome cmd_decompose(const Context& ctx) {
    const auto I = ctx.ideal();
    Outcome o;
    Json irr = Json::array(), prim = Json::array();
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\n" << "irreducible components:\n";
    for (const auto& c : irreducible_decomposition(I)) {
        irr.push_back(to_json(c.to_ideal()));
        t << "  " << to_string(c.to_ideal()) << "\n";
    }
    t << "standard primary decomposition:\n";
    for (const auto& c : standard_primary_decomposition(I).components) {
        prim.push_back({{"radical", variables_json(c.radical, I.ring())}, {"primary", to_json(c.primary)}});
        t << "  " << to_string(c.primary) << "  radical " << names(c.radical, I.ring()) << "\n";
    }
    Json ass = Json::array();
    for (const auto& P : associated_primes(I)) ass.push_back(variables_json(P, I.ring()));
    o.result = {{"ideal", to_json(I)}, {"irreducible_components", irr}, {"primary_components", prim},
                {"associated_primes", ass}};
    o.text = t.str();
    return o;
}

Outcome cmd_height(const Context& ctx) {
    const auto I = ctx.ideal();
    Outcome o;
    const int h = height(I);
    const bool unmixed = is_unmixed(I);
    Json mins = Json::array();
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\nheight: " << h << "\nunmixed: " << yes_no(unmixed) << "\nminimal primes:";
    for (const auto& P : minimal_primes(I)) {
        mins.push_back(variables_json(P, I.ring()));
        t << " " << names(P, I.ring());
    }
    t << "\n";
    o.result = {{"ideal", to_json(I)}, {"height", h}, {"unmixed", unmixed}, {"minimal_primes", mins}};
    o.text = t.str();
    return o;
}

Outcome cmd_polarize(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto P = polarize(I);
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"polarization", to_json(P.ideal)}};
    o.text = "ideal: " + to_string(I) + "\npolarization: " + to_string(P.ideal) + "\n";
    return o;
}

Outcome cmd_dual(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto D = alexander_dual(I);
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"alexander_dual", to_json(D)}};
    o.text = "ideal: " + to_string(I) + "\nalexander dual: " + to_string(D) + "\n";
    return o;
}

Outcome cmd_localize(const Context& ctx) {
    const auto I = ctx.ideal();
    if (!ctx.config.at) throw DomainError("localize needs --at with a list of variables");
    std::vector<std::size_t> subset;
    for (const auto& name : parse_name_list(*ctx.config.at)) {
        const auto i = I.ring().index_of(name);
        if (i == I.arity()) throw DomainError("unknown variable '" + name + "' in --at");
        subset.push_back(i);
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const auto L = monomial_localization(I, subset);
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"at", variables_json(subset, I.ring())}, {"localization", to_json(L)}};
    o.text = "ideal: " + to_string(I) + "\nlocalization at " + names(subset, I.ring()) + ": " + to_string(L) + "\n";
    return o;
}

Outcome cmd_graph(const Context& ctx) {
    const auto data = parse_graph_spec(ctx.input);
    const auto I = build_ideal(data);
    const auto G = intersection_graph(data);
    const auto chord = is_chordal(complement(G));
    const bool cm = is_cohen_macaulay_h2(I);
    if (cm != chord.chordal)
        throw InvariantViolation("Cohen-Macaulay test and cochordality disagree for " + to_string(I));
    Outcome o;
    Json cert = {{"chordal", chord.chordal}};
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\n"
      << "intersection graph: " << G.vertex_count() << " vertices, " << G.edge_count() << " edges\n"
      << "cochordal: " << yes_no(chord.chordal) << "\n";
    if (chord.chordal) {
        std::vector<std::string> order;
        for (auto v : chord.elimination_order) order.push_back(G.label(v));
        cert["elimination_order"] = order;
        t << "perfect elimination order of the complement:";
        for (const auto& s : order) t << " " << s;
    } else {
        std::vector<std::string> cycle;
        for (auto v : chord.induced_cycle) cycle.push_back(G.label(v));
        cert["induced_cycle"] = cycle;
        t << "induced cycle in the complement:";
        for (const auto& s : cycle) t << " " << s;
    }
    t << "\nCohen-Macaulay: " << yes_no(cm) << "\n" << to_dot(G, "intersection");
    o.result = {{"data", to_json(data)},       {"ideal", to_json(I)},    {"intersection_graph", to_json(G)},
                {"cochordal", chord.chordal},  {"complement", cert},     {"cohen_macaulay", cm},
                {"dot", to_dot(G, "intersection")}};
    o.text = t.str();
    return o;
}

Outcome cmd_is_cm(const Context& ctx) {
    const auto I = ctx.ideal();
    const int h = height(I);
    const int pd = projective_dimension(I);
    const bool cm = pd == h;
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"height", h}, {"projective_dimension", pd}, {"cohen_macaulay", cm}};
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\nheight: " << h << "\nprojective dimension of S/I: " << pd
      << "\nCohen-Macaulay: " << yes_no(cm) << "\n";
    if (cm) {
        const auto type = cm_type(I);
        o.result["type"] = type;
        t << "Cohen-Macaulay type: " << type << "\n";
    }
    o.text = t.str();
    return o;
}

Outcome cmd_betti(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto table = betti_numbers(I);
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"betti", to_json(table, I.ring())}};
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\nBetti numbers of S/I:";
    for (int i = 0; i <= table.top_ideal_index() + 1; ++i) t << " " << table.quotient_total(i);
    t << "\nmultigraded (homological index for S/I, degree, value):\n";
    for (const auto& [key, value] : table.entries())
        t << "  " << key.first + 1 << "  " << to_string(key.second, I.ring()) << "  " << value << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_hb_matrix(const Context& ctx) {
    const auto I = ctx.ideal();
    if (height(I) != 2 || !is_cohen_macaulay_h2(I)) throw DomainError("S/I is not a height-two Cohen-Macaulay quotient");
    const auto X = hilbert_burch_matrix(I);
    Outcome o;
    o.result = {{"ideal", to_json(I)}, {"hb_matrix", to_json(X)}};
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\nrows:";
    for (const auto& d : X.row_degrees()) t << " " << to_string(d, I.ring());
    t << "\n" << to_text(X) << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_trace(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto r = canonical_trace(I);
    Outcome o;
    o.basis = trace_basis_text(r.basis);
    o.proven = is_proven(r.basis);
    o.result = to_json(r);
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\nHilbert-Burch matrix, rows";
    for (const auto& d : r.hb_matrix.row_degrees()) t << " " << to_string(d, I.ring());
    t << ":\n"
      << to_text(r.hb_matrix) << "\ntrace: " << to_string(r.trace) << "\ngorenstein: " << yes_no(r.is_gorenstein)
      << "\nnearly gorenstein: " << yes_no(r.is_nearly_gorenstein)
      << "\ngenerically gorenstein: " << yes_no(r.is_generically_gorenstein) << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_classify(const Context& ctx) {
    const auto I = ctx.ideal();
    Outcome o;
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\n";
    if (I.is_proper_nonzero() && I.size() == 1 && I.arity() == 2) {
        const auto c = classify_ng_two_vars(I);
        o.result = {{"ideal", to_json(I)}, {"classification", to_json(c, I.ring())}};
        o.text = t.str() + "case: principal\nnearly gorenstein: yes\n";
        return o;
    }
    const auto c = classify_ng_height2(I);
    const bool cm = is_cohen_macaulay_h2(I);
    o.result = {{"ideal", to_json(I)}, {"cohen_macaulay", cm}, {"classification", to_json(c, I.ring())}};
    t << "case: " << to_string(c.label);
    if (!c.relabeling.empty()) t << "  relabeling " << names(c.relabeling, I.ring());
    for (const auto& [k, v] : c.parameters) t << "  " << k << "=" << v;
    t << "\n";
    if (c.ambient_excess_vars()) t << "variables outside the support: " << names(c.excess_variables, I.ring()) << "\n";
    t << "Cohen-Macaulay: " << yes_no(cm) << "\n";
    if (cm) {
        const auto basis = basis_of(I);
        o.basis = trace_basis_text(basis);
        o.proven = is_proven(basis);
        if (o.proven) {
            const auto rep = verify_classification_consistency(I);
            if (!rep.consistent) throw InvariantViolation("classification inconsistent: " + rep.detail);
            o.result["consistency"] = to_json(rep, I.ring());
            t << "nearly gorenstein: " << yes_no(rep.trace_nearly_gorenstein) << " (trace and classification agree)\n";
        } else {
            t << "nearly gorenstein: undecided, the classification covers generically Gorenstein quotients only\n";
        }
    }
    o.text = t.str();
    return o;
}

std::string verification_text(const VerificationReport& r) {
    const auto& ring = r.ideal.ring();
    std::ostringstream t;
    t << "ideal: " << to_string(r.ideal) << "\nstatement: " << r.statement
      << "\ndegree bound: " << to_string(r.degree_bound, ring)
      << "\ncompared below: " << to_string(r.comparison_bound, ring) << "\nleft:";
    for (const auto& w : r.lhs) t << " " << to_string(w, ring);
    t << "\nright:";
    for (const auto& w : r.rhs) t << " " << to_string(w, ring);
    t << "\nverdict: " << (r.verdict == Verdict::Confirmed ? "confirmed up to the degree bound" : "REFUTED") << "\n";
    if (r.witness)
        t << "witness: " << to_string(r.witness->monomial, ring) << " is a minimal generator of the "
          << (r.witness->in_lhs ? "left" : "right") << " side only\n";
    return t.str();
}

Outcome cmd_verify_kernel_xy(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto r = verify_kernel_theorem_xy(I, ctx.bound(I), ctx.cap());
    Outcome o;
    o.basis = "proven: two-variable kernel identity, checked by brute force";
    o.degree_bound = to_string(r.degree_bound, I.ring());
    o.result = to_json(r);
    o.text = verification_text(r);
    if (r.verdict == Verdict::Refuted) o.exit_code = kExitInternal;
    return o;
}

Outcome cmd_verify_inclusion(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto r = verify_inclusion(I, ctx.bound(I), ctx.cap());
    Outcome o;
    o.basis = "proven: inclusion of the submaximal minors in the kernel entries";
    o.degree_bound = to_string(r.degree_bound, I.ring());
    o.result = to_json(r);
    std::ostringstream t;
    t << "ideal: " << to_string(I) << "\ndegree bound: " << to_string(r.degree_bound, I.ring())
      << "\ncofactor vectors checked: " << r.subsets_checked
      << "\npsi(c_A) = 0 for all A: " << yes_no(r.cofactor_vectors_in_kernel)
      << "\nI_(m-2)(X) + I inside I_1(alpha) + I: " << yes_no(r.ideal_inclusion) << "\n";
    o.text = t.str();
    if (!r.holds()) o.exit_code = kExitInternal;
    return o;
}

Outcome cmd_verify_conjecture(const Context& ctx) {
    const auto I = ctx.ideal();
    const auto r = verify_conjecture(I, ctx.bound(I), ctx.cap());
    const auto basis = basis_of(I);
    Outcome o;
    o.basis = trace_basis_text(basis);
    o.proven = is_proven(basis);
    o.degree_bound = to_string(r.degree_bound, I.ring());
    o.result = to_json(r);
    o.text = verification_text(r);
    if (r.verdict == Verdict::Refuted) o.exit_code = o.proven ? kExitInternal : kExitRefuted;
    return o;
}

std::string params_text(const LabeledIdeal& li) {
    std::string out;
    for (const auto& [k, v] : li.parameters) out += k + "=" + std::to_string(v) + " ";
    return out;
}

Json params_json(const LabeledIdeal& li) {
    Json p = Json::object();
    for (const auto& [k, v] : li.parameters) p[k] = v;
    return p;
}

Outcome classification_table(const std::vector<LabeledIdeal>& inputs, const std::string& family) {
    const auto rows = classification_sweep(inputs);
    Outcome o;
    Json jrows = Json::array();
    std::size_t mismatches = 0, nearly = 0;
    std::ostringstream t;
    t << "family: " << family << "\n";
    for (const auto& r : rows) {
        mismatches += r.report.consistent ? 0 : 1;
        nearly += r.report.trace_nearly_gorenstein ? 1 : 0;
        jrows.push_back({{"family", r.input.family},
                         {"parameters", params_json(r.input)},
                         {"ideal", to_string(r.input.ideal)},
                         {"basis", to_string(r.basis)},
                         {"label", to_string(r.report.classification.label)},
                         {"nearly_gorenstein", r.report.trace_nearly_gorenstein},
                         {"consistent", r.report.consistent}});
        t << std::left << std::setw(22) << params_text(r.input) << std::setw(44) << to_string(r.input.ideal)
          << std::setw(24) << to_string(r.report.classification.label)
          << (r.report.trace_nearly_gorenstein ? "NG" : "not NG") << (r.report.consistent ? "" : "  MISMATCH")
          << "\n";
    }
    t << "instances: " << rows.size() << "  nearly gorenstein: " << nearly << "  mismatches: " << mismatches << "\n";
    o.result = {{"family", family}, {"instances", rows.size()}, {"nearly_gorenstein", nearly},
                {"mismatches", mismatches}, {"rows", jrows}};
    o.text = t.str();
    o.basis = "proven: trace formula for two-variable and generically Gorenstein quotients";
    if (mismatches) o.exit_code = kExitInternal;
    return o;
}

Outcome cmd_sweep(const Context& ctx) {
    const auto& c = ctx.config;
    if (c.family == "xy") return classification_table(xy_three_generator_family(c.max_exp.value_or(5)), "xy");
    if (c.family == "patterns") return classification_table(pattern_instances(c.max_exp.value_or(3), c.seed), "patterns");
    Rng rng(c.seed);
    if (c.family == "generic") {
        std::vector<LabeledIdeal> inputs;
        for (std::size_t k = 0; k < c.count; ++k) {
            const std::size_t n = 2 + k % 3;
            if (auto I = random_generically_gorenstein_cm(rng, n, 4, c.max_exp.value_or(3), 4))
                inputs.push_back({"generic", {{"n", static_cast<Exponent>(n)}}, *I});
        }
        return classification_table(inputs, "generic");
    }
    if (c.family == "frontier") {
        std::vector<LabeledIdeal> inputs;
        for (std::size_t k = 0; k < c.count; ++k) {
            const std::size_t n = 3 + k % 3;
            inputs.push_back({"frontier", {{"n", static_cast<Exponent>(n)}},
                              random_non_generically_gorenstein_cm(rng, n, c.max_exp.value_or(3))});
        }
        const auto rows = conjecture_sweep(inputs);
        Outcome o;
        o.basis = trace_basis_text(TraceBasis::ConjecturalOnly);
        o.proven = false;
        Json jrows = Json::array();
        std::size_t refuted = 0;
        std::ostringstream t;
        t << "family: frontier\n";
        for (const auto& r : rows) {
            const bool bad = r.report.verdict == Verdict::Refuted;
            refuted += bad ? 1 : 0;
            auto j = to_json(r.report);
            jrows.push_back(j);
            t << std::left << std::setw(64) << to_string(r.input.ideal) << std::setw(12) << to_string(r.report.verdict)
              << "bound " << to_string(r.report.degree_bound, r.input.ideal.ring());
            if (r.report.witness) t << "  witness " << to_string(r.report.witness->monomial, r.input.ideal.ring());
            t << "\n";
        }
        t << "instances: " << rows.size() << "  refuted: " << refuted << "\n";
        o.result = {{"family", "frontier"}, {"instances", rows.size()}, {"refuted", refuted}, {"rows", jrows}};
        o.text = t.str();
        if (refuted) o.exit_code = kExitRefuted;
        return o;
    }
    throw DomainError("unknown sweep family '" + c.family + "' (expected xy, patterns, generic or frontier)");
}

using Handler = std::function<Outcome(const Context&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"decompose", cmd_decompose},
        {"height", cmd_height},
        {"polarize", cmd_polarize},
        {"dual", cmd_dual},
        {"localize", cmd_localize},
        {"graph", cmd_graph},
        {"is-cm", cmd_is_cm},
        {"betti", cmd_betti},
        {"hb-matrix", cmd_hb_matrix},
        {"trace", cmd_trace},
        {"classify", cmd_classify},
        {"verify-kernel-xy", cmd_verify_kernel_xy},
        {"verify-inclusion", cmd_verify_inclusion},
        {"verify-conjecture", cmd_verify_conjecture},
        {"sweep", cmd_sweep},
    };
    return table;
}

void write(const RunConfig& config, const Outcome& o, std::ostream& out) {
    if (config.format == OutputFormat::Json) {
        Json env = {{"schema", kReportSchema}, {"version", kVersion}, {"command", config.command},
                    {"basis", o.basis},        {"proven", o.proven}};
        env["degree_bound"] = o.degree_bound ? Json(*o.degree_bound) : Json(nullptr);
        if (o.degree_bound) env["degree_bound_note"] = "heuristic default lcm(I)^2 unless overridden";
        env["result"] = o.result;
        out << env.dump(2) << "\n";
        return;
    }
    out << "basis: " << o.basis << "\n" << o.text;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

int dispatch(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto it = handlers().find(config.command);
    if (it == handlers().end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return kExitParse;
    }
    try {
        std::string input;
        if (config.input)
            input = *config.input;
        else if (config.command != "sweep")
            input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        const auto o = it->second(Context{config, std::move(input)});
        write(config, o, out);
        return o.exit_code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace hbtrace
