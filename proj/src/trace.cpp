#include "hbtrace/trace.hpp"

#include <algorithm>
#include <numeric>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"

namespace hbtrace {

std::string to_string(TraceBasis basis) {
    switch (basis) {
        case TraceBasis::TwoVariables: return "two-variables";
        case TraceBasis::GenericallyGorenstein: return "generically-gorenstein";
        case TraceBasis::ConjecturalOnly: return "conjectural-only";
    }
    return "unknown";
}

bool is_proven(TraceBasis basis) { return basis != TraceBasis::ConjecturalOnly; }

std::string to_string(NGDecision d) {
    switch (d) {
        case NGDecision::Yes: return "yes";
        case NGDecision::No: return "no";
        case NGDecision::Conjectural: return "conjectural";
    }
    return "unknown";
}

std::string to_string(NGCase c) {
    switch (c) {
        case NGCase::Principal: return "principal";
        case NGCase::A_two_gens: return "A";
        case NGCase::B_two_vars: return "B";
        case NGCase::C: return "C";
        case NGCase::D: return "D";
        case NGCase::E: return "E";
        case NGCase::NotNearlyGorenstein: return "not-nearly-gorenstein";
    }
    return "unknown";
}

namespace {

void require_height_two(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("expected a proper nonzero ideal");
    const int h = height(I);
    if (h != 2) throw DomainError("ideal has height " + std::to_string(h) + ", expected 2");
}

bool disjoint_supports(const Monomial& u, const Monomial& v) { return gcd(u, v).is_one(); }

}  // namespace

GenericGorensteinResult is_generically_gorenstein(const MonomialIdeal& I) {
    require_height_two(I);
    if (!is_unmixed(I)) throw DomainError("ideal is not unmixed");
    for (const auto& P : minimal_primes(I)) {
        auto local = monomial_localization(I, P);
        const auto& g = local.generators();
        if (g.size() != 2 || !disjoint_supports(g[0], g[1]))
            return {false, P, std::move(local)};
    }
    return {true, std::nullopt, std::nullopt};
}

SignedMonomialMatrix hilbert_burch_matrix(const MonomialIdeal& I) {
    if (I.arity() == 2) return hb_matrix_xy(I);
    return hb_matrix_general(I);
}

TraceReport canonical_trace(const MonomialIdeal& I) {
    require_height_two(I);
    if (!is_cohen_macaulay_h2(I)) throw DomainError("S/I is not Cohen-Macaulay");
    const std::size_t m = I.size();
    auto X = hilbert_burch_matrix(I);
    auto trace = sum(minors_ideal(X, m - 2), I);

    const bool gen_gor = is_generically_gorenstein(I).value;
    TraceBasis basis = TraceBasis::ConjecturalOnly;
    if (I.arity() == 2)
        basis = TraceBasis::TwoVariables;
    else if (gen_gor)
        basis = TraceBasis::GenericallyGorenstein;

    const bool gorenstein = trace.is_unit();
    bool all_vars = true;
    for (std::size_t i = 0; i < I.arity(); ++i)
        all_vars = all_vars && trace.contains(Monomial::variable(I.arity(), i));
    return TraceReport{I, m, std::move(X), std::move(trace), basis, true, gorenstein,
                       gorenstein || all_vars, gen_gor};
}

bool is_gorenstein_h2(const MonomialIdeal& I) {
    const auto report = canonical_trace(I);
    const bool by_generators = I.size() == 2;
    const bool by_type = cm_type(I) == 1;
    if (report.is_gorenstein != by_generators || report.is_gorenstein != by_type)
        throw InvariantViolation("Gorenstein tests disagree for " + to_string(I));
    return report.is_gorenstein;
}

NGDecision is_nearly_gorenstein_h2(const MonomialIdeal& I) {
    require_height_two(I);
    if (!is_cohen_macaulay_h2(I)) throw DomainError("S/I is not Cohen-Macaulay");
    if (I.arity() != 2 && !is_generically_gorenstein(I).value) return NGDecision::Conjectural;
    // Nonzero entries of X have positive degree, so the trace lies in m^(m-2).
    if (I.size() >= 4) return NGDecision::No;
    return canonical_trace(I).is_nearly_gorenstein ? NGDecision::Yes : NGDecision::No;
}

bool NGClassification::predicts_nearly_gorenstein() const noexcept {
    switch (label) {
        case NGCase::Principal:
        case NGCase::A_two_gens: return true;
        case NGCase::B_two_vars:
        case NGCase::C:
        case NGCase::D:
        case NGCase::E: return excess_variables.empty();
        case NGCase::NotNearlyGorenstein: return false;
    }
    return false;
}

namespace {

std::vector<std::size_t> excess_of(const MonomialIdeal& I) {
    const auto supp = I.support();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < I.arity(); ++i)
        if (!std::binary_search(supp.begin(), supp.end(), i)) out.push_back(i);
    return out;
}

// (x^a, x^b y^c, y^d) with a > b >= 0, 0 <= c < d: (i) a-b = 1 or b = 1,
// (ii) d-c = 1 or c = 1, (iii) b + c >= 1.
bool two_variable_conditions(Exponent a, Exponent b, Exponent c, Exponent d) {
    return (a - b == 1 || b == 1) && (d - c == 1 || c == 1) && b + c >= 1;
}

// Reads (x^a, x^b y^c, y^d) on variables (x, y) = (vars[0], vars[1]) and
// tests the two-variable conditions.
std::optional<NGClassification> match_three_generators_xy(const MonomialIdeal& I, std::size_t x,
                                                          std::size_t y) {
    if (I.size() != 3) return std::nullopt;
    auto gens = I.generators();
    std::sort(gens.begin(), gens.end(), [&](const Monomial& u, const Monomial& v) { return u[x] > v[x]; });
    const Exponent a = gens[0][x], b = gens[1][x], c = gens[1][y], d = gens[2][y];
    if (gens[0][y] != 0 || gens[2][x] != 0) return std::nullopt;
    NGClassification out;
    out.relabeling = {x, y};
    out.parameters = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
    out.label = two_variable_conditions(a, b, c, d) ? NGCase::B_two_vars : NGCase::NotNearlyGorenstein;
    return out;
}

using Pattern = std::vector<std::vector<Exponent>>;

bool has(const Pattern& gens, const std::vector<Exponent>& v) {
    return std::find(gens.begin(), gens.end(), v) != gens.end();
}

std::optional<std::vector<std::pair<std::string, Exponent>>> match_c(const Pattern& g) {
    if (g.size() != 3 || !has(g, {1, 0, 1}) || !has(g, {0, 1, 1})) return std::nullopt;
    for (const auto& v : g) {
        if (v == std::vector<Exponent>{1, 0, 1} || v == std::vector<Exponent>{0, 1, 1}) continue;
        if (v[2] == 0 && v[0] >= 1 && v[0] + v[1] >= 2)
            return std::vector<std::pair<std::string, Exponent>>{{"a", v[0]}, {"b", v[1]}};
    }
    return std::nullopt;
}

std::optional<std::vector<std::pair<std::string, Exponent>>> match_d(const Pattern& g) {
    if (g.size() != 3 || !has(g, {1, 0, 1})) return std::nullopt;
    for (const auto& v : g)
        if (v[0] == 1 && v[2] == 0 && v[1] >= 1 && has(g, {0, v[1] + 1, 0}))
            return std::vector<std::pair<std::string, Exponent>>{{"b", v[1]}};
    return std::nullopt;
}

bool match_e(const Pattern& g) {
    return g.size() == 3 && has(g, {1, 0, 1, 0}) && has(g, {1, 0, 0, 1}) && has(g, {0, 1, 0, 1});
}

}  // namespace

NGClassification classify_ng_two_vars(const MonomialIdeal& I) {
    if (I.arity() != 2) throw DomainError("two-variable classifier needs a ring with two variables");
    if (!I.is_proper_nonzero()) throw DomainError("expected a proper nonzero ideal");
    NGClassification out;
    if (I.size() == 1) {
        out.label = NGCase::Principal;
        return out;
    }
    if (height(I) != 2) throw DomainError("S/I is not Cohen-Macaulay");
    if (I.size() == 2) {
        out.label = NGCase::A_two_gens;
        out.relabeling = {0, 1};
        return out;
    }
    if (I.size() == 3) return *match_three_generators_xy(I, 0, 1);
    return out;
}

NGClassification classify_ng_height2(const MonomialIdeal& I) {
    require_height_two(I);
    NGClassification out;
    out.excess_variables = excess_of(I);
    const auto supp = I.support();
    const std::size_t s = supp.size();

    if (I.size() == 2) {
        out.label = NGCase::A_two_gens;
        out.relabeling = supp;
        return out;
    }
    if (I.size() != 3) return out;

    if (s == 2) {
        auto m = match_three_generators_xy(I, supp[0], supp[1]);
        auto flipped = match_three_generators_xy(I, supp[1], supp[0]);
        if (!m) return out;
        if (flipped->parameters > m->parameters) m = flipped;
        m->excess_variables = out.excess_variables;
        return *m;
    }
    if (s != 3 && s != 4) return out;

    // Cases overlap, so every relabeling is scanned: earliest label, then largest parameters.
    std::optional<NGClassification> best;
    auto offer = [&](NGCase label, const std::vector<std::size_t>& perm, std::vector<std::pair<std::string, Exponent>> p) {
        if (best && (best->label < label || (best->label == label && best->parameters >= p))) return;
        best = out;
        best->label = label;
        best->relabeling = perm;
        best->parameters = std::move(p);
    };
    std::vector<std::size_t> perm = supp;
    do {
        Pattern g;
        for (const auto& u : I.generators()) {
            std::vector<Exponent> v(s);
            for (std::size_t k = 0; k < s; ++k) v[k] = u[perm[k]];
            g.push_back(std::move(v));
        }
        if (s == 3) {
            if (auto p = match_c(g)) offer(NGCase::C, perm, *p);
            if (auto p = match_d(g)) offer(NGCase::D, perm, *p);
        } else if (match_e(g)) {
            offer(NGCase::E, perm, {});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best ? *best : out;
}

ConsistencyReport verify_classification_consistency(const MonomialIdeal& I) {
    const auto report = canonical_trace(I);
    if (!is_proven(report.basis))
        throw DomainError("trace formula is only conjectural for " + to_string(I));
    ConsistencyReport out;
    out.trace_nearly_gorenstein = report.is_nearly_gorenstein;
    out.filter_decision = is_nearly_gorenstein_h2(I);
    out.classification = classify_ng_height2(I);

    const bool predicted = out.classification.predicts_nearly_gorenstein();
    const bool filter = out.filter_decision == NGDecision::Yes;
    out.consistent = predicted == out.trace_nearly_gorenstein && filter == out.trace_nearly_gorenstein;
    if (I.arity() == 2) {
        const auto two = classify_ng_two_vars(I);
        const bool two_predicted = two.predicts_nearly_gorenstein();
        out.consistent = out.consistent && two_predicted == out.trace_nearly_gorenstein;
        if (two_predicted != out.trace_nearly_gorenstein)
            out.detail += "two-variable classifier says " + to_string(two.label) + "; ";
    }
    if (!out.consistent) {
        out.detail += "trace " + to_string(report.trace) + " gives nearly Gorenstein = " +
                      (out.trace_nearly_gorenstein ? "true" : "false") + ", classification " +
                      to_string(out.classification.label) + " predicts " + (predicted ? "true" : "false") +
                      ", degree filter says " + to_string(out.filter_decision);
    }
    return out;
}

}  // namespace hbtrace
