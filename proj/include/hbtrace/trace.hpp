#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbtrace/hilbert_burch.hpp"
#include "hbtrace/ideal.hpp"

namespace hbtrace {

/// Which result justifies the minors formula for the trace.
enum class TraceBasis {
    TwoVariables,           ///< two-variable Cohen-Macaulay quotients
    GenericallyGorenstein,  ///< generically Gorenstein height-two quotients
    ConjecturalOnly,        ///< neither applies; the formula is conjectural here
};

std::string to_string(TraceBasis basis);
bool is_proven(TraceBasis basis);

struct GenericGorensteinResult {
    bool value = false;
    /// On failure: the offending minimal prime and the localization there.
    std::optional<std::vector<std::size_t>> prime;
    std::optional<MonomialIdeal> localization;
};

/// Complete-intersection test at every minimal prime via monomial localization.
/// DomainError unless I is unmixed of height two.
GenericGorensteinResult is_generically_gorenstein(const MonomialIdeal& I);

struct TraceReport {
    MonomialIdeal ideal;
    std::size_t m = 0;
    SignedMonomialMatrix hb_matrix;
    /// I_{m-2}(X) + I, the trace lifted to S.
    MonomialIdeal trace;
    TraceBasis basis = TraceBasis::ConjecturalOnly;
    bool is_cm = true;
    bool is_gorenstein = false;
    bool is_nearly_gorenstein = false;
    bool is_generically_gorenstein = false;
};

/// Hilbert-Burch matrix used by the trace computations: the closed form when the
/// ring has two variables, minimal Taylor syzygies otherwise.
SignedMonomialMatrix hilbert_burch_matrix(const MonomialIdeal& I);

/// Trace of the canonical module from submaximal minors. DomainError unless I is a
/// Cohen-Macaulay ideal of height two.
TraceReport canonical_trace(const MonomialIdeal& I);

/// Trace is the unit ideal; cross-checked against mu(I) = 2 and type 1.
bool is_gorenstein_h2(const MonomialIdeal& I);

enum class NGDecision { Yes, No, Conjectural };
std::string to_string(NGDecision d);

/// Nearly Gorenstein test; Conjectural when no proven trace formula applies.
NGDecision is_nearly_gorenstein_h2(const MonomialIdeal& I);

enum class NGCase { Principal, A_two_gens, B_two_vars, C, D, E, NotNearlyGorenstein };
std::string to_string(NGCase c);

struct NGClassification {
    NGCase label = NGCase::NotNearlyGorenstein;
    /// relabeling[k] is the ring index playing the role of pattern variable x_{k+1}.
    std::vector<std::size_t> relabeling;
    std::vector<std::pair<std::string, Exponent>> parameters;
    /// Ambient variables outside the support of I.
    std::vector<std::size_t> excess_variables;

    bool ambient_excess_vars() const noexcept { return !excess_variables.empty(); }
    /// What the classification predicts for the ambient quotient S/I.
    bool predicts_nearly_gorenstein() const noexcept;
};

/// Closed-form classification for Cohen-Macaulay ideals of K[x, y].
NGClassification classify_ng_two_vars(const MonomialIdeal& I);

/// Pattern match against the height-two list (a)-(e) over relabelings of the support.
NGClassification classify_ng_height2(const MonomialIdeal& I);

struct ConsistencyReport {
    bool consistent = false;
    bool trace_nearly_gorenstein = false;
    NGDecision filter_decision = NGDecision::Conjectural;
    NGClassification classification;
    std::string detail;
};

/// Compares the trace-based decision with the closed-form classifications.
/// DomainError when the trace basis is only conjectural.
ConsistencyReport verify_classification_consistency(const MonomialIdeal& I);

}  // namespace hbtrace
