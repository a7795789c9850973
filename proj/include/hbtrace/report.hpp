#pragma once

#include <json.hpp>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/graph.hpp"
#include "hbtrace/hilbert_burch.hpp"
#include "hbtrace/oracle.hpp"
#include "hbtrace/trace.hpp"

namespace hbtrace {

using Json = nlohmann::ordered_json;

Json to_json(const Monomial& u, const Ring& ring);
Json to_json(const MonomialIdeal& I);
Json variables_json(const std::vector<std::size_t>& vars, const Ring& ring);
Json to_json(const SignedMonomialMatrix& X);
Json to_json(const BettiTable& table, const Ring& ring);
Json to_json(const SimpleGraph& G);
Json to_json(const EdgeSequenceData& data);
Json to_json(const TraceReport& report);
Json to_json(const NGClassification& c, const Ring& ring);
Json to_json(const ConsistencyReport& report, const Ring& ring);
Json to_json(const VerificationReport& report);
Json to_json(const InclusionReport& report);

}  // namespace hbtrace
