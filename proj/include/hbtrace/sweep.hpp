#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hbtrace/graph.hpp"
#include "hbtrace/ideal.hpp"
#include "hbtrace/oracle.hpp"
#include "hbtrace/trace.hpp"

namespace hbtrace {

using Rng = std::mt19937_64;

struct LabeledIdeal {
    std::string family;
    std::vector<std::pair<std::string, Exponent>> parameters;
    MonomialIdeal ideal;
};

/// (x^a, x^b y^c, y^d) with 1 <= b < a <= max_exp and 1 <= c < d <= max_exp.
std::vector<LabeledIdeal> xy_three_generator_family(Exponent max_exp);

/// Instances of the height-two patterns (a)-(e) with parameters up to max_param,
/// each under a random relabeling of its ring.
std::vector<LabeledIdeal> pattern_instances(Exponent max_param, std::uint64_t seed);

/// Staircase ideal of K[x, y] with m generators and exponents up to max_exp.
/// Need not be Cohen-Macaulay.
MonomialIdeal random_xy_ideal(Rng& rng, std::size_t m, Exponent max_exp);

/// Random simple graph on x1..x_n with at most max_edges edges and exponents up to max_exp.
EdgeSequenceData random_edge_data(Rng& rng, std::size_t n, std::size_t max_edges, Exponent max_exp);

/// Cohen-Macaulay intersection of distinct edge components with at most
/// max_generators generators, found by rejection sampling.
std::optional<MonomialIdeal> random_generically_gorenstein_cm(Rng& rng, std::size_t n, std::size_t max_edges,
                                                              Exponent max_exp, std::size_t max_generators,
                                                              std::size_t attempts = 200);

/// Cohen-Macaulay height-two ideal of K[x1..x_n] that is not generically Gorenstein.
/// Mixes substitutions into two-variable staircases, intersections with repeated
/// radicals and plain rejection sampling.
MonomialIdeal random_non_generically_gorenstein_cm(Rng& rng, std::size_t n, Exponent max_exp);

struct ClassificationRow {
    LabeledIdeal input;
    TraceBasis basis = TraceBasis::ConjecturalOnly;
    ConsistencyReport report;
};

/// verify_classification_consistency over `inputs`, in parallel, in input order.
std::vector<ClassificationRow> classification_sweep(const std::vector<LabeledIdeal>& inputs);

struct ConjectureRow {
    LabeledIdeal input;
    VerificationReport report;
};

/// verify_conjecture over `inputs` with default bounds, in parallel, in input order.
std::vector<ConjectureRow> conjecture_sweep(const std::vector<LabeledIdeal>& inputs);

}  // namespace hbtrace
