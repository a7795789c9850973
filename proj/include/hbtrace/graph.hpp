#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbtrace/ideal.hpp"

namespace hbtrace {

/// Undirected simple graph on labeled vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<std::string> labels);
    /// Unlabeled graph; vertices are named "1".."n".
    static SimpleGraph unlabeled(std::size_t n);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    /// Throws DomainError for loops or out-of-range endpoints; repeated edges are no-ops.
    void add_edge(std::size_t u, std::size_t v);
    std::vector<std::size_t> neighbors(std::size_t v) const;
    /// Edges (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;

    bool operator==(const SimpleGraph& other) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> adj_;
};

SimpleGraph complement(const SimpleGraph& G);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal.
    std::vector<std::size_t> elimination_order;
    /// Vertices of an induced cycle of length >= 4, in cycle order, when not chordal.
    std::vector<std::size_t> induced_cycle;
};

/// Maximum cardinality search followed by a perfect-elimination check.
ChordalityResult is_chordal(const SimpleGraph& G);
bool is_cochordal(const SimpleGraph& G);

/// Ordering is a perfect elimination ordering of G.
bool is_perfect_elimination_order(const SimpleGraph& G, const std::vector<std::size_t>& order);
/// `cycle` lists >= 4 distinct vertices forming an induced cycle of G in order.
bool is_induced_cycle(const SimpleGraph& G, const std::vector<std::size_t>& cycle);

std::string to_dot(const SimpleGraph& G, const std::string& name = "G");

/// Squarefree ideal generated by x_u x_v over edges, in the ring named by the vertex labels.
MonomialIdeal edge_ideal(const SimpleGraph& G);

struct WeightedEdge {
    std::size_t i = 0;  ///< variable index of the first endpoint
    std::size_t j = 0;  ///< variable index of the second endpoint
    Exponent a = 1;     ///< power of x_i in the component
    Exponent b = 1;     ///< power of x_j in the component

    bool operator==(const WeightedEdge&) const = default;
};

/// A graph on the variables of `ring` with per-edge exponent pairs; each edge
/// stands for the component (x_i^a, x_j^b).
struct EdgeSequenceData {
    RingPtr ring;
    std::vector<WeightedEdge> edges;

    /// Throws DomainError on loops, out-of-range endpoints, zero exponents or repeated edges.
    void validate() const;
    SimpleGraph graph() const;
};

/// Intersection of the components (x_i^a, x_j^b) over all edges.
MonomialIdeal build_ideal(const EdgeSequenceData& data);

/// Graph on copies x_{i,p}; edge block for (i, j, a, b) is the complete bipartite
/// graph between copies 1..a of x_i and 1..b of x_j. Only copies used by some
/// block are created; labels follow copy_name().
SimpleGraph intersection_graph(const EdgeSequenceData& data);

struct RecoveryObstruction {
    std::vector<std::size_t> radical;
    MonomialIdeal primary;
    std::string reason;
};

struct RecoveryResult {
    std::optional<EdgeSequenceData> data;
    std::optional<RecoveryObstruction> obstruction;

    bool ok() const noexcept { return data.has_value(); }
};

/// Reads (G, a, b) off the standard primary decomposition of an unmixed
/// height-two ideal. Throws DomainError when I is not unmixed of height two;
/// a primary component not of the form (x_i^a, x_j^b) is reported as an obstruction.
RecoveryResult recover_data(const MonomialIdeal& I);

}  // namespace hbtrace
