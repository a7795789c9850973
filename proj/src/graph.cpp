#include "hbtrace/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"

namespace hbtrace {

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {}

SimpleGraph SimpleGraph::unlabeled(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return SimpleGraph(std::move(labels));
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    const std::size_t n = vertex_count();
    if (u >= n || v >= n) throw DomainError("vertex out of range");
    return adj_[u * n + v] != 0;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    const std::size_t n = vertex_count();
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loops are not allowed in a simple graph");
    adj_[u * n + v] = adj_[v * n + u] = 1;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (std::size_t v = u + 1; v < vertex_count(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t SimpleGraph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

SimpleGraph complement(const SimpleGraph& G) {
    SimpleGraph H(G.labels());
    for (std::size_t u = 0; u < G.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < G.vertex_count(); ++v)
            if (!G.adjacent(u, v)) H.add_edge(u, v);
    return H;
}

bool is_perfect_elimination_order(const SimpleGraph& G, const std::vector<std::size_t>& order) {
    const std::size_t n = G.vertex_count();
    if (order.size() != n) return false;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (order[k] >= n || pos[order[k]] != n) return false;
        pos[order[k]] = k;
    }
    for (std::size_t v : order) {
        std::vector<std::size_t> later;
        for (auto u : G.neighbors(v))
            if (pos[u] > pos[v]) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!G.adjacent(later[a], later[b])) return false;
    }
    return true;
}

bool is_induced_cycle(const SimpleGraph& G, const std::vector<std::size_t>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    std::set<std::size_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != k) return false;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            const bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if (G.adjacent(cycle[a], cycle[b]) != consecutive) return false;
        }
    return true;
}

namespace {

std::vector<std::size_t> max_cardinality_search(const SimpleGraph& G) {
    const std::size_t n = G.vertex_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<std::size_t> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        for (auto u : G.neighbors(best))
            if (!numbered[u]) ++weight[u];
    }
    // Vertices are eliminated in reverse visiting order.
    std::reverse(visit.begin(), visit.end());
    return visit;
}

// Any chordless cycle of length >= 4 has a vertex v with two non-adjacent cycle
// neighbours u, w, joined by a path avoiding the rest of N[v]. The search over
// (v, u, w) is therefore complete; a shortest such path is induced.
std::vector<std::size_t> find_induced_cycle(const SimpleGraph& G) {
    const std::size_t n = G.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        const auto nv = G.neighbors(v);
        for (std::size_t a = 0; a < nv.size(); ++a)
            for (std::size_t b = a + 1; b < nv.size(); ++b) {
                const std::size_t u = nv[a], w = nv[b];
                if (G.adjacent(u, w)) continue;
                std::vector<bool> blocked(n, false);
                blocked[v] = true;
                for (auto x : nv)
                    if (x != u && x != w) blocked[x] = true;
                std::vector<std::size_t> parent(n, n);
                std::deque<std::size_t> queue{u};
                parent[u] = u;
                while (!queue.empty() && parent[w] == n) {
                    auto x = queue.front();
                    queue.pop_front();
                    for (auto y : G.neighbors(x))
                        if (!blocked[y] && parent[y] == n) {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                }
                if (parent[w] == n) continue;
                std::vector<std::size_t> cycle{v};
                for (std::size_t x = w; x != u; x = parent[x]) cycle.push_back(x);
                cycle.push_back(u);
                return cycle;
            }
    }
    return {};
}

}  // namespace

ChordalityResult is_chordal(const SimpleGraph& G) {
    ChordalityResult r;
    auto order = max_cardinality_search(G);
    if (is_perfect_elimination_order(G, order)) {
        r.chordal = true;
        r.elimination_order = std::move(order);
        return r;
    }
    r.induced_cycle = find_induced_cycle(G);
    if (!is_induced_cycle(G, r.induced_cycle))
        throw InvariantViolation("MCS ordering is not perfect but no induced cycle was found");
    return r;
}

bool is_cochordal(const SimpleGraph& G) { return is_chordal(complement(G)).chordal; }

std::string to_dot(const SimpleGraph& G, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (const auto& l : G.labels()) out += "  \"" + l + "\";\n";
    for (const auto& [u, v] : G.edges())
        out += "  \"" + G.label(u) + "\" -- \"" + G.label(v) + "\";\n";
    return out + "}\n";
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
    if (G.vertex_count() == 0) throw DomainError("edge ideal of a graph without vertices");
    auto ring = make_ring(G.labels());
    std::vector<Monomial> gens;
    for (const auto& [u, v] : G.edges()) {
        Monomial m(ring->size());
        m[u] = m[v] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(ring, std::move(gens));
}

void EdgeSequenceData::validate() const {
    if (!ring) throw DomainError("edge data without a ring");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
        if (e.i >= ring->size() || e.j >= ring->size())
            throw DomainError("edge endpoint outside the ring");
        if (e.i == e.j) throw DomainError("loop edge");
        if (e.a == 0 || e.b == 0) throw DomainError("edge exponents must be positive");
        if (!seen.insert(std::minmax(e.i, e.j)).second)
            throw DomainError("duplicate edge {" + ring->name(e.i) + ", " + ring->name(e.j) + "}");
    }
}

SimpleGraph EdgeSequenceData::graph() const {
    SimpleGraph G(ring->names());
    for (const auto& e : edges) G.add_edge(e.i, e.j);
    return G;
}

MonomialIdeal build_ideal(const EdgeSequenceData& data) {
    data.validate();
    const std::size_t n = data.ring->size();
    MonomialIdeal acc = MonomialIdeal::unit(data.ring);
    for (const auto& e : data.edges) {
        MonomialIdeal q(data.ring, {Monomial::variable(n, e.i, e.a), Monomial::variable(n, e.j, e.b)});
        acc = intersect(acc, q);
    }
    return acc;
}

SimpleGraph intersection_graph(const EdgeSequenceData& data) {
    data.validate();
    std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
    for (const auto& e : data.edges) {
        for (Exponent p = 1; p <= e.a; ++p) index.emplace(std::pair{e.i, p}, 0);
        for (Exponent q = 1; q <= e.b; ++q) index.emplace(std::pair{e.j, q}, 0);
    }
    std::vector<std::string> labels;
    for (auto& [key, slot] : index) {
        slot = labels.size();
        labels.push_back(copy_name(data.ring->name(key.first), key.second));
    }
    SimpleGraph G(std::move(labels));
    for (const auto& e : data.edges)
        for (Exponent p = 1; p <= e.a; ++p)
            for (Exponent q = 1; q <= e.b; ++q)
                G.add_edge(index.at({e.i, p}), index.at({e.j, q}));
    return G;
}

RecoveryResult recover_data(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero() || height(I) != 2)
        throw DomainError("recovery needs an ideal of height two");
    if (!is_unmixed(I)) throw DomainError("recovery needs an unmixed ideal");
    EdgeSequenceData data{I.ring_ptr(), {}};
    for (const auto& c : standard_primary_decomposition(I).components) {
        const auto& gens = c.primary.generators();
        if (gens.size() != 2 || !gens[0].is_pure_power() || !gens[1].is_pure_power()) {
            return {std::nullopt,
                    RecoveryObstruction{c.radical, c.primary,
                                        "primary component " + to_string(c.primary) +
                                            " is not of the form (x_i^a, x_j^b)"}};
        }
        const std::size_t i = c.radical[0], j = c.radical[1];
        data.edges.push_back({i, j, 0, 0});
        for (const auto& g : gens) {
            if (g[i] > 0) data.edges.back().a = g[i];
            if (g[j] > 0) data.edges.back().b = g[j];
        }
    }
    return {std::move(data), std::nullopt};
}

}  // namespace hbtrace
