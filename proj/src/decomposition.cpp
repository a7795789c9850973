#include "hbtrace/decomposition.hpp"

#include <algorithm>
#include <map>

#include "hbtrace/errors.hpp"

namespace hbtrace {

std::vector<std::size_t> IrreducibleComponent::radical() const {
    std::vector<std::size_t> r;
    for (const auto& [i, e] : powers) r.push_back(i);
    return r;
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
    std::vector<Monomial> gens;
    for (const auto& [i, e] : powers) gens.push_back(Monomial::variable(ring->size(), i, e));
    return MonomialIdeal(ring, std::move(gens));
}

bool IrreducibleComponent::operator==(const IrreducibleComponent& other) const {
    return same_ring(ring, other.ring) && powers == other.powers;
}

namespace {

using Powers = std::vector<std::pair<std::size_t, Exponent>>;

// Splits on the first generator that is not a pure power:
// (J, x_i^e * w) = (J, x_i^e) ∩ (J, w) when x_i does not divide w.
void split(const MonomialIdeal& I, std::vector<Powers>& out) {
    const auto& gens = I.generators();
    auto it = std::find_if(gens.begin(), gens.end(),
                           [](const Monomial& g) { return !g.is_pure_power(); });
    if (it == gens.end()) {
        Powers p;
        for (const auto& g : gens) {
            auto s = g.support();
            p.emplace_back(s.front(), g[s.front()]);
        }
        std::sort(p.begin(), p.end());
        out.push_back(std::move(p));
        return;
    }
    const Monomial& g = *it;
    const std::size_t i = g.support().front();
    Monomial power = Monomial::variable(g.arity(), i, g[i]);
    Monomial rest = g;
    rest[i] = 0;
    for (Monomial piece : {power, rest}) {
        std::vector<Monomial> next;
        for (const auto& h : gens)
            if (&h != &g) next.push_back(h);
        next.push_back(std::move(piece));
        split(MonomialIdeal(I.ring_ptr(), std::move(next)), out);
    }
}

// a ⊆ b for ideals generated by pure powers.
bool powers_subset(const Powers& a, const Powers& b) {
    for (const auto& [i, e] : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const auto& p) { return p.first == i; });
        if (it == b.end() || it->second > e) return false;
    }
    return true;
}

void require_proper_nonzero(const MonomialIdeal& I) {
    if (I.is_zero()) throw DomainError("operation undefined for the zero ideal");
    if (I.is_unit()) throw DomainError("operation undefined for the unit ideal");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    require_proper_nonzero(I);
    std::vector<Powers> raw;
    split(I, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // Irreducible monomial ideals are strongly irreducible, so keeping the
    // inclusion-minimal components yields the irredundant decomposition.
    std::vector<Powers> kept;
    for (std::size_t a = 0; a < raw.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < raw.size() && !redundant; ++b)
            redundant = b != a && powers_subset(raw[b], raw[a]);
        if (!redundant) kept.push_back(raw[a]);
    }
    std::sort(kept.begin(), kept.end(), [](const Powers& x, const Powers& y) {
        std::vector<std::size_t> rx, ry;
        for (const auto& p : x) rx.push_back(p.first);
        for (const auto& p : y) ry.push_back(p.first);
        if (rx != ry) return rx < ry;
        return x < y;
    });
    std::vector<IrreducibleComponent> out;
    for (auto& p : kept) out.push_back({I.ring_ptr(), std::move(p)});
    return out;
}

StandardPrimaryDecomposition standard_primary_decomposition(const MonomialIdeal& I) {
    std::map<std::vector<std::size_t>, MonomialIdeal> groups;
    for (const auto& c : irreducible_decomposition(I)) {
        auto r = c.radical();
        auto it = groups.find(r);
        if (it == groups.end())
            groups.emplace(std::move(r), c.to_ideal());
        else
            it->second = intersect(it->second, c.to_ideal());
    }
    StandardPrimaryDecomposition out;
    for (auto& [r, q] : groups) out.components.push_back({r, std::move(q)});
    return out;
}

std::vector<std::vector<std::size_t>> associated_primes(const MonomialIdeal& I) {
    std::vector<std::vector<std::size_t>> primes;
    for (const auto& c : irreducible_decomposition(I)) primes.push_back(c.radical());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& I) {
    auto primes = associated_primes(I);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : primes) {
        bool minimal = std::none_of(primes.begin(), primes.end(), [&](const auto& q) {
            return q != p && std::includes(p.begin(), p.end(), q.begin(), q.end());
        });
        if (minimal) out.push_back(p);
    }
    return out;
}

int height(const MonomialIdeal& I) {
    std::size_t h = I.arity() + 1;
    for (const auto& p : minimal_primes(I)) h = std::min(h, p.size());
    return static_cast<int>(h);
}

bool is_unmixed(const MonomialIdeal& I) {
    auto primes = associated_primes(I);
    return std::all_of(primes.begin(), primes.end(),
                       [&](const auto& p) { return p.size() == primes.front().size(); });
}

}  // namespace hbtrace
