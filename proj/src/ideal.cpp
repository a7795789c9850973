#include "hbtrace/ideal.hpp"

#include <algorithm>

#include "hbtrace/errors.hpp"

namespace hbtrace {

namespace {

void check_arity(const Ring& ring, const Monomial& m) {
    if (m.arity() != ring.size())
        throw ArityError("monomial has " + std::to_string(m.arity()) +
                         " exponents, ring has " + std::to_string(ring.size()) + " variables");
}

}  // namespace

MonomialIdeal minimalize(std::vector<Monomial> gens, RingPtr ring) {
    return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw DomainError("null ring");
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    if (!ring_) throw DomainError("null ring");
    for (const auto& g : gens) check_arity(*ring_, g);
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // A divisor has degree <= its multiple, so it is seen first.
    for (auto& g : gens) {
        bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                     [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) gens_.push_back(std::move(g));
    }
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
    const std::size_t n = ring->size();
    return MonomialIdeal(std::move(ring), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::maximal(RingPtr ring) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < ring->size(); ++i)
        gens.push_back(Monomial::variable(ring->size(), i));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& w) const {
    check_arity(*ring_, w);
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(w); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

std::vector<std::size_t> MonomialIdeal::support() const {
    return lcm_of_generators().support();
}

Monomial MonomialIdeal::lcm_of_generators() const {
    Monomial acc(arity());
    for (const auto& g : gens_) acc = lcm(acc, g);
    return acc;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
    check_arity(I.ring(), u);
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto& v : I.generators()) gens.push_back(colon(v, u));
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring_ptr(), J.ring_ptr());
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& u : I.generators())
        for (const auto& v : J.generators()) gens.push_back(lcm(u, v));
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring_ptr(), J.ring_ptr());
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

MonomialIdeal scale(const Monomial& u, const MonomialIdeal& I) {
    check_arity(I.ring(), u);
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) gens.push_back(u * g);
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

std::vector<Monomial> generators_within(const MonomialIdeal& I, const Monomial& bound) {
    check_arity(I.ring(), bound);
    std::vector<Monomial> out;
    for (const auto& g : I.generators())
        if (within(g, bound)) out.push_back(g);
    return out;
}

MonomialIdeal monomial_localization(const MonomialIdeal& I, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw DomainError("localization needs a nonempty set of variables");
    std::vector<bool> keep(I.arity(), false);
    for (auto i : subset) {
        if (i >= I.arity()) throw ArityError("variable index out of range");
        keep[i] = true;
    }
    std::vector<Monomial> gens;
    for (auto g : I.generators()) {
        for (std::size_t i = 0; i < g.arity(); ++i)
            if (!keep[i]) g[i] = 0;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& I, const RingPtr& target) {
    std::vector<std::size_t> where(I.arity(), target->size());
    for (std::size_t i = 0; i < I.arity(); ++i) where[i] = target->index_of(I.ring().name(i));
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < g.arity(); ++i) {
            if (g[i] == 0) continue;
            if (where[i] == target->size())
                throw ArityError("variable '" + I.ring().name(i) + "' missing from target ring");
            m[where[i]] = g[i];
        }
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(target, std::move(gens));
}

std::string copy_name(const std::string& base, std::size_t j) {
    return base + "_" + std::to_string(j);
}

Polarization polarize(const MonomialIdeal& I) {
    const Monomial top = I.lcm_of_generators();
    std::vector<Exponent> widths(top.exponents().begin(), top.exponents().end());
    return polarize(I, widths);
}

Polarization polarize(const MonomialIdeal& I, const std::vector<Exponent>& widths) {
    if (I.is_zero()) throw DomainError("cannot polarize the zero ideal");
    if (widths.size() != I.arity()) throw ArityError("width vector does not match ring");
    const Monomial top = I.lcm_of_generators();
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> copy_index(I.arity());
    for (std::size_t i = 0; i < I.arity(); ++i) {
        if (widths[i] < top[i]) throw DomainError("polarization width below a generator exponent");
        for (Exponent j = 1; j <= widths[i]; ++j) {
            copy_index[i].push_back(names.size());
            names.push_back(copy_name(I.ring().name(i), j));
        }
    }
    // The unit ideal polarizes to the unit ideal; give it a ring to live in.
    if (names.empty()) names.push_back(copy_name(I.ring().name(0), 1));
    auto ring = make_ring(std::move(names));
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        Monomial p(ring->size());
        for (std::size_t i = 0; i < g.arity(); ++i)
            for (Exponent j = 0; j < g[i]; ++j) p[copy_index[i][j]] = 1;
        gens.push_back(std::move(p));
    }
    return {MonomialIdeal(ring, std::move(gens)), std::move(copy_index)};
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("Alexander dual needs a proper nonzero ideal");
    if (!I.is_squarefree()) throw DomainError("Alexander dual needs a squarefree ideal");
    MonomialIdeal acc = MonomialIdeal::unit(I.ring_ptr());
    for (const auto& g : I.generators()) {
        std::vector<Monomial> prime;
        for (auto i : g.support()) prime.push_back(Monomial::variable(I.arity(), i));
        acc = intersect(acc, MonomialIdeal(I.ring_ptr(), std::move(prime)));
    }
    return acc;
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) out += ", ";
        out += to_string(I.generators()[k], I.ring());
    }
    return out + ")";
}

}  // namespace hbtrace
