#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hbtrace/monomial.hpp"

namespace hbtrace {

/// Monomial ideal stored by its minimal generating set in canonical order.
/// An empty generator list is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
public:
    /// Zero ideal of `ring`.
    explicit MonomialIdeal(RingPtr ring);
    /// Minimalizes `gens`; throws ArityError on length mismatch.
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    static MonomialIdeal unit(RingPtr ring);
    /// The maximal ideal (x1, ..., xn).
    static MonomialIdeal maximal(RingPtr ring);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    std::size_t arity() const noexcept { return ring_->size(); }

    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    /// Minimal number of generators.
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept;
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }
    bool is_squarefree() const;
    bool contains(const Monomial& w) const;
    /// Every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal& other) const;
    /// Variables dividing some generator.
    std::vector<std::size_t> support() const;
    /// Componentwise lcm of all generators (1 for the zero ideal).
    Monomial lcm_of_generators() const;

    bool operator==(const MonomialIdeal& other) const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(std::vector<Monomial> gens, RingPtr ring);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// u * I.
MonomialIdeal scale(const Monomial& u, const MonomialIdeal& I);
/// Generators of I that divide `bound`. Two ideals agree on every monomial
/// below `bound` exactly when their truncations coincide.
std::vector<Monomial> generators_within(const MonomialIdeal& I, const Monomial& bound);

/// Substitutes 1 for every variable outside `subset`. The result stays in the
/// ambient ring of I, with zero exponents outside `subset`.
MonomialIdeal monomial_localization(const MonomialIdeal& I, const std::vector<std::size_t>& subset);

/// Re-expresses I in `target`, matching variables by name. Every variable of the
/// support of I must exist in `target`.
MonomialIdeal embed(const MonomialIdeal& I, const RingPtr& target);

struct Polarization {
    MonomialIdeal ideal;
    /// copy_index[i][j-1] is the index of x_{i,j} in ideal.ring().
    std::vector<std::vector<std::size_t>> copy_index;
};

/// Name of the j-th copy of variable `base`: "x1" -> "x1_j".
std::string copy_name(const std::string& base, std::size_t j);

/// Polarizes I using the largest exponent of each variable among G(I).
Polarization polarize(const MonomialIdeal& I);
/// Polarizes I inside a ring with widths[i] copies of x_i, so that ideals
/// polarized with equal widths share one ring.
Polarization polarize(const MonomialIdeal& I, const std::vector<Exponent>& widths);

/// Alexander dual of a squarefree ideal: intersection of the primes generated
/// by the supports of its generators.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

std::string to_string(const MonomialIdeal& I);

}  // namespace hbtrace
