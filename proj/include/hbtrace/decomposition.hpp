#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hbtrace/ideal.hpp"

namespace hbtrace {

/// Ideal generated by pure powers x_i^{e_i}, with variable indices increasing.
struct IrreducibleComponent {
    RingPtr ring;
    std::vector<std::pair<std::size_t, Exponent>> powers;

    std::vector<std::size_t> radical() const;
    MonomialIdeal to_ideal() const;
    bool operator==(const IrreducibleComponent& other) const;
};

struct PrimaryComponent {
    std::vector<std::size_t> radical;  ///< sorted variable indices
    MonomialIdeal primary;
};

/// Components grouped by radical, radicals in lexicographic order.
struct StandardPrimaryDecomposition {
    std::vector<PrimaryComponent> components;
};

/// Irredundant irreducible decomposition in canonical order (by radical, then exponents).
/// Throws DomainError for the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

StandardPrimaryDecomposition standard_primary_decomposition(const MonomialIdeal& I);

/// Radicals of all irreducible components (the associated primes), deduplicated.
std::vector<std::vector<std::size_t>> associated_primes(const MonomialIdeal& I);
/// Associated primes minimal under inclusion.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& I);

int height(const MonomialIdeal& I);
/// Every associated prime has the same height.
bool is_unmixed(const MonomialIdeal& I);

}  // namespace hbtrace
