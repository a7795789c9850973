#pragma once

#include <random>
#include <string>

#include "hbtrace/ideal.hpp"
#include "hbtrace/parse.hpp"

namespace testing_support {

inline hbtrace::MonomialIdeal ideal(const std::string& text, const hbtrace::RingPtr& ring) {
    return hbtrace::parse_ideal(text, ring);
}

inline hbtrace::RingPtr xy() { return hbtrace::make_ring({"x", "y"}); }
inline hbtrace::RingPtr xyz() { return hbtrace::make_ring({"x", "y", "z"}); }

/// Random monomial ideal with up to `mu` generators and exponents in [0, top].
inline hbtrace::MonomialIdeal random_ideal(std::mt19937_64& rng, const hbtrace::RingPtr& ring, std::size_t mu,
                                           hbtrace::Exponent top) {
    std::uniform_int_distribution<hbtrace::Exponent> e(0, top);
    std::vector<hbtrace::Monomial> gens;
    for (std::size_t k = 0; k < mu; ++k) {
        hbtrace::Monomial u(ring->size());
        for (std::size_t i = 0; i < ring->size(); ++i) u[i] = e(rng);
        if (!u.is_one()) gens.push_back(u);
    }
    return hbtrace::MonomialIdeal(ring, gens);
}

}  // namespace testing_support
