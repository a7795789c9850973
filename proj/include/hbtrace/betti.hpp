#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hbtrace/ideal.hpp"

namespace hbtrace {

inline constexpr std::size_t kMaxLatticeGenerators = 20;
inline constexpr std::size_t kMaxKoszulSupport = 14;

/// Multigraded Betti numbers of a monomial ideal I, indexed homologically for I:
/// index 0 counts minimal generators. Betti numbers of S/I are shifted by one.
class BettiTable {
public:
    using Key = std::pair<int, Monomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first != b.first) return a.first < b.first;
            return canonical_compare(a.second, b.second) < 0;
        }
    };

    void add(int index, const Monomial& degree, std::size_t value);

    const std::map<Key, std::size_t, KeyLess>& entries() const noexcept { return entries_; }
    std::size_t at(int index, const Monomial& degree) const;
    /// beta_i(I) summed over degrees.
    std::size_t ideal_total(int index) const;
    /// beta_i(S/I); beta_0(S/I) = 1.
    std::size_t quotient_total(int index) const;
    /// Largest i with beta_i(I) != 0, or -1 for the zero table.
    int top_ideal_index() const;

    bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

private:
    std::map<Key, std::size_t, KeyLess> entries_;
};

/// lcms of all nonempty subsets of G(I). ResourceError when mu(I) exceeds 20.
std::vector<Monomial> lcm_lattice_degrees(const MonomialIdeal& I);

/// Reduced rational homology dimensions of the upper Koszul complex
/// K^a(I) = { squarefree F <= supp(a) : x^(a - F) in I }, indexed from -1.
std::vector<std::size_t> upper_koszul_homology(const MonomialIdeal& I, const Monomial& a);

/// beta_{i,a}(I) = dim H~_{i-1}(K^a(I); Q), degrees processed in parallel.
BettiTable betti_numbers(const MonomialIdeal& I);
/// Single-threaded reference for betti_numbers.
BettiTable betti_numbers_serial(const MonomialIdeal& I);

/// pd(S/I). DomainError for the zero or unit ideal.
int projective_dimension(const MonomialIdeal& I);
/// pd(S/I) == height(I).
bool is_cohen_macaulay(const MonomialIdeal& I);
/// Cohen-Macaulay test for height-two ideals; DomainError for other heights.
bool is_cohen_macaulay_h2(const MonomialIdeal& I);
/// Last Betti number of S/I. DomainError when S/I is not Cohen-Macaulay.
std::size_t cm_type(const MonomialIdeal& I);

}  // namespace hbtrace
