#include "hbtrace/betti.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <set>

#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"
#include "hbtrace/linalg.hpp"

namespace hbtrace {

void BettiTable::add(int index, const Monomial& degree, std::size_t value) {
    if (value == 0) return;
    entries_[{index, degree}] += value;
}

std::size_t BettiTable::at(int index, const Monomial& degree) const {
    auto it = entries_.find({index, degree});
    return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::ideal_total(int index) const {
    std::size_t s = 0;
    for (const auto& [key, v] : entries_)
        if (key.first == index) s += v;
    return s;
}

std::size_t BettiTable::quotient_total(int index) const {
    if (index == 0) return 1;
    return ideal_total(index - 1);
}

int BettiTable::top_ideal_index() const {
    int top = -1;
    for (const auto& [key, v] : entries_) top = std::max(top, key.first);
    return top;
}

std::vector<Monomial> lcm_lattice_degrees(const MonomialIdeal& I) {
    if (I.size() > kMaxLatticeGenerators)
        throw ResourceError("lcm lattice enumeration capped at " +
                            std::to_string(kMaxLatticeGenerators) + " generators");
    // Closure under pairwise lcm with each new generator equals the set of
    // lcms of nonempty subsets.
    std::set<Monomial, CanonicalLess> lattice;
    for (const auto& g : I.generators()) {
        std::vector<Monomial> fresh{g};
        for (const auto& s : lattice) fresh.push_back(lcm(s, g));
        lattice.insert(fresh.begin(), fresh.end());
    }
    return {lattice.begin(), lattice.end()};
}

std::vector<std::size_t> upper_koszul_homology(const MonomialIdeal& I, const Monomial& a) {
    const auto supp = a.support();
    const std::size_t s = supp.size();
    if (s > kMaxKoszulSupport) throw ResourceError("Koszul complex support too large");

    // Faces as bitmasks over supp, grouped by cardinality (dimension + 1).
    std::vector<std::vector<std::uint32_t>> faces(s + 1);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        Monomial w = a;
        for (std::size_t k = 0; k < s; ++k)
            if (mask & (1u << k)) w[supp[k]] -= 1;
        if (I.contains(w)) faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }

    // boundary_rank[c]: rank of the map from faces of size c to faces of size c-1.
    std::vector<std::size_t> boundary_rank(s + 2, 0);
    for (std::size_t c = 1; c <= s; ++c) {
        if (faces[c].empty() || faces[c - 1].empty()) continue;
        IntMatrix d(faces[c - 1].size(), faces[c].size());
        for (std::size_t col = 0; col < faces[c].size(); ++col) {
            const std::uint32_t F = faces[c][col];
            int sign = 1;
            for (std::size_t k = 0; k < s; ++k) {
                if (!(F & (1u << k))) continue;
                const std::uint32_t G = F & ~(1u << k);
                auto it = std::lower_bound(faces[c - 1].begin(), faces[c - 1].end(), G);
                if (it != faces[c - 1].end() && *it == G)
                    d(static_cast<std::size_t>(it - faces[c - 1].begin()), col) = sign;
                sign = -sign;
            }
        }
        boundary_rank[c] = rank(std::move(d));
    }

    // H~_{c-1} = |faces of size c| - rank d_c - rank d_{c+1}.
    std::vector<std::size_t> homology(s + 1, 0);
    for (std::size_t c = 0; c <= s; ++c)
        homology[c] = faces[c].size() - boundary_rank[c] - boundary_rank[c + 1];
    return homology;
}

namespace {

void require_nonzero(const MonomialIdeal& I) {
    if (I.is_zero()) throw DomainError("Betti numbers of the zero ideal are empty");
}

void record(BettiTable& table, const Monomial& a, const std::vector<std::size_t>& homology) {
    for (std::size_t c = 0; c < homology.size(); ++c)
        table.add(static_cast<int>(c), a, homology[c]);
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& I) {
    require_nonzero(I);
    const auto degrees = lcm_lattice_degrees(I);
    std::vector<std::vector<std::size_t>> results(degrees.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(degrees.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            results[static_cast<std::size_t>(k)] =
                upper_koszul_homology(I, degrees[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    BettiTable table;
    for (std::size_t k = 0; k < degrees.size(); ++k) record(table, degrees[k], results[k]);
    return table;
}

BettiTable betti_numbers_serial(const MonomialIdeal& I) {
    require_nonzero(I);
    BettiTable table;
    for (const auto& a : lcm_lattice_degrees(I)) record(table, a, upper_koszul_homology(I, a));
    return table;
}

int projective_dimension(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("projective dimension needs a proper nonzero ideal");
    return betti_numbers(I).top_ideal_index() + 1;
}

bool is_cohen_macaulay(const MonomialIdeal& I) {
    return projective_dimension(I) == height(I);
}

bool is_cohen_macaulay_h2(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("Cohen-Macaulay test needs a proper nonzero ideal");
    const int h = height(I);
    if (h != 2) throw DomainError("ideal has height " + std::to_string(h) + ", expected 2");
    return projective_dimension(I) == 2;
}

std::size_t cm_type(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("Cohen-Macaulay type needs a proper nonzero ideal");
    const auto table = betti_numbers(I);
    const int p = table.top_ideal_index() + 1;
    if (p != height(I)) throw DomainError("S/I is not Cohen-Macaulay");
    return table.quotient_total(p);
}

}  // namespace hbtrace
