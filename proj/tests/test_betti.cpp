#include <doctest.h>

#include <random>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"
#include "hbtrace/sweep.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace hbtrace;
using testing_support::ideal;

TEST_CASE("lcm lattice") {
    auto R = testing_support::xy();
    auto L = lcm_lattice_degrees(ideal("x^2, x*y, y^2", R));
    std::vector<std::string> names;
    for (const auto& d : L) names.push_back(to_string(d, *R));
    CHECK(names == std::vector<std::string>{"x^2", "x*y", "y^2", "x^2*y", "x*y^2", "x^2*y^2"});
    CHECK(lcm_lattice_degrees(ideal("x^3*y", R)).size() == 1);
    CHECK(lcm_lattice_degrees(ideal("x, y", R)).size() == 3);
}

TEST_CASE("Betti numbers") {
    auto R = testing_support::xy();
    auto t = betti_numbers(ideal("x^2, x*y, y^2", R));
    CHECK(t.quotient_total(0) == 1);
    CHECK(t.quotient_total(1) == 3);
    CHECK(t.quotient_total(2) == 2);
    CHECK(t.at(1, Monomial{2, 1}) == 1);
    CHECK(t.at(1, Monomial{1, 2}) == 1);
    CHECK(t.at(1, Monomial{2, 2}) == 0);
    auto ci = betti_numbers(ideal("x, y", R));
    CHECK(ci.quotient_total(1) == 2);
    CHECK(ci.quotient_total(2) == 1);
    CHECK(betti_numbers(ideal("x^4, y^7", R)).quotient_total(2) == 1);
}

TEST_CASE("projective dimension, Cohen-Macaulayness and type") {
    auto R = testing_support::xy();
    auto R3 = make_indexed_ring(3);
    CHECK(projective_dimension(ideal("x^2, x*y, y^2", R)) == 2);
    CHECK(projective_dimension(ideal("x^3*y^2", R)) == 1);
    CHECK(projective_dimension(ideal("x2, x1*x3", R3)) == 2);
    CHECK(cm_type(ideal("x^2, x*y, y^2", R)) == 2);
    CHECK(cm_type(ideal("x^3, y^5", R)) == 1);
    CHECK(cm_type(ideal("x^3, x^2*y, y^2", R)) == 2);
    CHECK(is_cohen_macaulay_h2(ideal("x^3, x^2*y, y^2", R)));
    CHECK(is_cohen_macaulay_h2(ideal("x^3, x*y, y^3", R)));
    CHECK_THROWS_AS(is_cohen_macaulay_h2(ideal("x^3, x^2*y", R)), DomainError);
    auto R4 = make_indexed_ring(4);
    CHECK(cm_type(ideal("x1*x2, x3*x4", R4)) == 1);
    const auto two_planes = ideal("x1*x3, x1*x4, x2*x3, x2*x4", R4);
    CHECK_FALSE(is_cohen_macaulay(two_planes));
    CHECK_THROWS_AS(cm_type(two_planes), DomainError);
    CHECK_THROWS_AS(projective_dimension(MonomialIdeal(R)), DomainError);
}

TEST_CASE("Betti numbers agree with the Taylor-complex oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        auto R = make_indexed_ring(2 + trial % 3);
        auto I = testing_support::random_ideal(rng, R, 5, 3);
        if (!I.is_proper_nonzero()) continue;
        const auto table = betti_numbers(I);
        const auto expected = oracle::taylor_betti(I);
        std::size_t nonzero = 0;
        for (const auto& [key, value] : table.entries()) {
            ++nonzero;
            auto it = expected.find(key);
            REQUIRE(it != expected.end());
            CHECK(it->second == value);
        }
        CHECK(nonzero == expected.size());
    }
}

TEST_CASE("alternating sum of Betti numbers vanishes and beta_1 = mu - 1 for CM height two") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        auto R = make_indexed_ring(2 + trial % 3);
        auto I = testing_support::random_ideal(rng, R, 5, 3);
        if (!I.is_proper_nonzero()) continue;
        const auto t = betti_numbers(I);
        long alt = 0;
        for (int i = 0; i <= t.top_ideal_index() + 1; ++i)
            alt += (i % 2 ? -1L : 1L) * static_cast<long>(t.quotient_total(i));
        CHECK(alt == 0);
        if (height(I) == 2 && is_cohen_macaulay_h2(I)) CHECK(t.ideal_total(1) == I.size() - 1);
    }
}

TEST_CASE("Cohen-Macaulay test agrees with the staircase and cochordal criteria") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        auto I = random_xy_ideal(rng, 2 + trial % 5, 6);
        const auto st = staircase_generators(I);
        const bool pure_powers = st.front()[1] == 0 && st.back()[0] == 0;
        CHECK(is_cohen_macaulay(I) == (pure_powers || I.size() == 1));
        if (height(I) == 2) CHECK(is_cohen_macaulay_h2(I) == pure_powers);
    }
    Rng grng(16);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_edge_data(grng, 2 + trial % 5, 5, 3);
        CHECK(is_cohen_macaulay(build_ideal(d)) == is_cochordal(intersection_graph(d)));
    }
}

TEST_CASE("parallel and serial Betti computations agree") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        auto R = make_indexed_ring(3);
        auto I = testing_support::random_ideal(rng, R, 6, 3);
        if (!I.is_proper_nonzero()) continue;
        CHECK(betti_numbers(I) == betti_numbers_serial(I));
    }
}

TEST_CASE("resource cap on the lcm lattice") {
    auto R = make_indexed_ring(2);
    std::vector<Monomial> gens;
    for (Exponent k = 0; k <= 21; ++k) gens.push_back(Monomial{k, 21 - k});
    CHECK_THROWS_AS(lcm_lattice_degrees(MonomialIdeal(R, gens)), ResourceError);
}
