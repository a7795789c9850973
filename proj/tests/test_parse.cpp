#include <doctest.h>

#include <random>

#include "hbtrace/errors.hpp"
#include "hbtrace/parse.hpp"
#include "hbtrace/sweep.hpp"
#include "support.hpp"

using namespace hbtrace;

namespace {

ParseError parse_failure(std::string_view text, const RingPtr& ring = nullptr) {
    try {
        parse_ideal(text, ring);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for " << text);
    return ParseError("", 0, 0);
}

ParseError graph_failure(std::string_view text) {
    try {
        parse_graph_spec(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for " << text);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("ideal literals") {
    auto I = parse_ideal("x^3, x^2*y, y^2");
    CHECK(I.ring().names() == std::vector<std::string>{"x", "y"});
    CHECK(to_string(I) == "(y^2, x^3, x^2*y)");
    CHECK(I.size() == 3);

    auto e = parse_ideal("x1*x3, x1*x4, x2*x4");
    CHECK(e.ring().names() == std::vector<std::string>{"x1", "x3", "x4", "x2"});
    CHECK(e == embed(parse_ideal("x1*x3, x1*x4, x2*x4", make_indexed_ring(4)), e.ring_ptr()));

    CHECK(to_string(parse_ideal("x^2, x^2")) == "(x^2)");
    CHECK(parse_ideal("(x^2 ,  x*y)") == parse_ideal("x^2,x*y"));
    CHECK(parse_ideal("x*x*y^2") == parse_ideal("x^2*y^2"));
    CHECK(parse_ideal("x^2, x^3*y").size() == 1);
    CHECK(parse_ideal("0", testing_support::xy()).is_zero());
    CHECK(parse_ideal("(0)", testing_support::xy()).is_zero());
    CHECK(parse_ideal("1", testing_support::xy()).is_unit());
    CHECK(parse_ideal("x^0*y", testing_support::xy()) == parse_ideal("y", testing_support::xy()));
    CHECK(parse_ideal("x_1_2^2*x_2_1").ring().names() == std::vector<std::string>{"x_1_2", "x_2_1"});
}

TEST_CASE("ideal syntax errors carry positions") {
    auto neg = parse_failure("x^-1");
    CHECK(neg.line() == 1);
    CHECK(neg.column() == 3);
    auto trailing = parse_failure("x^2, ");
    CHECK(trailing.line() == 1);
    auto multi = parse_failure("x^2,\n  y^2*");
    CHECK(multi.line() == 2);
    CHECK(multi.column() == 7);
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("2*x"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x + y"), ParseError);
    CHECK_THROWS_AS(parse_ideal("(x, y"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^99999999999"), ParseError);
    auto unknown = parse_failure("x*z", testing_support::xy());
    CHECK(unknown.column() == 3);
}

TEST_CASE("printing and parsing round-trip") {
    std::mt19937_64 rng(8);
    for (auto ring : {testing_support::xy(), testing_support::xyz(), make_indexed_ring(5)}) {
        for (int k = 0; k < 100; ++k) {
            auto I = testing_support::random_ideal(rng, ring, 1 + k % 6, 4);
            if (I.is_zero()) continue;
            CHECK(parse_ideal(to_string(I), ring) == I);
        }
    }
    auto data = EdgeSequenceData{make_indexed_ring(3), {{0, 1, 2, 1}, {1, 2, 1, 1}}};
    auto P = polarize(build_ideal(data)).ideal;
    CHECK(parse_ideal(to_string(P), P.ring_ptr()) == P);
}

TEST_CASE("name lists and exponent vectors") {
    CHECK(parse_name_list("x, y ,z") == std::vector<std::string>{"x", "y", "z"});
    CHECK(parse_name_list("a b") == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(parse_name_list("x, x"), ParseError);
    CHECK_THROWS_AS(parse_name_list("1x"), ParseError);
    CHECK(parse_exponent_vector("2,1", 2) == Monomial(std::vector<Exponent>{2, 1}));
    CHECK_THROWS_AS(parse_exponent_vector("2,1", 3), ParseError);
    CHECK_THROWS_AS(parse_exponent_vector("2,-1", 2), ParseError);
}

TEST_CASE("graph specs") {
    auto path = parse_graph_spec("1 2 1 1\n2 3 1 1");
    CHECK(path.ring->size() == 3);
    CHECK(path.edges == std::vector<WeightedEdge>{{0, 1, 1, 1}, {1, 2, 1, 1}});

    auto single = parse_graph_spec("1 2 2 1");
    CHECK(single.edges == std::vector<WeightedEdge>{{0, 1, 2, 1}});

    auto flipped = parse_graph_spec("# comment\n3 1 4 2 ; 2 3 1 1\n");
    CHECK(flipped.edges == std::vector<WeightedEdge>{{0, 2, 2, 4}, {1, 2, 1, 1}});

    auto dup = graph_failure("1 2 1 1\n1 2 2 2");
    CHECK(dup.line() == 2);
    CHECK(dup.column() == 1);
    auto reversed = graph_failure("1 2 1 1\n2 1 1 1");
    CHECK(reversed.line() == 2);
    auto zero = graph_failure("1 2 0 1");
    CHECK(zero.column() == 5);
    CHECK_THROWS_AS(parse_graph_spec("1 1 1 1"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("1 2 1"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("0 2 1 1"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("1 2 -1 1"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec(""), ParseError);
}
