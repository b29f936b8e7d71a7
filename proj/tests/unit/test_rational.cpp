#include "branchdec/errors.hpp"
#include "branchdec/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace branchdec;

TEST_CASE("rationals parse to canonical form and format back", "[rational]") {
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational(" -2/4 ")) == "-1/2");
    CHECK(format_rational(parse_rational("+7")) == "7");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("123456789012345678901234567890/2")) == "61728394506172839450617283945");
}

TEST_CASE("malformed rationals are rejected", "[rational]") {
    for (const char* bad : {"", "1/", "/2", "1/0", "1/-2", "a", "1.5", "--1", "1 2"})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("inner products", "[rational]") {
    CHECK(inner_product(RationalVector::from_ints({1, 0}), RationalVector::from_ints({0, 1})) == 0);
    CHECK(inner_product(RationalVector::from_ints({2, 0}), RationalVector::from_ints({2, 0})) == 4);
    CHECK(inner_product(RationalVector{Rational(1, 2), Rational(1, 3)}, RationalVector::from_ints({2, 3})) == 2);
    CHECK_THROWS_AS(inner_product(RationalVector(2), RationalVector(3)), DimensionMismatch);
}

TEST_CASE("vector parsing, formatting and arithmetic", "[rational]") {
    const auto v = parse_vector("1/2,0,-3");
    CHECK(v.to_string() == "(1/2,0,-3)");
    CHECK((v + v).to_string() == "(1,0,-6)");
    CHECK((-v).to_string() == "(-1/2,0,3)");
    CHECK((Rational(2, 3) * v).to_string() == "(1/3,0,-2)");
    CHECK(v.lex_sign() == 1);
    CHECK((-v).lex_sign() == -1);
    CHECK(RationalVector(3).lex_sign() == 0);
    CHECK_THROWS_AS(parse_vector("1,,2"), ParseError);
    CHECK_THROWS_AS(v + RationalVector(2), DimensionMismatch);
}

TEST_CASE("primitive integer representatives", "[rational]") {
    CHECK(primitive_integer(parse_vector("1/2,-1/3")).to_string() == "(3,-2)");
    CHECK(primitive_integer(RationalVector::from_ints({4, -6, 0})).to_string() == "(2,-3,0)");
    CHECK(primitive_integer(RationalVector(2)).is_zero());
}

TEST_CASE("exact linear algebra", "[rational]") {
    const std::vector<RationalVector> vs{RationalVector::from_ints({1, 1, 0}), RationalVector::from_ints({0, 1, 1}),
                                         RationalVector::from_ints({1, 2, 1})};
    CHECK(rank(vs) == 2);

    const auto perp = orthogonal_complement(vs, 3);
    REQUIRE(perp.size() == 1);
    for (const auto& v : vs) CHECK(inner_product(v, perp[0]) == 0);

    const auto x = solve_combination(std::vector<RationalVector>{vs[0], vs[1]}, RationalVector::from_ints({2, 3, 1}));
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_combination(std::vector<RationalVector>{vs[0], vs[1]}, RationalVector::from_ints({1, 0, 0})));

    const std::vector<RationalVector> line{RationalVector::from_ints({1, -1})};
    CHECK(project_onto(RationalVector::from_ints({1, 0}), line).to_string() == "(1/2,-1/2)");

    const RationalMatrix swap{{0, 1}, {1, 0}};
    CHECK(branchdec::apply(swap, RationalVector::from_ints({3, 5})).to_string() == "(5,3)");
}
