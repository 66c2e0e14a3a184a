#include "stci/poly.hpp"

#include "doctest.h"

#include <random>

using namespace stci;

namespace {
const Weights W457{4, 5, 7};
const Weights W5713{5, 7, 13};
} // namespace

TEST_CASE("rational strings round-trip in lowest terms") {
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(-7)) == "-7");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_string(Rat(4, 6)) == "2/3");
    CHECK(rat_from_string("3/2") == Rat(3, 2));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string("-4/6") == Rat(-2, 3));
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
}

TEST_CASE("polynomial arithmetic is exact and drops zero terms") {
    SparsePoly f = poly_monomial(W457, 1, 3, 0, 0) - poly_monomial(W457, 1, 0, 1, 1);
    // (x^3 - y*z)^2 = x^6 - 2 x^3 y z + y^2 z^2
    SparsePoly sq = f * f;
    SparsePoly expect = poly_monomial(W457, 1, 6, 0, 0) -
                        poly_monomial(W457, 2, 3, 1, 1) +
                        poly_monomial(W457, 1, 0, 2, 2);
    CHECK(sq == expect);
    CHECK(poly_pow(f, 2) == sq);
    CHECK((f - f).is_zero());
    CHECK((Rat(0) * f).is_zero());

    SparsePoly g = poly_zero(W457);
    poly_add_term(g, Exps{1, 1, 0, 0}, Rat(2));
    poly_add_term(g, Exps{1, 1, 0, 0}, Rat(-2));
    CHECK(g.is_zero());
}

TEST_CASE("mixing weights is an error") {
    SparsePoly a = poly_monomial(W457, 1, 1, 0, 0);
    SparsePoly b = poly_monomial(W5713, 1, 1, 0, 0);
    CHECK_THROWS_AS(a + b, WeightMismatch);
    CHECK_THROWS_AS(a * b, WeightMismatch);
}

TEST_CASE("poly_pow matches repeated multiplication") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly p = poly_zero(W457);
        for (int t = 0; t < 3; ++t)
            poly_add_term(p, Exps{e(rng), e(rng), e(rng), 0}, Rat(c(rng)));
        SparsePoly by_mul = poly_monomial(W457, 1, 0, 0, 0);
        for (int k = 1; k <= 4; ++k) {
            by_mul = by_mul * p;
            CHECK(poly_pow(p, k) == by_mul);
        }
    }
}

TEST_CASE("weighted order, initial part, homogeneous degree") {
    // x^3 (deg 12) + y*z (deg 12) + x (deg 4)
    SparsePoly p = poly_monomial(W457, 1, 3, 0, 0) +
                   poly_monomial(W457, 1, 0, 1, 1) + poly_monomial(W457, 1, 1, 0, 0);
    CHECK(weighted_order(p) == 4);
    CHECK(initial_part(p) == poly_monomial(W457, 1, 1, 0, 0));
    CHECK_FALSE(homogeneous_degree(p).has_value());

    SparsePoly h = poly_monomial(W457, 1, 3, 0, 0) - poly_monomial(W457, 1, 0, 1, 1);
    REQUIRE(homogeneous_degree(h).has_value());
    CHECK(*homogeneous_degree(h) == 12);
    CHECK(initial_part(h) == h);

    // s lowers the degree by one
    SparsePoly d = poly_monomial(W457, 1, 3, 0, 0, 2);
    CHECK(weighted_order(d) == 10);

    CHECK_THROWS_AS(weighted_order(poly_zero(W457)), ZeroPolynomial);
    CHECK_THROWS_AS(initial_part(poly_zero(W457)), ZeroPolynomial);
    CHECK_FALSE(homogeneous_degree(poly_zero(W457)).has_value());
}

TEST_CASE("canonical rendering: degree descending, reverse-lex ties") {
    // the squared binomial from the weighted grading
    SparsePoly f = poly_monomial(W457, 1, 3, 0, 0) - poly_monomial(W457, 1, 0, 1, 1);
    CHECK(poly_to_string(f * f) == "x^6 - 2*x^3*y*z + y^2*z^2");

    // degree tie (both 14 over <4,5,7>): z^2 renders after x*y^2
    SparsePoly f3 = poly_monomial(W457, 1, 0, 0, 2) - poly_monomial(W457, 1, 1, 2, 0);
    CHECK(poly_to_string(f3) == "-x*y^2 + z^2");

    // all of degree 20 over <4,5,7>
    SparsePoly g = poly_monomial(W457, 1, 5, 0, 0) -
                   poly_monomial(W457, 2, 2, 1, 1) + poly_monomial(W457, 1, 0, 4, 0);
    CHECK(poly_to_string(g) == "x^5 + y^4 - 2*x^2*y*z");

    CHECK(poly_to_string(poly_zero(W457)) == "0");
    CHECK(poly_to_string(poly_monomial(W457, Rat(1, 2), 0, 0, 0)) == "1/2");
    CHECK(poly_to_string(poly_monomial(W457, -1, 2, 0, 0, 3)) == "-x^2*s^3");
}

TEST_CASE("series arithmetic truncates and records the drop") {
    TruncSeries a = series_monomial(10, 1, 4);
    TruncSeries b = series_monomial(10, 1, 7);
    CHECK_FALSE(a.truncated);
    TruncSeries p = series_mul(a, b); // t^11 over trunc 10: dropped
    CHECK(p.is_zero());
    CHECK(p.truncated);

    TruncSeries c = series_add(a, b);
    CHECK(series_valuation(c) == 4);
    CHECK(series_to_string(c) == "t^4 + t^7");

    TruncSeries d = series_sub(c, c);
    CHECK(d.is_zero());
    CHECK_FALSE(d.truncated);
    CHECK_THROWS_AS(series_valuation(d), ValuationOfZero);

    // s exponents print next to t, ascending (e_t, e_s)
    TruncSeries e = series_monomial(30, Rat(-3), 24, 4);
    series_add_term(e, 20, 0, Rat(1, 3));
    CHECK(series_to_string(e) == "1/3*t^20 - 3*s^4*t^24");
}

TEST_CASE("substitution keeps the grading and kills curve equations") {
    // f1 = x^4 - y*z over <5,7,13> vanishes at (t^5, t^7, t^13)
    SparsePoly f1 =
        poly_monomial(W5713, 1, 4, 0, 0) - poly_monomial(W5713, 1, 0, 1, 1);
    long long T = 40;
    TruncSeries X = series_monomial(T, 1, 5);
    TruncSeries Y = series_monomial(T, 1, 7);
    TruncSeries Z = series_monomial(T, 1, 13);
    CHECK(substitute(f1, X, Y, Z, T).is_zero());

    // the deformed second coordinate leaves the exact residual -t^24 s^4
    series_add_term(Y, 11, 4, Rat(1));
    TruncSeries r = substitute(f1, X, Y, Z, T);
    CHECK(series_to_string(r) == "-s^4*t^24");
}
