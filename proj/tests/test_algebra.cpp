#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frobsing/errors.hpp"
#include "frobsing/parse.hpp"
#include "frobsing/polynomial.hpp"
#include "frobsing/rational.hpp"
#include "oracles.hpp"

using namespace frobsing;

namespace {

Polynomial P(const char* text, const RingPtr& ring) { return parse_polynomial(text, ring); }

}  // namespace

TEST_CASE("prime field arithmetic and primality") {
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(15), Error);
    CHECK_THROWS_AS(PrimeField(1u << 31), Error);
    PrimeField f7(7);
    CHECK(f7.add(5, 4) == 2);
    CHECK(f7.sub(2, 5) == 4);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.neg(3) == 4);
    CHECK(f7.reduce(-3) == 4);
    for (std::uint32_t a = 1; a < 7; ++a) {
        CHECK(f7.mul(a, f7.inv(a)) == 1);
        CHECK(f7.pow(a, 6) == 1);  // Fermat
    }
    // Large prime near the cap still works.
    PrimeField big(2147483647u);
    CHECK(big.mul(big.p() - 1, big.p() - 1) == 1);
}

TEST_CASE("rational exactness") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(5, 6).str() == "5/6");
    CHECK(Rational(-1).str() == "-1/1");
    CHECK(floor_scaled(Rational(5, 6), 24) == 20);
    CHECK(floor_scaled(Rational(5, 6), 4) == 3);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("polynomial parsing") {
    auto ring7 = make_ring(7, {"x", "y"});
    Polynomial f = P("x^2 - y^3", ring7);
    REQUIRE(f.term_count() == 2);
    // terms {(2,0) -> 1, (0,3) -> 6}
    CHECK(f == Polynomial::from_terms(ring7, {{Monomial({2, 0}), 1}, {Monomial({0, 3}), 6}}));

    auto ring2 = make_ring(2, {"x", "y"});
    CHECK(P("(x+y)^2", ring2) == P("x^2 + y^2", ring2));

    auto ring5 = make_ring(5, {"x", "y", "z"});
    Polynomial g = P("x*y - z^2", ring5);
    CHECK(g == Polynomial::from_terms(ring5,
                                      {{Monomial({1, 1, 0}), 1}, {Monomial({0, 0, 2}), 4}}));

    // Coefficients reduce mod p; unary minus only at the head.
    CHECK(P("10*x", ring5) == Polynomial::zero(ring5));
    CHECK(P("-x + x", ring5).is_zero());
    CHECK(P(" ( x + y ) * ( x + y ) ", ring7) == P("x^2+2*x*y+y^2", ring7));
}

TEST_CASE("parse errors carry positions") {
    auto ring = make_ring(7, {"x", "y"});
    CHECK_THROWS_AS(P("x +", ring), ParseError);
    CHECK_THROWS_AS(P("x^", ring), ParseError);
    CHECK_THROWS_AS(P("(x+y", ring), ParseError);
    CHECK_THROWS_AS(P("x*)", ring), ParseError);
    CHECK_THROWS_AS(P("x - -y", ring), ParseError);
    try {
        P("x + q", ring);
        FAIL("expected unknown-variable error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_polynomial("x", {"x"}, 6), Error);  // p not prime
}

TEST_CASE("canonical print/parse round trip") {
    std::mt19937 rng(20240817);
    for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
        auto ring = make_ring(p, {"x", "y", "z"});
        for (int i = 0; i < 60; ++i) {
            Polynomial f = oracles::random_poly(ring, rng, 6, 5);
            CAPTURE(f.str());
            CHECK(P(f.str().c_str(), ring) == f);
        }
    }
}

TEST_CASE("frobenius power examples") {
    auto ring5 = make_ring(5, {"x", "y", "z"});
    CHECK(frobenius_power(P("x+y", ring5), 5) == P("x^5+y^5", ring5));
    CHECK(frobenius_power(P("x*y-z^2", ring5), 5) == P("x^5*y^5-z^10", ring5));
    auto ring3 = make_ring(3, {"x"});
    CHECK(frobenius_power(P("2*x", ring3), 3) == P("2*x^3", ring3));
    CHECK_THROWS_AS(frobenius_power(P("x", ring5), 6), Error);
}

TEST_CASE("frobenius power is additive and multiplicative") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ring = make_ring(p, {"x", "y"});
        for (int i = 0; i < 40; ++i) {
            Polynomial f = oracles::random_poly(ring, rng, 4, 3);
            Polynomial g = oracles::random_poly(ring, rng, 4, 3);
            for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
                CHECK(frobenius_power(f * g, q) ==
                      frobenius_power(f, q) * frobenius_power(g, q));
                CHECK(frobenius_power(f + g, q) ==
                      frobenius_power(f, q) + frobenius_power(g, q));
            }
        }
    }
}

TEST_CASE("partial derivatives") {
    auto ring7 = make_ring(7, {"x", "y"});
    CHECK(partial_derivative(P("x^2-y^3", ring7), 1) == P("4*y^2", ring7));
    auto ring3 = make_ring(3, {"x", "y"});
    CHECK(partial_derivative(P("y^3", ring3), 1).is_zero());
    auto ring5 = make_ring(5, {"x", "y"});
    CHECK(partial_derivative(P("x^4+y^4", ring5), 0) == P("4*x^3", ring5));
}

TEST_CASE("initial form") {
    auto ring7 = make_ring(7, {"x", "y"});
    InitialForm c = initial_form(P("x^2-y^3", ring7));
    CHECK(c.degree == 2);
    CHECK(c.form == P("x^2", ring7));

    auto ring5 = make_ring(5, {"x", "y", "z", "w"});
    InitialForm f = initial_form(P("x^4+y^4+z^4+w^4", ring5));
    CHECK(f.degree == 4);
    CHECK(f.form == P("x^4+y^4+z^4+w^4", ring5));

    auto ring3 = make_ring(3, {"x", "y", "z"});
    InitialForm q = initial_form(P("x*y-z^2", ring3));
    CHECK(q.degree == 2);
    CHECK(q.form == P("x*y-z^2", ring3));

    CHECK_THROWS_AS(initial_form(Polynomial::zero(ring3)), Error);
}

TEST_CASE("pow_mod_bracket worked examples") {
    auto ring5 = make_ring(5, {"x", "y"});
    Polynomial f = P("x^2-y^3", ring5);
    CHECK(pow_mod_bracket(f, 3, 5) == P("2*x^4*y^3", ring5));
    CHECK(pow_mod_bracket(P("x", ring5), 4, 5) == P("x^4", ring5));
    CHECK(pow_mod_bracket(f, 0, 5) == Polynomial::constant(ring5, 1));
}

TEST_CASE("pow_mod_bracket agrees with the expand-then-filter oracle") {
    std::mt19937 rng(99);
    int checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ring = make_ring(p, {"x", "y"});
        for (int i = 0; i < 25; ++i) {
            Polynomial f = oracles::random_poly(ring, rng, 3, 3);
            for (std::uint64_t k : {0ull, 1ull, 2ull, 5ull, 12ull}) {
                for (int e = 1; e <= 2; ++e) {
                    std::uint64_t q = checked_p_power(p, e);
                    CHECK(pow_mod_bracket(f, k, q) == oracles::pow_then_filter(f, k, q));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("mul_bracket discards high terms") {
    auto ring5 = make_ring(5, {"x", "y"});
    Polynomial a = P("x^3+y^3", ring5), b = P("x^2+y^2", ring5);
    // x^5 and y^5 die, cross terms survive.
    CHECK(mul_bracket(a, b, 5) == P("x^3*y^2 + x^2*y^3", ring5));
}

TEST_CASE("exponent overflow is a sizing error") {
    auto ring = make_ring(5, {"x"});
    Monomial big({2147483647u});
    Polynomial f = Polynomial::monomial(ring, big, 1);
    CHECK_THROWS_AS(f * f, SizingError);
    CHECK_THROWS_AS(Monomial({2147483647u}) * Monomial({1u}), SizingError);
}

TEST_CASE("divide_exact") {
    auto ring7 = make_ring(7, {"x", "y"});
    Polynomial f = P("x^2-y^3", ring7);
    Polynomial g = P("x+y", ring7);
    auto quot = divide_exact(f * g, g);
    REQUIRE(quot.has_value());
    CHECK(*quot == f);
    CHECK(!divide_exact(P("x^2+1", ring7), P("x+y", ring7)).has_value());
    auto fifth = divide_exact(frobenius_power(f, 7), f);
    REQUIRE(fifth.has_value());
    CHECK(*fifth == f.pow(6));
}
