#include <catch2/catch_amalgamated.hpp>

#include <nrs/mpoly.hpp>
#include <nrs/polyring.hpp>

using namespace nrs;

TEST_CASE("elementary symbols and basis polynomials") {
    auto syms = esyms(4);
    REQUIRE(syms->size() == 4);
    CHECK(e_poly(4, 0) == MPoly(syms, 1));
    CHECK(e_poly(4, 5).is_zero());
    CHECK(e_poly(4, -1).is_zero());
    // e_2 * e_2 has the single exponent vector (0,2,0,0).
    MPoly sq = e_poly(4, 2) * e_poly(4, 2);
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first == Exponents{0, 2, 0, 0});
}

TEST_CASE("E-REP to X-REP conversion matches direct elementary polynomials") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(to_xrep(e_poly(n, k), n) == e_in_x(n, k));
        }
    }
    // Evaluation cross-check on a product.
    MPoly f = e_poly(3, 1) * e_poly(3, 2) - e_poly(3, 3);
    std::vector<Int> x = {1, 2, 3};
    std::vector<Int> e = elementary_values(x);
    REQUIRE(e == std::vector<Int>{6, 11, 6});
    CHECK(f.eval(e) == to_xrep(f, 3).eval(x));
}

TEST_CASE("bar map: E-REP formula against the X-REP substitution") {
    // e_2 over 4 variables bars to e'_2 - x^2 over (e_1, e_2, x).
    auto tgt = esyms_with_x(2);
    MPoly expect = MPoly::monomial(tgt, Exponents{0, 1, 0}, 1) +
                   MPoly::monomial(tgt, Exponents{0, 0, 2}, -1);
    CHECK(bar_e(e_poly(4, 2), 4) == expect);

    // Numeric agreement of the two bar routes on a composite input,
    // evaluated at x = (2, 3), xbar = 5: the E-REP route needs
    // (e_1(2,3), e_2(2,3), 5) and the X-REP route (2, 3, 5, -5).
    MPoly f = e_poly(4, 1) * e_poly(4, 3) + e_poly(4, 4);
    MPoly fe = bar_e(f, 4);
    MPoly fx = bar_x(to_xrep(f, 4), 4);
    CHECK(fe.eval(std::vector<Int>{5, 6, 5}) ==
          fx.eval(std::vector<Int>{2, 3, 5}));
}

TEST_CASE("delta plus: determinant route equals the defining product") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(to_xrep(delta_plus(n), n) == delta_plus_x(n));
    }
}

TEST_CASE("delta plus evaluation anchors") {
    // prod_{i<j} (x_i + x_j) at (1,2,3,4) = 3*4*5*5*6*7 = 12600.
    std::vector<Int> x = {1, 2, 3, 4};
    CHECK(delta_plus_at(x) == 12600);
    CHECK(delta_plus(4).eval(elementary_values(x)) == 12600);
    CHECK(delta_plus_at(std::vector<Int>{1, 1}) == 2);
}

TEST_CASE("bar annihilates delta plus") {
    // The product contains the factor x_{N-1} + x_N -> x + (-x) = 0.
    CHECK(bar_e(delta_plus(4), 4).is_zero());
    CHECK(bar_x(delta_plus_x(5), 5).is_zero());
}

TEST_CASE("special point conventions") {
    CHECK(special_point(2) == std::vector<Int>{1, -1});
    CHECK(special_point(4) == std::vector<Int>{1, 0, 0, -1});
    CHECK(special_point(5) == std::vector<Int>{0, 0, 0, -1, 1});
    CHECK(special_point(7) == std::vector<Int>{0, 0, 0, 0, 0, -1, 1});
}

TEST_CASE("delta plus at the special point is a sign") {
    // Even N = 2n: (-1)^(n(n+1)/2 + 1); odd N = 2n+1: (-1)^(n(n+1)/2).
    auto sign_at = [](int nvars) {
        return delta_plus(nvars).eval(special_point(nvars));
    };
    CHECK(sign_at(2) == 1);    // n=1: (-1)^2
    CHECK(sign_at(4) == 1);    // n=2: (-1)^4
    CHECK(sign_at(6) == -1);   // n=3: (-1)^7
    CHECK(sign_at(3) == -1);   // n=1: (-1)^1
    CHECK(sign_at(5) == -1);   // n=2: (-1)^3
    CHECK(sign_at(7) == 1);    // n=3: (-1)^6
}

TEST_CASE("x-degree weights") {
    auto w = xdeg_weights(*esyms_with_x(3));
    REQUIRE(w.size() == 4);
    CHECK(w == std::vector<long>{1, 2, 3, 1});
    auto wx = xdeg_weights(*xsyms(3));
    CHECK(wx == std::vector<long>{1, 1, 1});
}

TEST_CASE("binomial helper") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(8, 0) == 1);
    CHECK(binomial(4, 5) == 0);
}
