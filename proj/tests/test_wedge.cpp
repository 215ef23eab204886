#include <catch2/catch_amalgamated.hpp>

#include <nrs/polyring.hpp>
#include <nrs/wedge.hpp>

using namespace nrs;

namespace {

WedgeElement unit_tuple(int nvars, std::vector<int> tuple) {
    WedgeElement w(nvars, static_cast<int>(tuple.size()), esyms(nvars));
    w.add_term(std::move(tuple), MPoly(esyms(nvars), 1));
    return w;
}

}  // namespace

TEST_CASE("wedge antisymmetry and repeats") {
    auto a = unit_tuple(4, {0});
    auto b = unit_tuple(4, {2});
    CHECK(a.wedge(b) + b.wedge(a) == WedgeElement(4, 2, esyms(4)));
    CHECK(a.wedge(a).is_zero());

    // Unsorted insertion picks up the sorting sign.
    WedgeElement w(4, 2, esyms(4));
    w.add_term({2, 0}, MPoly(esyms(4), 1));
    CHECK(w.coeff({0, 2}) == MPoly(esyms(4), -1));
}

TEST_CASE("coefficient arithmetic distributes over wedge") {
    auto syms = esyms(3);
    MPoly c1 = e_poly(3, 1), c2 = e_poly(3, 2);
    auto a = unit_tuple(3, {0}) * c1;
    auto b = unit_tuple(3, {1}) * c2;
    auto prod = a.wedge(b);
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.coeff({0, 1}) == c1 * c2);

    auto sum = a + unit_tuple(3, {0}) * c2;
    CHECK(sum.coeff({0}) == c1 + c2);
    CHECK((a - a).is_zero());
}

TEST_CASE("coeff_signed extends antisymmetrically") {
    auto w = unit_tuple(4, {1, 3});
    CHECK(w.coeff_signed({3, 1}) == MPoly(esyms(4), -1));
    CHECK(w.coeff_signed({1, 3}) == MPoly(esyms(4), 1));
    CHECK(w.coeff_signed({3, 3}).is_zero());
}

TEST_CASE("deg1 bookkeeping") {
    // deg1 of a term = xdeg(coefficient) - sum(tuple).
    auto syms = esyms(4);
    WedgeElement w(4, 1, syms);
    w.add_term({3}, e_poly(4, 2));  // 2 - 3 = -1
    long d = 0;
    REQUIRE(w.is_deg1_homogeneous(&d));
    CHECK(d == -1);
    CHECK(w.deg1() == -1);
    CHECK(w.deg2() == Rat(3));  // 16/4 + (-1)

    w.add_term({1}, e_poly(4, 1));  // 1 - 1 = 0: now mixed
    CHECK_FALSE(w.is_deg1_homogeneous());
    auto comps = w.deg1_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(-1).coeff({3}) == e_poly(4, 2));
    CHECK(comps.at(0).coeff({1}) == e_poly(4, 1));
}

TEST_CASE("evaluation of terms at an integer point") {
    auto w = unit_tuple(2, {0}) * e_poly(2, 1) + unit_tuple(2, {1}) * e_poly(2, 2);
    auto vals = w.eval_terms({5, 7});
    REQUIRE(vals.size() == 2);
    CHECK(vals.at({0}) == 5);
    CHECK(vals.at({1}) == 7);
}

TEST_CASE("widened elements accept indices beyond the rank") {
    WedgeElement w(4, 1, esyms(4), /*widened=*/true);
    w.add_term({4}, MPoly(esyms(4), 1));
    CHECK_FALSE(w.is_zero());
    CHECK_THROWS_AS(unit_tuple(4, {4}), WedgeError);
}

TEST_CASE("wedge JSON round trip") {
    auto w = unit_tuple(3, {0, 2}) * e_poly(3, 2) - unit_tuple(3, {1, 2}) * e_poly(3, 1);
    auto j = w.to_json();
    auto back = WedgeElement::from_json(j);
    CHECK(back == w);
    CHECK(back.nvars() == 3);
    CHECK(back.ell() == 2);
}

TEST_CASE("poly JSON round trip") {
    MPoly f = delta_plus(4);
    CHECK(MPoly::from_json(f.to_json()) == f);
}
