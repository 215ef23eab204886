#include <catch2/catch_amalgamated.hpp>

#include <nrs/construct.hpp>
#include <nrs/polyring.hpp>
#include <nrs/qchar.hpp>
#include <nrs/wedge.hpp>

using namespace nrs;

namespace {

// Out-of-range rows are zero for the purposes of the bar recursion test.
MPoly p_or_zero(int nvars, int r, int s) {
    const int n = half_n(nvars);
    const int rmax = (nvars % 2 == 0) ? n : n + 1;
    if (r < 1 || r > rmax) return MPoly(esyms(nvars));
    return p_rs(nvars, r, s);
}

}  // namespace

TEST_CASE("P table anchors") {
    auto e = [](int k) { return e_poly(4, k); };
    CHECK(p_rs(4, 1, 1) == e(1));
    CHECK(p_rs(4, 1, 2) == e(3));
    CHECK(p_rs(4, 2, 1) == e(3) - e(1) * e(2));
    CHECK(p_rs(4, 2, 2) == -(e(1) * e(4)));
}

TEST_CASE("P table zero conventions") {
    CHECK(p_rs(4, 1, 0).is_zero());
    CHECK(p_rs(4, 2, -3).is_zero());
    CHECK(p_rs(4, 2, 3).is_zero());   // even: s >= n+1
    CHECK(p_rs(5, 2, 3).is_zero());   // odd: r >= 2 and s >= n+1
    CHECK_FALSE(p_rs(5, 1, 3).is_zero());  // odd keeps the r = 1 row: e_5
    CHECK(p_rs(5, 1, 3) == e_poly(5, 5));
    CHECK_THROWS(p_rs(4, 3, 1));      // r out of range (even: r <= n)
    CHECK_THROWS(p_rs(5, 4, 1));      // odd: r <= n+1
}

TEST_CASE("P recursion unrolls") {
    // P_{r,s} = P_{r-1,s+1} - e_{2s} P_{r-1,1}.
    for (int nvars : {6, 7}) {
        const int n = half_n(nvars);
        const int rmax = (nvars % 2 == 0) ? n : n + 1;
        for (int r = 2; r <= rmax; ++r) {
            for (int s = 1; s <= n + 1; ++s) {
                CHECK(p_rs(nvars, r, s) ==
                      p_rs(nvars, r - 1, s + 1) -
                          e_poly(nvars, 2 * s) * p_rs(nvars, r - 1, 1));
            }
        }
    }
}

TEST_CASE("P homogeneity") {
    for (int nvars : {4, 5, 6}) {
        auto w = xdeg_weights(*esyms(nvars));
        const int n = half_n(nvars);
        const int rmax = (nvars % 2 == 0) ? n : n + 1;
        for (int r = 1; r <= rmax; ++r) {
            for (int s = 1; s <= n; ++s) {
                const MPoly& p = p_rs(nvars, r, s);
                if (p.is_zero()) continue;
                long d = 0;
                REQUIRE(p.is_homogeneous(w, &d));
                CHECK(d == 2 * r + 2 * s - 3);
            }
        }
    }
}

TEST_CASE("bar recursion for the P table") {
    // bar(P^(N)_{r,s}) = P^(N-2)_{r,s} - x^2 P^(N-2)_{r,s-1}, rows that
    // exist on both sides.
    for (int nvars : {4, 5, 6, 7, 8}) {
        const int small = nvars - 2;
        const int n_small = half_n(small);
        const int rmax_small = (small % 2 == 0) ? n_small : n_small + 1;
        auto tgt = esyms_with_x(small);
        MPoly x2 = MPoly::variable(tgt, "x").pow(2);
        for (int r = 1; r <= rmax_small; ++r) {
            for (int s = -1; s <= half_n(nvars) + 1; ++s) {
                MPoly lhs = bar_e(p_rs(nvars, r, s), nvars);
                MPoly rhs = p_or_zero(small, r, s).with_symbols(tgt) -
                            x2 * p_or_zero(small, r, s - 1).with_symbols(tgt);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("null-residue seed identity") {
    // sum_s bar(P^(2n)_{r,s}) x^(2(n-s)) = 0.
    for (int nvars : {2, 4, 6, 8}) {
        const int n = half_n(nvars);
        auto tgt = esyms_with_x(nvars - 2);
        MPoly xv = MPoly::variable(tgt, "x");
        for (int r = 1; r <= n; ++r) {
            MPoly acc(tgt);
            for (int s = 1; s <= n; ++s) {
                acc += bar_e(p_rs(nvars, r, s), nvars) *
                       xv.pow(static_cast<unsigned>(2 * (n - s)));
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("generator degree table") {
    for (int nvars : {4, 6}) {
        const int n = half_n(nvars);
        for (int i = 1; i <= n; ++i) CHECK(gen_v(nvars, i).deg1() == 2 * i - 1);
        for (int j = 1; j <= n; ++j) CHECK(gen_w(nvars, j).deg1() == 2 * j - 2);
        for (int k = 1; k <= n; ++k) CHECK(gen_xi(nvars, k).deg1() == 2 * k - 2);
    }
    for (int nvars : {3, 5}) {
        const int n = half_n(nvars);
        CHECK(gen_v0(nvars).deg1() == 0);
        for (int i = 1; i <= n; ++i) CHECK(gen_v(nvars, i).deg1() == 2 * i - 1);
        for (int j = 1; j <= n; ++j) CHECK(gen_w(nvars, j).deg1() == 2 * j);
        for (int k = 1; k <= n; ++k) CHECK(gen_xi(nvars, k).deg1() == 2 * k - 2);
    }
}

TEST_CASE("theta route equals the recursion route") {
    CHECK(gen_Xi1(2) == gen_w(2, 1));
    CHECK(gen_Xi1(4) == gen_w(4, 1));
    CHECK(gen_Xi1(6) == gen_w(6, 1));
    CHECK(gen_Xi1(3) == gen_v0(3));
    CHECK(gen_Xi1(5) == gen_v0(5));
    for (int nvars : {2, 3, 4, 5, 6}) {
        CHECK(gen_Xi2(nvars) == gen_xi(nvars, 1));
    }
}

TEST_CASE("w1 anchor at two variables") {
    // w_1^(2) = e_1 X^1.
    WedgeElement expect(2, 1, esyms(2));
    expect.add_term({1}, e_poly(2, 1));
    CHECK(gen_w(2, 1) == expect);
}

TEST_CASE("generator dispatcher") {
    CHECK(generator(4, "v", 2) == gen_v(4, 2));
    CHECK(generator(5, "v0", 0) == gen_v0(5));
    CHECK(generator(4, "xi", 1) == gen_xi(4, 1));
    CHECK(generator(6, "Xi1", 0) == gen_Xi1(6));
    CHECK_THROWS(generator(4, "nope", 1));
    CHECK_THROWS(generator(4, "v", 3));
}

TEST_CASE("xi expansion coefficients reconstruct xi") {
    // xi_k = sum_{ij} a^(k)_{ij} (X1^(2i+1) X2^(2j) - X2^(2i+1) X1^(2j)).
    for (int nvars : {2, 4, 6}) {
        const int n = half_n(nvars);
        auto scratch = esyms_xx(nvars);
        MPoly X1 = MPoly::variable(scratch, "X1");
        MPoly X2 = MPoly::variable(scratch, "X2");
        for (int k = 1; k <= n; ++k) {
            MPoly lhs(scratch);
            for (int i = 0; i <= n - 1; ++i) {
                for (int j = 0; j <= n - 1; ++j) {
                    MPoly a = xi_expansion_coeff(nvars, k, i, j)
                                  .with_symbols(scratch);
                    lhs += a * (X1.pow(2 * i + 1) * X2.pow(2 * j) -
                                X2.pow(2 * i + 1) * X1.pow(2 * j));
                }
            }
            MPoly rhs(scratch);
            const WedgeElement xi = gen_xi(nvars, k);
            for (const auto& [t, c] : xi.terms()) {
                rhs += c.with_symbols(scratch) *
                       (X1.pow(t[0]) * X2.pow(t[1]) -
                        X1.pow(t[1]) * X2.pow(t[0]));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("xi expansion coefficient symmetry") {
    for (int nvars : {4, 6}) {
        const int n = half_n(nvars);
        for (int k = 1; k <= n; ++k) {
            for (int i = 0; i <= n - 1; ++i) {
                for (int j = 0; j <= n - 1; ++j) {
                    CHECK(xi_expansion_coeff(nvars, k, i, j) ==
                          xi_expansion_coeff(nvars, k, j, i));
                }
            }
        }
    }
}

TEST_CASE("xi expansion difference relation") {
    // a^(k)_{i-1,j} - a^(k)_{j-1,i} = e_{2j} P_{k,i} - e_{2i} P_{k,j}.
    for (int nvars : {4, 6}) {
        const int n = half_n(nvars);
        for (int k = 1; k <= n; ++k) {
            for (int i = 1; i <= n - 1; ++i) {
                for (int j = 1; j <= n - 1; ++j) {
                    MPoly lhs = xi_expansion_coeff(nvars, k, i - 1, j) -
                                xi_expansion_coeff(nvars, k, j - 1, i);
                    MPoly rhs = e_poly(nvars, 2 * j) * p_rs(nvars, k, i) -
                                e_poly(nvars, 2 * i) * p_rs(nvars, k, j);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("basis enumeration counts and order") {
    CHECK(enumerate_basis_indices(2, 1).size() == 2);
    CHECK(enumerate_basis_indices(4, 2).size() == 6);
    CHECK(enumerate_basis_indices(3, 1).size() == 3);
    for (int nvars : {2, 3, 4, 5, 6}) {
        for (int ell = 0; ell <= nvars; ++ell) {
            Int expect = binomial(nvars, ell);
            CHECK(Int(static_cast<long>(
                      enumerate_basis_indices(nvars, ell).size())) == expect);
        }
    }
    // Counting respects the tetranomial refinement up to 2n = 12 without
    // constructing elements.
    for (int n = 1; n <= 6; ++n) {
        for (int ell = 0; ell <= 2 * n; ++ell) {
            long count = 0;
            for (const auto& idx : enumerate_basis_indices(2 * n, ell)) {
                (void)idx;
                ++count;
            }
            CHECK(Int(count) == binomial(2 * n, ell));
        }
    }
    // Determinism.
    auto a = enumerate_basis_indices(5, 2);
    auto b = enumerate_basis_indices(5, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) CHECK(a[t] == b[t]);
    // Odd case lists the v0 family first.
    auto odd = enumerate_basis_indices(5, 2);
    CHECK(odd.front().v0);
    CHECK_FALSE(odd.back().v0);
}

TEST_CASE("basis index invariants") {
    for (int nvars : {4, 5}) {
        const int n = half_n(nvars);
        for (int ell = 0; ell <= nvars; ++ell) {
            for (const auto& idx : enumerate_basis_indices(nvars, ell)) {
                CHECK(idx.ell() == ell);
                if (idx.v0) CHECK(nvars % 2 == 1);
                const int l1 = idx.l1(), l3 = idx.l3();
                for (int i : idx.I) {
                    CHECK(i >= 1);
                    CHECK(i <= n);
                }
                for (int j : idx.J) {
                    CHECK(j >= 1);
                    CHECK(j <= n - l1 - l3);
                }
                for (int kk : idx.K) {
                    CHECK(kk >= 1);
                    CHECK(kk <= n - l1 - l3 + 1);
                }
            }
        }
    }
}

TEST_CASE("basis elements carry the predicted deg1") {
    for (int nvars : {4, 5}) {
        for (int ell = 0; ell <= 3; ++ell) {
            for (const auto& [idx, el] : enumerate_basis(nvars, ell)) {
                if (el.is_zero()) continue;
                CHECK(el.deg1() == idx.deg1(nvars));
            }
        }
    }
}
