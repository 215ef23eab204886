#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <nrs/construct.hpp>
#include <nrs/qchar.hpp>
#include <nrs/resolution.hpp>

using namespace nrs;

TEST_CASE("graded dimensions of the solution space match its character") {
    struct Task {
        int nvars, ell;
    };
    for (const Task t : {Task{2, 1}, Task{3, 1}, Task{4, 2}}) {
        INFO("N=" << t.nvars << " ell=" << t.ell);
        const long d_max = 6;
        QSeries c = ch_U(t.nvars, t.ell, d_max + 2);
        std::vector<long> dims = graded_u_dims(t.nvars, t.ell, d_max);
        REQUIRE(dims.size() == static_cast<std::size_t>(d_max + 1));
        for (long d = 0; d <= d_max; ++d) {
            INFO("d=" << d);
            CHECK(dims[d] == c.coeff_at(c.offset + Rat(d)));
        }
    }
}

TEST_CASE("quotient dimensions: anchors") {
    std::vector<long> dims = graded_quotient_dims(2, 1, 4);
    CHECK(dims == std::vector<long>{0, 1, 1, 2, 2});
}

TEST_CASE("quotient dimensions match the quotient character") {
    struct Task {
        int nvars, ell;
        long d_max;
    };
    for (const Task t :
         {Task{2, 1, 8}, Task{3, 1, 8}, Task{4, 1, 6}, Task{4, 2, 6}}) {
        INFO("N=" << t.nvars << " ell=" << t.ell);
        QSeries m = ch_M(t.nvars, t.ell, t.d_max + 2);
        std::vector<long> dims = graded_quotient_dims(t.nvars, t.ell, t.d_max);
        REQUIRE(dims.size() == static_cast<std::size_t>(t.d_max + 1));
        for (long d = 0; d <= t.d_max; ++d) {
            INFO("d=" << d);
            CHECK(dims[d] == m.coeff_at(m.offset + Rat(d)));
        }
    }
}

TEST_CASE("connecting map components") {
    // Even rank: g = w_1. Check both components of the pair against direct
    // wedge products, including the alternating sign on the xi_1 term.
    const int nvars = 2;
    WedgeElement a = generator(nvars, "v", 1);
    WedgeElement b = enumerate_basis(nvars, 0).at(0).second;  // the unit
    WedgeElement g = generator(nvars, "w", 1);
    WedgeElement xi = generator(nvars, "xi", 1);
    auto out = phi_map(nvars, 1, a, b);
    CHECK(out.first == a.wedge(g) - b.wedge(xi));
    CHECK(out.second == b.wedge(g));

    // Odd rank: g = v_0.
    WedgeElement a3 = generator(3, "v", 1);
    WedgeElement b3 = enumerate_basis(3, 0).at(0).second;
    auto out3 = phi_map(3, 1, a3, b3);
    CHECK(out3.first == a3.wedge(generator(3, "v0", 0)) -
                            b3.wedge(generator(3, "xi", 1)));

    // Level zero admits no lower term.
    auto out0 = phi_map(nvars, 0, b, WedgeElement(nvars, 0, b.coeff_symbols()));
    CHECK(out0.second.is_zero());
    CHECK(out0.first == b.wedge(g));
    CHECK_THROWS_AS(phi_map(nvars, 0, b, b), ResolutionError);
}

TEST_CASE("consecutive connecting maps compose to zero") {
    struct Task {
        int nvars, ell;
    };
    for (const Task t : {Task{2, 1}, Task{3, 1}, Task{4, 2}, Task{5, 1}}) {
        INFO("N=" << t.nvars << " ell=" << t.ell);
        CHECK(phi_complex_check(t.nvars, t.ell));
    }
}

TEST_CASE("index family partition and shift bijections") {
    for (int nvars : {4, 5}) {
        for (int ell = 0; ell <= nvars; ++ell) {
            INFO("N=" << nvars << " ell=" << ell);
            CHECK(bas_partition_check(nvars, ell));
        }
    }
}

TEST_CASE("wedging with xi_1 is injective on low slices") {
    CHECK(xi1_injectivity(2, 0, 6));
    CHECK(xi1_injectivity(4, 0, 6));
    CHECK(xi1_injectivity(4, 1, 6));
}

TEST_CASE("Euler characteristic of the resolution") {
    CHECK(euler_char_check(2, 1, 12));
    CHECK(euler_char_check(3, 1, 12));
    CHECK(euler_char_check(4, 2, 12));
    CHECK(euler_char_check(5, 2, 12));
}
