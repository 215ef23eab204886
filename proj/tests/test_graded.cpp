#include <catch2/catch_amalgamated.hpp>

#include <nrs/construct.hpp>
#include <nrs/graded.hpp>
#include <nrs/polyring.hpp>

using namespace nrs;

TEST_CASE("index tuples") {
    auto t = index_tuples(4, 2);
    REQUIRE(t.size() == 6);
    CHECK(t.front() == std::vector<int>{0, 1});
    CHECK(t.back() == std::vector<int>{2, 3});
    CHECK(index_tuples(3, 0).size() == 1);
    CHECK(index_tuples(2, 3).empty());
}

TEST_CASE("weighted monomials enumerate bounded partitions") {
    // Partitions of 4 with parts <= 2: 2+2, 2+1+1, 1+1+1+1.
    auto mons = weighted_monomials(2, 4);
    CHECK(mons.size() == 3);
    CHECK(partition_count(2, 4) == 3);
    CHECK(partition_count(6, 10) == 35);
    CHECK(partition_count(3, 0) == 1);
    CHECK(partition_count(3, -2) == 0);
    CHECK(weighted_monomials(3, -1).empty());
    // Each monomial has the stated weighted degree.
    auto w = xdeg_weights(*esyms(2));
    for (const auto& m : weighted_monomials(2, 5)) {
        long d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += w[i] * m[i];
        CHECK(d == 5);
    }
}

TEST_CASE("slice dimensions add up") {
    // For a single wedge factor the slice at deg1 = d is the union over
    // coordinates i of the monomials of x-degree d + i.
    for (long d = 0; d <= 4; ++d) {
        Slice s = make_slice(2, 1, d);
        long expect = partition_count(2, d) + partition_count(2, d + 1);
        CHECK(s.dim() == expect);
    }
}

TEST_CASE("slice vector round trip") {
    auto v = gen_v(2, 1);
    REQUIRE(v.deg1() == 1);
    Slice s = make_slice(2, 1, 1);
    auto row = slice_vector(s, v);
    CHECK_FALSE(row.empty());
    // Every listed column is in range and the nonzero pattern matches the
    // element's terms.
    long nnz = 0;
    for (const auto& [col, val] : row) {
        CHECK(col >= 0);
        CHECK(col < s.dim());
        if (val != 0) ++nnz;
    }
    long expect_nnz = 0;
    for (const auto& [t, c] : v.terms()) expect_nnz += c.term_count();
    CHECK(nnz == expect_nnz);
}

TEST_CASE("index_of agrees with the offsets") {
    Slice s = make_slice(4, 2, 3);
    long seen = 0;
    for (std::size_t ti = 0; ti < s.tuples.size(); ++ti) {
        for (const auto& m : s.mons[ti]) {
            long col = s.index_of(s.tuples[ti], m);
            CHECK(col == seen);
            ++seen;
        }
    }
    CHECK(seen == s.dim());
    CHECK(s.index_of({0, 1}, Exponents{9, 9, 9, 9}) == -1);
}
