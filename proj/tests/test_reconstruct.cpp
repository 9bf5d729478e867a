#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dpart/errors.hpp"
#include "dpart/reconstruct.hpp"
#include "support.hpp"

using namespace dpart;
using dpart::testing::uniform;

namespace {

// Sum over permutations, sign by inversion count.
BigInt leibniz_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    BigInt total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += perm[a] > perm[b] ? 1 : 0;
        BigInt term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r)
            term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SubsetProductMap products_of(const DAryPartition& mu, std::size_t j)
{
    return positional_products(mu.parts(), j);
}

} // namespace

TEST_CASE("build_c_matrix")
{
    const auto c63 = IntMatrix::from_rows({{1, 0, 1, 1, 0, 0},
                                           {1, 1, 0, 1, 0, 0},
                                           {1, 1, 1, 0, 1, 0},
                                           {0, 1, 1, 1, 1, 1},
                                           {0, 0, 0, 0, 1, 1},
                                           {0, 0, 0, 0, 0, 1}});
    CHECK(build_c_matrix(6, 3) == c63);
    CHECK(build_c_matrix(2, 1) == IntMatrix::identity(2));
    CHECK(build_c_matrix(4, 1) == IntMatrix::identity(4));

    CHECK_THROWS_AS(build_c_matrix(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_c_matrix(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_c_matrix(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);

    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t j = 1; j < n; ++j) {
            const auto c = build_c_matrix(n, j);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t col = 0; col < n; ++col)
                    CHECK((c(r, col) == 0 || c(r, col) == 1));
        }

    std::ostringstream os;
    os << build_c_matrix(3, 1);
    CHECK(os.str() == "[1 0 0]\n[0 1 0]\n[0 0 1]\n");
}

TEST_CASE("det_exact")
{
    CHECK(det_exact(IntMatrix::identity(5)) == 1);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);
    CHECK(det_exact(build_c_matrix(6, 3)) == 3);
    CHECK(det_exact(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
    CHECK(det_exact(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det_exact(IntMatrix::from_rows({{0, 0, 2}, {0, 3, 0}, {5, 0, 0}})) == -30);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);

    SUBCASE("agrees with the permutation expansion on random matrices")
    {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = uniform(1, 6);
            IntMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    m(r, c) = static_cast<long>(uniform(0, 8)) - 4;
            CHECK(det_exact(m) == leibniz_det(m));
        }
    }
    SUBCASE("agrees with the permutation expansion on C")
    {
        for (std::size_t n = 2; n <= 7; ++n)
            for (std::size_t j = 1; j < n; ++j)
                CHECK(det_exact(build_c_matrix(n, j)) == leibniz_det(build_c_matrix(n, j)));
    }
}

TEST_CASE("circulant_det_check")
{
    const auto report = circulant_det_check(10);
    CHECK(report.rows.size() == 45);
    CHECK(report.all_pass());
    for (const auto& row : report.rows)
        CHECK(row.det == static_cast<unsigned long>(row.j));
    CHECK(circulant_det_check(2).rows.size() == 1);
    CHECK_THROWS_AS(circulant_det_check(1), std::invalid_argument);
}

TEST_CASE("subsystem matrix is the transpose of C")
{
    CHECK(subsystem_tuples(6, 3) ==
          std::vector<IndexTuple>{{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {3, 4, 5}, {4, 5, 6}});
    for (std::size_t ell = 2; ell <= 9; ++ell)
        for (std::size_t j = 1; j < ell; ++j)
            CHECK(subsystem_matrix(ell, j) == build_c_matrix(ell, j).transposed());
}

TEST_CASE("reconstruct_exponents examples")
{
    SubsetProductMap m{3, 2, {{{1, 2}, 27}, {{1, 3}, 9}, {{2, 3}, 3}}};
    CHECK(reconstruct_exponents(m, 3) == DAryPartition(3, {2, 1, 0}));

    SubsetProductMap singles{3, 1, {{{1}, 16}, {{2}, 4}, {{3}, 4}}};
    CHECK(reconstruct_exponents(singles, 2) == DAryPartition(2, {4, 2, 2}));

    CHECK(reconstruct_exponents(positional_products(Partition{8, 4, 2, 1}, 2), 2) ==
          DAryPartition(2, {3, 2, 1, 0}));

    // all parts equal to 1
    CHECK(reconstruct_exponents(positional_products(Partition{1, 1, 1}, 2), 5) == DAryPartition(5, {0, 0, 0}));
}

TEST_CASE("reconstruct_exponents rejects bad data")
{
    SUBCASE("product that is not a power of d")
    {
        SubsetProductMap m{3, 2, {{{1, 2}, 27}, {{1, 3}, 10}, {{2, 3}, 3}}};
        CHECK_THROWS_AS(reconstruct_exponents(m, 3), NotPowerOfD);
    }
    SUBCASE("non-integral solution")
    {
        // x1+x2 = 1, x1+x3 = 1, x2+x3 = 1
        SubsetProductMap m{3, 2, {{{1, 2}, 2}, {{1, 3}, 2}, {{2, 3}, 2}}};
        CHECK_THROWS_AS(reconstruct_exponents(m, 2), InconsistentData);
    }
    SUBCASE("increasing exponents")
    {
        SubsetProductMap m{3, 1, {{{1}, 1}, {{2}, 2}, {{3}, 2}}};
        CHECK_THROWS_AS(reconstruct_exponents(m, 2), InconsistentData);
    }
    SUBCASE("negative exponent")
    {
        // x1+x2 = 2, x1+x3 = 0, x2+x3 = 0 gives x3 = -1
        SubsetProductMap m{3, 2, {{{1, 2}, 4}, {{1, 3}, 1}, {{2, 3}, 1}}};
        CHECK_THROWS_AS(reconstruct_exponents(m, 2), InconsistentData);
    }
    SUBCASE("equation outside the solved subsystem")
    {
        // genuine data for exponents (2,1,1,0) with the (1,4) entry disturbed;
        // (1,4) is not among the subsystem rows for ell = 4, j = 2
        auto m = positional_products(DAryPartition(2, {2, 1, 1, 0}).parts(), 2);
        const auto rows = subsystem_tuples(4, 2);
        REQUIRE(std::find(rows.begin(), rows.end(), IndexTuple{1, 4}) == rows.end());
        m.entries[{1, 4}] = 8;
        CHECK_THROWS_AS(reconstruct_exponents(m, 2), InconsistentData);
    }
    SUBCASE("missing tuple and bad order")
    {
        SubsetProductMap m{3, 2, {{{1, 2}, 27}, {{1, 3}, 9}}};
        CHECK_THROWS_AS(reconstruct_exponents(m, 3), std::invalid_argument);
        CHECK_THROWS_AS(reconstruct_exponents(positional_products(Partition{4, 2}, 2), 2), std::invalid_argument);
    }
}

TEST_CASE("round trip through positional products")
{
    for (std::uint64_t d : {2, 3})
        for (std::size_t ell = 2; ell <= 5; ++ell)
            for (const auto& mu : enumerate_dary_fixed_length(d, ell, 3))
                for (std::size_t j = 1; j < ell; ++j)
                    REQUIRE(reconstruct_exponents(products_of(mu, j), d) == mu);
}

TEST_CASE("enumerate_dary_fixed_length")
{
    const auto all = enumerate_dary_fixed_length(2, 2, 2);
    CHECK(all == std::vector<DAryPartition>{DAryPartition(2, {0, 0}), DAryPartition(2, {1, 0}),
                                            DAryPartition(2, {1, 1}), DAryPartition(2, {2, 0}),
                                            DAryPartition(2, {2, 1}), DAryPartition(2, {2, 2})});
    // multisets of size ell from max_exp + 1 values
    CHECK(enumerate_dary_fixed_length(3, 5, 3).size() == 56);
}

TEST_CASE("verify_uniqueness")
{
    for (auto [d, ell, max_exp, j] : std::vector<std::tuple<std::uint64_t, std::size_t, std::uint64_t, std::size_t>>{
             {2, 3, 3, 2}, {3, 2, 2, 1}, {2, 4, 3, 2}}) {
        const auto report = verify_uniqueness(d, ell, max_exp, j);
        CHECK(report.pass());
        CHECK(report.partitions_checked == enumerate_dary_fixed_length(d, ell, max_exp).size());
        CHECK(report.pairs_checked == report.partitions_checked * (report.partitions_checked - 1) / 2);
        for (const auto& [a, b] : report.multiset_collisions) {
            CHECK_FALSE(a == b);
            CHECK(pre_j(a.parts(), j) == pre_j(b.parts(), j));
            CHECK_FALSE(products_of(a, j) == products_of(b, j));
        }
    }
    CHECK_THROWS_AS(verify_uniqueness(2, 1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniqueness(2, 3, 3, 3), std::invalid_argument);
}
