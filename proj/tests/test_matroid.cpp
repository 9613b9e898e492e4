#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperarr/errors.hpp"
#include "hyperarr/matroid.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

Arrangement xyz() { return parse_arrangement(R"({"dim":2,"forms":[["1","0"],["0","1"],["1","1"]]})"); }

Arrangement point_plus_circuit() {
    return parse_arrangement(
        R"({"dim":3,"forms":[["1","0","0"],["0","1","0"],["0","0","1"],["0","1","1"]]})");
}

// Independent check that {a, b} lies in a circuit: some subset containing both
// is dependent while dropping any single element makes it independent.
bool pair_in_circuit_oracle(const Arrangement& arr, std::size_t a, std::size_t b) {
    const std::size_t n = arr.size();
    auto dependent = [&](std::uint32_t mask) {
        oracle::Matrix rows;
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> j) & 1u) rows.push_back(arr.form(j).coeffs);
        return oracle::rank_by_minors(rows, arr.dim()) < rows.size();
    };
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!((mask >> a) & 1u) || !((mask >> b) & 1u) || !dependent(mask)) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < n && minimal; ++j)
            if ((mask >> j) & 1u) minimal = !dependent(mask & ~(1u << j));
        if (minimal) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("is_dependent examples") {
    CHECK(is_dependent(builtin_braid(3), {0, 1, 2}));
    CHECK_FALSE(is_dependent(builtin_boolean(2), {0, 1}));
    CHECK_FALSE(is_dependent(builtin_boolean(2), {}));
    CHECK_THROWS_AS(is_dependent(builtin_boolean(2), {2}), Error);
}

TEST_CASE("circuits examples") {
    CHECK(circuits(builtin_boolean(2)).empty());
    const auto c1 = circuits(xyz());
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].indices == std::vector<std::size_t>{0, 1, 2});
    const auto c2 = circuits(builtin_braid(3));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].indices == std::vector<std::size_t>{0, 1, 2});
    // braid(4): four triangles {ij, jk, ik} and three 4-cycles.
    const auto c4 = circuits(builtin_braid(4));
    CHECK(std::count_if(c4.begin(), c4.end(), [](const Circuit& c) { return c.indices.size() == 3; }) == 4);
    CHECK(std::count_if(c4.begin(), c4.end(), [](const Circuit& c) { return c.indices.size() == 4; }) == 3);
}

TEST_CASE("circuit_graph examples") {
    const auto g0 = circuit_graph(builtin_boolean(2));
    CHECK(g0.edges.empty());
    CHECK(g0.components().size() == 2);

    const auto g3 = circuit_graph(builtin_braid(3));
    CHECK(g3.edges.size() == 3);

    const auto braid4 = builtin_braid(4);
    const auto g4 = circuit_graph(braid4);
    CHECK(g4.edges.size() == 15);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) {
            CHECK(g4.has_edge(a, b));
            CHECK(pair_in_circuit_oracle(braid4, a, b));
        }
}

TEST_CASE("decompose examples") {
    const auto d0 = decompose(builtin_boolean(2));
    CHECK(d0.blocks == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(d0.block_ranks == std::vector<std::size_t>{1, 1});

    for (std::size_t ell = 3; ell <= 5; ++ell) {
        const auto d = decompose(builtin_braid(ell));
        CHECK(d.size() == 1);
        CHECK(d.block_ranks[0] == ell - 1);
    }

    const auto d1 = decompose(point_plus_circuit());
    CHECK(d1.blocks == std::vector<std::vector<std::size_t>>{{0}, {1, 2, 3}});
    CHECK(d1.block_ranks == std::vector<std::size_t>{1, 2});
}

TEST_CASE("is_decomposable_bruteforce examples") {
    CHECK_FALSE(is_decomposable_bruteforce(builtin_boolean(1)));
    CHECK(is_decomposable_bruteforce(parse_arrangement(R"({"dim":2,"forms":[["1","2"],["3","-1"]]})")));
    CHECK(is_decomposable_bruteforce(parse_arrangement(R"({"dim":1,"forms":[["1"]]})")) == false);
    CHECK_FALSE(is_decomposable_bruteforce(builtin_braid(3)));
    CHECK(is_decomposable_bruteforce(point_plus_circuit()));
}

TEST_CASE("decompose agrees with bipartition search on random arrangements") {
    int decomposable = 0, indecomposable = 0;
    for (std::uint64_t seed = 200; seed < 300; ++seed) {
        const auto a = oracle::random_arrangement(seed, 12, 5);
        const auto d = decompose(a);
        CHECK(d.decomposable() == is_decomposable_bruteforce(a));
        (d.decomposable() ? decomposable : indecomposable)++;

        // Every circuit is dependent with independent proper subsets.
        for (const auto& c : circuits(a)) CHECK(is_circuit(a, c.indices));

        // Any union of blocks is rank-additive.
        for (std::uint32_t pick = 1; pick < (1u << d.size()); ++pick) {
            std::vector<std::size_t> idx;
            std::size_t sum = 0;
            for (std::size_t b = 0; b < d.size(); ++b)
                if ((pick >> b) & 1u) {
                    idx.insert(idx.end(), d.blocks[b].begin(), d.blocks[b].end());
                    sum += d.block_ranks[b];
                }
            CHECK(rank(a, idx) == sum);
        }
    }
    CHECK(decomposable > 10);
    CHECK(indecomposable > 10);
}

TEST_CASE("decomposition is invariant under relabeling") {
    std::mt19937 rng(3);
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        const auto a = oracle::random_arrangement(seed, 9, 4);
        std::vector<std::size_t> perm(a.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto p = a.permuted(perm);
        auto blocks = decompose(a).blocks;
        auto relabeled = decompose(p).blocks;
        for (auto& b : relabeled) {
            for (auto& j : b) j = perm[j];
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks.begin(), blocks.end());
        std::sort(relabeled.begin(), relabeled.end());
        CHECK(blocks == relabeled);
    }
}

TEST_CASE("resource limits") {
    MatroidLimits tight;
    tight.max_circuit_n = 2;
    CHECK_THROWS_AS(circuits(builtin_braid(3), tight), Error);
    CHECK_THROWS_AS(subset_ranks(builtin_braid(7), 20), Error);
}
