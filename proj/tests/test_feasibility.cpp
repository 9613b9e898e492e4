#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperarr/chambers.hpp"
#include "hyperarr/feasibility.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

bool satisfies_margin(const linalg::Matrix& rows, const std::vector<Rational>& x) {
    for (const auto& r : rows) {
        Rational s = 0;
        for (std::size_t c = 0; c < x.size(); ++c) s += r[c] * x[c];
        if (s < 1) return false;
    }
    return true;
}

linalg::Matrix rows_of(std::initializer_list<std::initializer_list<int>> rows) {
    linalg::Matrix m;
    for (auto r : rows) {
        std::vector<Rational> v;
        for (int c : r) v.emplace_back(c);
        m.push_back(std::move(v));
    }
    return m;
}

}  // namespace

TEST_CASE("margin system: small cases") {
    auto x = find_point_with_margin(rows_of({{1, 0}, {0, 1}}), 2);
    REQUIRE(x);
    CHECK(satisfies_margin(rows_of({{1, 0}, {0, 1}}), *x));

    CHECK_FALSE(find_point_with_margin(rows_of({{1, 0}, {-1, 0}}), 2));
    CHECK_FALSE(find_point_with_margin(rows_of({{1, 0}, {0, 1}, {-1, -1}}), 2));
    CHECK(find_point_with_margin({}, 3).has_value());

    // Needs a negative coordinate.
    const auto neg = rows_of({{-1, 0}, {-1, 1}});
    auto y = find_point_with_margin(neg, 2);
    REQUIRE(y);
    CHECK(satisfies_margin(neg, *y));
}

TEST_CASE("margin system: degenerate and redundant rows terminate") {
    const auto rows = rows_of({{1, 1, 0}, {1, 1, 0}, {2, 2, 0}, {1, 0, 0}, {0, 1, 0}, {1, 2, 0}});
    auto x = find_point_with_margin(rows, 3);
    REQUIRE(x);
    CHECK(satisfies_margin(rows, *x));
}

TEST_CASE("simplex and Fourier-Motzkin agree on random strict systems") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), rows_d(1, 7), dim_d(1, 4);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int dim = dim_d(rng), k = rows_d(rng);
        linalg::Matrix m;
        for (int i = 0; i < k; ++i) {
            std::vector<Rational> r;
            for (int c = 0; c < dim; ++c) r.emplace_back(coef(rng), 1 + (coef(rng) + 3) % 3);
            for (auto& q : r) q.canonicalize();
            m.push_back(std::move(r));
        }
        const bool fm = oracle::strict_system_feasible(m, dim);
        const auto x = find_point_with_margin(m, dim);
        CHECK(fm == x.has_value());
        if (x) {
            CHECK(satisfies_margin(m, *x));
            ++feasible;
        } else {
            ++infeasible;
        }
    }
    CHECK(feasible > 50);
    CHECK(infeasible > 50);
}

TEST_CASE("is_realizable examples") {
    CHECK(is_realizable(builtin_boolean(2), SignVector::parse("++")));

    const auto xyz = parse_arrangement(R"({"dim":2,"forms":[["1","0"],["0","1"],["1","1"]]})");
    CHECK_FALSE(is_realizable(xyz, SignVector::parse("++-")));
    // Exhaustive oracle check of all 8 sign vectors; exactly ++- and --+ fail.
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        const SignVector v(3, bits);
        const bool expected = v.to_string() != "++-" && v.to_string() != "--+";
        CHECK(oracle::realizable_fm(xyz, v) == expected);
        CHECK(is_realizable(xyz, v) == expected);
    }

    // x1 < x2 < x3 lies on the negative side of every x_i - x_j.
    CHECK(is_realizable(builtin_braid(3), SignVector::parse("---")));
    CHECK_THROWS_AS(is_realizable(builtin_braid(3), SignVector::parse("--")), Error);
}

TEST_CASE("realizing points lie strictly inside their chamber") {
    const auto a = builtin_braid(4);
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
        const SignVector v(6, bits);
        const auto p = realizing_point(a, v);
        CHECK(p.has_value() == oracle::realizable_fm(a, v));
        if (!p) continue;
        for (std::size_t j = 0; j < 6; ++j) {
            const int s = sgn(a.form(j).evaluate(*p));
            CHECK(s == (v[j] == Sign::Plus ? 1 : -1));
        }
    }
}
