#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/linalg.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("rationals parse exactly and reduce") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational("0/5").get_den() == 1);
    CHECK(format_rational(parse_rational("-10/4")) == "-5/2");
    CHECK(parse_rational("123456789012345678901234567890/3").get_num().get_str() == "41152263004115226300411522630");
    for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "--1", "1/-2"})
        CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::MalformedRational);
}

TEST_CASE("parse_arrangement: Boolean pair") {
    const auto a = parse_arrangement(R"({"dim":2,"forms":[["1","0"],["0","1"]]})");
    CHECK(a.dim() == 2);
    CHECK(a.size() == 2);
    CHECK(a.labels() == std::vector<std::string>{"H1", "H2"});
    CHECK(a == builtin_boolean(2));
}

TEST_CASE("parse_arrangement: braid of rank 2 in R^3") {
    const auto a = parse_arrangement(R"({"dim":3,"forms":[["1","-1","0"],["1","0","-1"],["0","1","-1"]]})");
    CHECK(a.size() == 3);
    CHECK(a.braid_ell() == 3u);
    CHECK(a.forms() == builtin_braid(3).forms());
}

TEST_CASE("parse_arrangement: validation errors") {
    CHECK(kind_of([] { parse_arrangement(R"({"dim":2,"forms":[["1","0"],["-2","0"]]})"); }) ==
          ErrorKind::DuplicateHyperplane);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":2,"forms":[["1/2","1"],["3","6"]]})"); }) ==
          ErrorKind::DuplicateHyperplane);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":2,"forms":[["0","0"]]})"); }) == ErrorKind::ZeroForm);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":2,"forms":[["1","0","0"]]})"); }) ==
          ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":0,"forms":[[]]})"); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":1,"forms":[["x"]]})"); }) == ErrorKind::MalformedRational);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":1,"forms":[[1]]})"); }) == ErrorKind::MalformedRational);
    CHECK(kind_of([] { parse_arrangement(R"({"dim":1,"forms":[]})"); }) == ErrorKind::MalformedInput);
    CHECK(kind_of([] { parse_arrangement("not json"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("labels are kept and defaulted") {
    const auto a = parse_arrangement(R"({"dim":1,"forms":[["3"]],"labels":["x"]})");
    CHECK(a.label(0) == "x");
    CHECK(builtin_braid(3).labels() == std::vector<std::string>{"H12", "H13", "H23"});
}

TEST_CASE("serialize then parse is the identity") {
    const auto a = parse_arrangement(R"({"dim":2,"forms":[["2/4","-3"],["0","7/21"]],"labels":["a","b"]})");
    const auto text = serialize_arrangement(a);
    CHECK(text == R"({"dim":2,"forms":[["1/2","-3"],["0","1/3"]],"labels":["a","b"]})");
    CHECK(parse_arrangement(text) == a);
    CHECK(serialize_arrangement(parse_arrangement(text)) == text);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto r = oracle::random_arrangement(seed, 8, 4);
        CHECK(parse_arrangement(serialize_arrangement(r)) == r);
    }
}

TEST_CASE("builtin generators") {
    CHECK(builtin_braid(2).size() == 1);
    CHECK(builtin_braid(3).size() == 3);
    CHECK(builtin_braid(4).size() == 6);
    CHECK(builtin_braid(4).label(5) == "H34");
    CHECK(builtin_boolean(1).size() == 1);
    CHECK(builtin_boolean(2).size() == 2);
    CHECK(rank(builtin_boolean(3)) == 3);
    CHECK_FALSE(builtin_boolean(3).braid_ell().has_value());
}

TEST_CASE("rank examples") {
    const auto braid3 = builtin_braid(3);
    CHECK(rank(braid3, {0, 1, 2}) == 2);
    CHECK(rank(builtin_boolean(2), {0, 1}) == 2);
    // {H12, H13}: rows (1,-1,0), (1,0,-1); the minor on columns 1,2 is 1.
    const oracle::Matrix m{braid3.form(0).coeffs, braid3.form(1).coeffs};
    CHECK(oracle::rank_by_minors(m, 3) == 2);
    CHECK(rank(braid3, {0, 1}) == 2);
    CHECK(rank(braid3, {}) == 0);
    CHECK(kind_of([&] { rank(braid3, {3}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("rank properties on random arrangements") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto a = oracle::random_arrangement(seed, 7, 4);
        const std::size_t n = a.size();
        oracle::Matrix all;
        for (const auto& f : a.forms()) all.push_back(f.coeffs);
        const auto r = rank(a);
        CHECK(r == oracle::rank_by_minors(all, a.dim()));
        CHECK(r == a.dim() - linalg::null_space(all, a.dim()).size());
        for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
            const auto rm = rank_mask(a, mask);
            CHECK(rm <= std::min<std::size_t>(__builtin_popcountll(mask), a.dim()));
            for (std::size_t j = 0; j < n; ++j)
                if (!((mask >> j) & 1u)) CHECK(rank_mask(a, mask | (1u << j)) >= rm);
        }
    }
}

TEST_CASE("direct sum, flips and permutations") {
    const auto s = direct_sum(builtin_boolean(1), builtin_braid(3));
    CHECK(s.dim() == 4);
    CHECK(s.size() == 4);
    CHECK(rank(s) == 3);
    const auto f = builtin_braid(3).with_flipped(1);
    CHECK(f.form(1).coeffs[0] == -1);
    CHECK_FALSE(f.braid_ell().has_value());
    const auto p = builtin_braid(3).permuted({2, 0, 1});
    CHECK(p.label(0) == "H23");
}
