#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperarr/chambers.hpp"
#include "hyperarr/errors.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

const Chamber& by_address(const ChamberSet& cs, const char* addr) {
    const auto id = cs.find(SignVector::parse(addr));
    REQUIRE(id.has_value());
    return cs[*id];
}

}  // namespace

TEST_CASE("sign vectors") {
    const auto v = SignVector::parse("+-+");
    CHECK(v.size() == 3);
    CHECK(v[1] == Sign::Minus);
    CHECK((-v).to_string() == "-+-");
    CHECK(-(-v) == v);
    CHECK(v.with(0, Sign::Minus).to_string() == "--+");
    CHECK(SignVector::uniform(4, Sign::Minus).to_string() == "----");
    // + < - with the first position most significant.
    CHECK(SignVector::parse("+--") < SignVector::parse("-++"));
    CHECK(SignVector::parse("++-") < SignVector::parse("+-+"));
    CHECK_THROWS_AS(SignVector::parse("+0-"), Error);
    CHECK((Sign::Minus * Sign::Minus) == Sign::Plus);
    CHECK(-(-Sign::Plus) == Sign::Plus);
}

TEST_CASE("enumerate_chambers examples") {
    const auto quad = enumerate_chambers(builtin_boolean(2));
    CHECK(quad->size() == 4);
    CHECK((*quad)[0].address.to_string() == "++");
    CHECK((*quad)[3].address.to_string() == "--");

    const auto braid = enumerate_chambers(builtin_braid(3));
    CHECK(braid->size() == 6);
    std::set<std::string> orders;
    for (const auto& c : braid->chambers()) orders.insert(permutation_label(3, c.address));
    CHECK(orders.size() == 6);
    CHECK(permutation_label(3, SignVector::parse("---")) == "x1<x2<x3");
    CHECK(permutation_label(3, SignVector::parse("+++")) == "x3<x2<x1");

    const auto xyz = parse_arrangement(R"({"dim":2,"forms":[["1","0"],["0","1"],["1","1"]]})");
    CHECK(enumerate_chambers(xyz)->size() == 6);
    CHECK(enumerate_chambers(builtin_boolean(3))->size() == 8);
}

TEST_CASE("canonical order and ids") {
    const auto cs = enumerate_chambers(builtin_braid(4));
    CHECK(cs->size() == 24);
    for (std::size_t i = 0; i < cs->size(); ++i) {
        CHECK((*cs)[i].id == i);
        CHECK(cs->find((*cs)[i].address) == i);
        if (i) CHECK((*cs)[i - 1].address < (*cs)[i].address);
    }
}

TEST_CASE("antipode") {
    const auto quad = enumerate_chambers(builtin_boolean(2));
    CHECK(quad->antipode(by_address(*quad, "++")).address.to_string() == "--");

    const auto braid = enumerate_chambers(builtin_braid(3));
    const auto& increasing = by_address(*braid, "---");
    CHECK(permutation_label(3, braid->antipode(increasing).address) == "x3<x2<x1");
    for (const auto& c : braid->chambers()) CHECK(braid->antipode(braid->antipode(c)).id == c.id);
}

TEST_CASE("epsilon and epsilon_tuple") {
    const auto braid = enumerate_chambers(builtin_braid(3));
    for (const auto& c : braid->chambers())
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(epsilon(*braid, j, Sign::Plus, c) == c.address[j]);
            CHECK(epsilon(*braid, j, Sign::Minus, c) == -c.address[j]);
            CHECK(epsilon(*braid, j, Sign::Plus, braid->antipode(c)) == -epsilon(*braid, j, Sign::Plus, c));
        }
    CHECK_THROWS_AS(epsilon(*braid, 3, Sign::Plus, (*braid)[0]), Error);

    const std::vector<Chamber> single{(*braid)[2]};
    CHECK(epsilon_tuple(*braid, 1, Sign::Plus, single) == std::vector<Sign>{epsilon(*braid, 1, Sign::Plus, single[0])});

    // Mixing C on S = {1, 3} and C' off S produces S_+ on H_j.
    const auto& c_plus = by_address(*braid, "+++");
    const auto& c_minus = by_address(*braid, "---");
    const std::vector<Chamber> tuple{c_plus, c_minus, c_plus};
    CHECK(epsilon_tuple(*braid, 0, Sign::Plus, tuple) == std::vector<Sign>{Sign::Plus, Sign::Minus, Sign::Plus});
    const std::vector<Chamber> same{c_plus, c_plus, c_plus};
    CHECK(epsilon_tuple(*braid, 2, Sign::Plus, same) == std::vector<Sign>(3, Sign::Plus));
}

TEST_CASE("circuit_missing_signs") {
    const auto xyz = parse_arrangement(R"({"dim":2,"forms":[["1","0"],["0","1"],["1","1"]]})");
    const auto [tau, neg] = circuit_missing_signs(xyz, {0, 1, 2});
    CHECK(tau.to_string() == "++-");
    CHECK(neg.to_string() == "--+");

    // Braid: x1 > x2, x2 > x3 but x1 < x3 is the cyclic pattern (and its reverse).
    const auto [c1, c2] = circuit_missing_signs(builtin_braid(3), {0, 1, 2});
    CHECK(c1.to_string() == "+-+");
    CHECK(c2.to_string() == "-+-");
    for (auto v : {c1, c2}) CHECK_FALSE(oracle::realizable_fm(builtin_braid(3), v));

    CHECK_THROWS_AS(circuit_missing_signs(builtin_boolean(2), {0, 1}), Error);
    try {
        circuit_missing_signs(builtin_boolean(2), {0, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACircuit);
    }

    // Four generic planes in R^3 form a circuit of size 4: 16 - 2 chambers.
    const auto four =
        parse_arrangement(R"({"dim":3,"forms":[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]]})");
    CHECK(enumerate_chambers(four)->size() == 14);
    const auto [t4, n4] = circuit_missing_signs(four, {0, 1, 2, 3});
    CHECK(t4 == -n4);
    CHECK(t4.to_string() == "+++-");
}

TEST_CASE("incremental, brute-force and serial enumeration agree") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto a = oracle::random_arrangement(seed, 9, 4);
        const auto inc = enumerate_chambers(a);
        const auto brute = enumerate_chambers_bruteforce(a);
        ChamberOptions serial;
        serial.exec = Exec::Serial;
        const auto ser = enumerate_chambers(a, serial);
        REQUIRE(inc->size() == brute->size());
        REQUIRE(inc->size() == ser->size());
        for (std::size_t i = 0; i < inc->size(); ++i) {
            CHECK((*inc)[i].address == (*brute)[i].address);
            CHECK((*inc)[i].address == (*ser)[i].address);
        }
        // Antipodal closure.
        for (const auto& c : inc->chambers()) CHECK(inc->find(-c.address).has_value());
        // Against the Fourier-Motzkin oracle on every sign vector.
        for (std::uint64_t bits = 0; bits < (1u << a.size()); ++bits)
            CHECK(inc->contains_bits(bits) == oracle::realizable_fm(a, SignVector(a.size(), bits)));
    }
}

TEST_CASE("braid chambers biject with permutations") {
    for (std::size_t ell = 2; ell <= 5; ++ell) {
        const auto cs = enumerate_chambers(builtin_braid(ell));
        std::size_t fact = 1;
        for (std::size_t k = 2; k <= ell; ++k) fact *= k;
        CHECK(cs->size() == fact);
        std::set<std::string> labels;
        for (const auto& c : cs->chambers()) labels.insert(permutation_label(ell, c.address));
        CHECK(labels.size() == fact);
    }
}

TEST_CASE("chamber cap raises ResourceLimit") {
    ChamberOptions tight;
    tight.max_chambers = 5;
    try {
        enumerate_chambers(builtin_boolean(3), tight);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
}

TEST_CASE("non-essential arrangements") {
    // Two hyperplanes in R^4 have the same 4 chambers as in R^2.
    const auto a = parse_arrangement(R"({"dim":4,"forms":[["1","0","0","0"],["1","1","0","0"]]})");
    CHECK(enumerate_chambers(a)->size() == 4);
}
