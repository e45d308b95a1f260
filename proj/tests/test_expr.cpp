#include "chernum/expr.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace chernum;
using namespace chernum::dsl;

TEST_CASE("manifold expressions parse") {
    CHECK(parse_manifold("CP(2)*CP(1)").dims == std::vector<int>{2, 1});
    CHECK(parse_manifold("CP(3)").dims == std::vector<int>{3});
    CHECK(parse_manifold("pt").dims.empty());
    CHECK(parse_manifold(" CP( 2 ) * CP(1) ").dims == std::vector<int>{2, 1});
    CHECK(parse_manifold("CP(0)").dims == std::vector<int>{0});
}

TEST_CASE("manifold parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_manifold("CP(-1)"), ParseError);
    try {
        parse_manifold("CP(-1)");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(parse_manifold("CP(2)*"), ParseError);
    CHECK_THROWS_AS(parse_manifold("CP(2) garbage"), ParseError);
    CHECK_THROWS_AS(parse_manifold("TP(2)"), ParseError);
    CHECK_THROWS_AS(parse_manifold(""), ParseError);
    // dimension bound
    CHECK_THROWS_AS(parse_manifold("CP(100)"), ParseError);
}

TEST_CASE("partition literals parse") {
    CHECK(parse_partition("[2,1]") == symfunc::Partition({2, 1}));
    CHECK(parse_partition("[1,2]") == symfunc::Partition({2, 1}));  // canonicalized
    CHECK(parse_partition("[]") == symfunc::Partition{});
    CHECK(parse_partition("[ 3 , 3 ]") == symfunc::Partition({3, 3}));
    CHECK_THROWS_AS(parse_partition("[0]"), ParseError);
    CHECK_THROWS_AS(parse_partition("[2,]"), ParseError);
    CHECK_THROWS_AS(parse_partition("2,1"), ParseError);
}

TEST_CASE("bundle expressions parse") {
    auto b = parse_bundle("O(1,0)+conj(tau)+nu");
    CHECK(b.parts.size() == 3);
    CHECK(b.to_string() == "O(1,0)+conj(tau)+nu");

    CHECK(parse_bundle("tau").to_string() == "tau");
    CHECK(parse_bundle("conj(conj(tau))").to_string() == "tau");
    CHECK(parse_bundle("O(-1)").to_string() == "O(-1)");
    CHECK(parse_bundle("conj(O(1,-2))").to_string() == "O(-1,2)");
    CHECK(parse_bundle("conj(O(1)+nu)").to_string() == "O(-1)+conj(nu)");
    CHECK_THROWS_AS(parse_bundle("O()"), ParseError);
    CHECK_THROWS_AS(parse_bundle("taunu"), ParseError);
    CHECK_THROWS_AS(parse_bundle("O(1)+"), ParseError);
}

TEST_CASE("parse then print then parse is the identity on canonical forms") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> nd(0, 4), rd(1, 3), dd(-2, 2), kind(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        // manifold
        int r = rd(rng);
        std::vector<int> dims;
        for (int i = 0; i < r; ++i) dims.push_back(nd(rng));
        geom::ProjProduct m(dims);
        CHECK(parse_manifold(m.to_string()).dims == m.dims);

        // bundle
        geom::Bundle b;
        int parts = rd(rng);
        for (int i = 0; i < parts; ++i) {
            switch (kind(rng)) {
                case 0: {
                    std::vector<int> deg;
                    for (int j = 0; j < r; ++j) deg.push_back(dd(rng));
                    b = b + geom::Bundle::line(deg);
                    break;
                }
                case 1: b = b + geom::Bundle::tau(); break;
                case 2: b = b + geom::Bundle::nu(); break;
                default: b = b + geom::Bundle::tau().conjugate(); break;
            }
        }
        auto reparsed = parse_bundle(b.to_string());
        CHECK(reparsed.to_string() == b.to_string());
    }
    // partitions print canonically
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : symfunc::partitions_of(n)) CHECK(parse_partition(lam.to_string()) == lam);
}
