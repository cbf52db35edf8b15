#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkp/partition.hpp"

using namespace bkp;

namespace {

// Independent count of partitions into distinct parts from the Euler product
// prod_{k>=1} (1 + x^k).
std::vector<long> distinct_part_counts(int max_weight) {
    std::vector<long> c(max_weight + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= max_weight; ++k)
        for (int w = max_weight; w >= k; --w) c[w] += c[w - k];
    return c;
}

}  // namespace

TEST_CASE("enumerate_strict small cases") {
    auto p0 = enumerate_strict(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(p0[0].size() == 0);
    CHECK(p0[0].length() == 0);

    auto p5 = enumerate_strict(5);
    REQUIRE(p5.size() == 3);
    CHECK(p5[0].parts() == std::vector<int>{5});
    CHECK(p5[1].parts() == std::vector<int>{4, 1});
    CHECK(p5[2].parts() == std::vector<int>{3, 2});

    auto p6 = enumerate_strict(6);
    REQUIRE(p6.size() == 4);
    CHECK(p6[0].parts() == std::vector<int>{6});
    CHECK(p6[1].parts() == std::vector<int>{5, 1});
    CHECK(p6[2].parts() == std::vector<int>{4, 2});
    CHECK(p6[3].parts() == std::vector<int>{3, 2, 1});
}

TEST_CASE("enumerate_strict_upto") {
    auto u1 = enumerate_strict_upto(1);
    REQUIRE(u1.size() == 2);
    CHECK(u1[0].empty());
    CHECK(u1[1].parts() == std::vector<int>{1});

    auto u3 = enumerate_strict_upto(3);
    REQUIRE(u3.size() == 5);
    CHECK(u3[4].parts() == std::vector<int>{2, 1});

    auto u2 = enumerate_strict_upto(2);
    REQUIRE(u2.size() == 3);  // (1,1) excluded
}

TEST_CASE("counts match Euler generating function, parts valid") {
    auto counts = distinct_part_counts(20);
    for (int w = 0; w <= 20; ++w) {
        auto ps = enumerate_strict(w);
        CHECK(static_cast<long>(ps.size()) == counts[w]);
        for (const auto& p : ps) {
            CHECK(p.size() == w);
            const auto& parts = p.parts();
            for (size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i] > parts[i + 1]);
            if (!parts.empty()) CHECK(parts.back() > 0);
        }
        // ordering is strictly increasing in the decreasing-lex order
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] < ps[i + 1]);
    }
}

TEST_CASE("invalid partitions rejected") {
    CHECK_THROWS(StrictPartition({1, 1}));
    CHECK_THROWS(StrictPartition({2, 3}));
    CHECK_THROWS(StrictPartition({0}));
    CHECK_THROWS(StrictPartition({-1}));
}
