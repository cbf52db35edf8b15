#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bkp/qschur.hpp"

using namespace bkp;

namespace {

GradedSeries t(int k, int cutoff) { return GradedSeries::variable(k, cutoff); }

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

}  // namespace

TEST_CASE("one_row_q") {
    CHECK(one_row_q(0, 4) == GradedSeries::constant(Rat(1), Alphabet::T, 4));
    CHECK(one_row_q(1, 4) == t(1, 4) * Rat(2));
    auto q3 = one_row_q(3, 4);
    CHECK(q3.coefficient(OddMonomial::var(3)) == 2);
    CHECK(q3.coefficient(OddMonomial::var(1, 3)) == Rat(4, 3));
    CHECK(q3.terms().size() == 2);
}

TEST_CASE("q_lambda small cases") {
    CHECK(q_lambda(sp({}), 4) == GradedSeries::constant(Rat(1), Alphabet::T, 4));
    CHECK(q_lambda(sp({2}), 4) == t(1, 4) * t(1, 4) * Rat(2));
    auto q21 = q_lambda(sp({2, 1}), 4);
    CHECK(q21.coefficient(OddMonomial::var(1, 3)) == Rat(4, 3));
    CHECK(q21.coefficient(OddMonomial::var(3)) == -4);
    CHECK(q21.terms().size() == 2);
}

TEST_CASE("homogeneity") {
    for (const auto& p : enumerate_strict_upto(8)) {
        auto q = q_lambda(p, 8);
        for (const auto& [key, c] : q.terms()) CHECK(key.first.weight() == p.size());
    }
}

TEST_CASE("hook formula vs direct evaluation") {
    CHECK(q_delta_hook(sp({1})) == 2);
    CHECK(q_delta_hook(sp({2, 1})) == Rat(4, 3));
    std::map<int, Rat> delta{{1, Rat(1)}};
    for (const auto& p : enumerate_strict_upto(12)) {
        CHECK(q_delta_hook(p) == specialize(q_lambda(p, p.size()), delta));
    }
}

TEST_CASE("Cauchy identity through joint weight 10") {
    const int D = 10;
    // lhs: sum over strict partitions of 2^{-l} Q_l(t) Q_l(s)
    GradedSeries lhs(Alphabet::TxS, D, D);
    for (const auto& p : enumerate_strict_upto(D)) {
        auto qt = q_lambda(p, D);
        GradedSeries qs(Alphabet::S, D);
        for (const auto& [key, c] : qt.terms()) qs.add_term(key.first, c);
        auto joint = promote_first(qt, Alphabet::TxS, D) * promote_second(qs, Alphabet::TxS, D);
        lhs = lhs + joint * rat_pow(Rat(1, 2), p.length());
    }
    // rhs: exp(2 sum k t_k s_k)
    GradedSeries arg(Alphabet::TxS, D, D);
    for (int k = 1; k <= D; k += 2)
        arg.add_term(OddMonomial::var(k), OddMonomial::var(k), Rat(2 * k));
    CHECK(lhs == exp_positive(arg));
}

TEST_CASE("to_qbasis basics") {
    auto e1 = to_qbasis(GradedSeries::constant(Rat(1), Alphabet::T, 4));
    REQUIRE(e1.coeffs.size() == 1);
    CHECK(e1.coeffs.at(sp({})) == 1);

    auto et = to_qbasis(t(1, 4));
    REQUIRE(et.coeffs.size() == 1);
    CHECK(et.coeffs.at(sp({1})) == 1);
}

TEST_CASE("from_qbasis") {
    QExpansion e;
    e.cutoff = 4;
    e.add(sp({}), Rat(1));
    CHECK(from_qbasis(e, 4) == GradedSeries::constant(Rat(1), Alphabet::T, 4));

    QExpansion e1;
    e1.cutoff = 4;
    e1.add(sp({1}), Rat(1));
    CHECK(from_qbasis(e1, 4) == t(1, 4));

    QExpansion e21;
    e21.cutoff = 4;
    e21.add(sp({2, 1}), Rat(3));
    CHECK(from_qbasis(e21, 4) == q_lambda_half(sp({2, 1}), 4) * Rat(3));
}

TEST_CASE("round trip on random sparse expansions") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto all = enumerate_strict_upto(8);
    for (int trial = 0; trial < 10; ++trial) {
        QExpansion e;
        e.cutoff = 8;
        for (const auto& p : all)
            if (rng() % 4 == 0) e.add(p, Rat(coeff(rng)));
        auto back = to_qbasis(from_qbasis(e, 8));
        CHECK(back.coeffs == e.coeffs);
    }
}

TEST_CASE("pieri_t1") {
    auto e0 = pieri_t1(sp({}), 4);
    REQUIRE(e0.coeffs.size() == 1);
    CHECK(e0.coeffs.at(sp({1})) == 1);

    auto e1 = pieri_t1(sp({1}), 4);
    REQUIRE(e1.coeffs.size() == 1);
    CHECK(e1.coeffs.at(sp({2})) == 2);

    // brute-force re-expansion oracle
    auto e21 = pieri_t1(sp({2, 1}), 6);
    auto direct = to_qbasis(q_lambda_half(sp({2, 1}), 4) * t(1, 4));
    CHECK(e21.coeffs == direct.coeffs);

    CHECK_THROWS(pieri_t1(sp({2, 1}), 3));
}

TEST_CASE("q_lambda rejects nothing but non-strict input upstream") {
    CHECK_THROWS(sp({3, 3}));
}
