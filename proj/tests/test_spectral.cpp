#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkp/spectral.hpp"
#include "bkp/tau.hpp"

using namespace bkp;

namespace {

WeightData bgw_weights(const Rat& N) { return WeightData{{N}, {}}; }

std::map<int, Rat> s_bgw(const Rat& hbar) { return {{1, hbar / 2}}; }

TauSpec mono_spec(const Rat& w, const Rat& hbar, int D) {
    TauSpec s;
    s.weights.denom_params = {w};
    s.s_values = {{1, hbar / 2}};
    s.hbar = hbar;
    s.cutoff = D;
    return s;
}

}  // namespace

TEST_CASE("gamma ratios") {
    CHECK(gamma_ratio(Rat(1, 2), 1) == Rat(-1, 2));
    CHECK(gamma_ratio(Rat(7), 0) == 1);
    CHECK(gamma_ratio(Rat(5, 2), 2) == Rat(3, 4));
}

TEST_CASE("trivial basis") {
    for (int k : {1, 2, 4}) {
        auto phi = grassmannian_basis(WeightData{}, {}, k, 6);
        CHECK(phi.coeff(k - 1) == 1);
        for (int n = k - 7; n < k - 1; ++n) CHECK(phi.coeff(n) == 0);
    }
}

TEST_CASE("basis matches wave function") {
    for (const Rat& h : {Rat(1), Rat(2, 3)}) {
        auto phi = grassmannian_basis(bgw_weights(Rat(0)), s_bgw(h), 1, 8);
        CHECK(phi.coeff(-1) == -h / 8);
        CHECK(phi == wave_function(bgw_tau(Rat(0), h, 8), 8));
    }
    auto phi = grassmannian_basis(bgw_weights(Rat(1, 3)), s_bgw(Rat(1)), 1, 8);
    CHECK(phi == wave_function(bgw_tau(Rat(1, 3), Rat(1), 8), 8));

    auto spec = mono_spec(Rat(1, 3), Rat(1), 8);
    auto psi = wave_function(hypergeometric_tau(spec), 8);
    CHECK(grassmannian_basis(spec.weights, spec.s_values, 1, 8) == psi);
}

TEST_CASE("second basis vector spot value") {
    // m=1 term of the k=2 vector: -(hbar/2)(1/4 - N^2) at z^0
    for (const Rat& N : {Rat(0), Rat(1, 3)}) {
        auto phi = grassmannian_basis(bgw_weights(N), s_bgw(Rat(1)), 2, 6);
        CHECK(phi.coeff(1) == 1);
        CHECK(phi.coeff(0) == -(Rat(1, 4) - N * N) / 2);
    }
}

TEST_CASE("canonical commutation relation") {
    auto check_pq = [](const WeightData& w, const std::map<int, Rat>& s) {
        auto p = ks_p(w, s);
        auto q = ks_q(w, s);
        CHECK(endo_agree(p * q - q * p, LaurentEndo::identity(), -6, 10));
    };
    check_pq(WeightData{}, {});
    check_pq(bgw_weights(Rat(0)), s_bgw(Rat(1)));
    check_pq(bgw_weights(Rat(1, 3)), s_bgw(Rat(2, 3)));
    check_pq(WeightData{{}, {Rat(1, 3)}}, s_bgw(Rat(1)));
    check_pq(WeightData{{Rat(1, 5)}, {Rat(1, 3)}}, {{1, Rat(1, 2)}, {3, Rat(1, 7)}});
}

TEST_CASE("quantum spectral curve forms") {
    // BGW: A == c == D - (hbar/2) z^{-1} ((D-1/2)^2 - N^2)
    Rat N(1, 3), h(1);
    auto a = qsc_operator(bgw_weights(N), s_bgw(h));
    CHECK(endo_agree(a, ks_c(bgw_weights(N), s_bgw(h)), -6, 10));
    Poly lin({Rat(-1, 2), Rat(1)});
    auto manual = LaurentEndo::zpow_ratfun(0, RatFun::poly(Poly::x())) +
                  LaurentEndo::zpow_ratfun(
                      -1, RatFun::poly((lin * lin - Poly::constant(N * N)) * (-h / 2)));
    CHECK(endo_agree(a, manual, -6, 10));

    // a=0, b=1: A = K c = ((D+1/2)^2 - w^2) D - (hbar/2) z^{-1}
    Rat w(1, 3);
    WeightData mono{{}, {w}};
    auto a3 = qsc_operator(mono, s_bgw(h));
    Poly linp({Rat(1, 2), Rat(1)});
    Poly kpoly = linp * linp - Poly::constant(w * w);
    auto manual3 = LaurentEndo::zpow_ratfun(0, RatFun::poly(Poly::x() * kpoly)) +
                   LaurentEndo::zpow_ratfun(-1, RatFun::poly(Poly::constant(-h / 2)));
    CHECK(endo_agree(a3, manual3, -6, 10));
    auto kc = LaurentEndo::zpow_ratfun(0, RatFun::poly(kpoly)) * ks_c(mono, s_bgw(h));
    CHECK(endo_agree(a3, kc, -6, 10));
}

TEST_CASE("annihilation of the wave function") {
    // trivial weights: A = D - (hbar/2) z^{-1} annihilates e^{-hbar/(2z)}
    Rat h(2, 3);
    LaurentWindow expz;
    expz.zmax = 0;
    expz.zmin = -8;
    for (int m = 0; m <= 8; ++m) expz.set(-m, rat_pow(-h / 2, m) / factorial(m));
    auto v0 = annihilation_check(qsc_operator(WeightData{}, s_bgw(h)), expz);
    CHECK(v0.status == CheckStatus::Pass);

    auto psi = wave_function(bgw_tau(Rat(0), Rat(1), 12), 12);
    auto v = annihilation_check(qsc_operator(bgw_weights(Rat(0)), s_bgw(Rat(1))), psi);
    CHECK(v.status == CheckStatus::Pass);
    CHECK(v.window_lo <= -10);

    auto spec = mono_spec(Rat(1, 3), Rat(1), 12);
    auto psi3 = wave_function(hypergeometric_tau(spec), 12);
    auto v3 = annihilation_check(qsc_operator(spec.weights, spec.s_values), psi3);
    CHECK(v3.status == CheckStatus::Pass);
    CHECK(v3.window_lo <= -10);
    // the Kac-Schwarz c operator annihilates it too
    auto vc = annihilation_check(ks_c(spec.weights, spec.s_values), psi3);
    CHECK(vc.status == CheckStatus::Pass);

    // corrupt one coefficient
    LaurentWindow badpsi = psi;
    badpsi.set(-3, badpsi.coeff(-3) + 1);
    auto vb = annihilation_check(qsc_operator(bgw_weights(Rat(0)), s_bgw(Rat(1))), badpsi);
    CHECK(vb.status == CheckStatus::Fail);
    CHECK(vb.witness_value != 0);
}

TEST_CASE("inconclusive on an empty window") {
    LaurentWindow tiny;
    tiny.zmin = 1;
    tiny.zmax = 0;
    auto v = annihilation_check(LaurentEndo::identity(), tiny);
    CHECK(v.status == CheckStatus::Inconclusive);
}

TEST_CASE("Kac-Schwarz invariance") {
    CHECK(ks_invariance_check(WeightData{}, {}, 3, 8).status == CheckStatus::Pass);
    CHECK(ks_invariance_check(bgw_weights(Rat(0)), s_bgw(Rat(1)), 4, 10).status ==
          CheckStatus::Pass);
    CHECK(ks_invariance_check(bgw_weights(Rat(1, 3)), s_bgw(Rat(2, 3)), 3, 10).status ==
          CheckStatus::Pass);
    CHECK(ks_invariance_check(WeightData{{}, {Rat(1, 3)}}, s_bgw(Rat(1)), 3, 10).status ==
          CheckStatus::Pass);

    // corrupted basis vector
    auto w = bgw_weights(Rat(0));
    auto s = s_bgw(Rat(1));
    std::vector<LaurentWindow> basis;
    for (int k = 1; k <= 4; ++k) basis.push_back(grassmannian_basis(w, s, k, 8));
    basis[1].set(-2, basis[1].coeff(-2) + 1);
    auto g = ks_q(w, s).apply(basis[0]);
    CHECK(in_span_check(g, basis).status == CheckStatus::Fail);
}

TEST_CASE("cut-and-join constraint") {
    for (const Rat& N : {Rat(0), Rat(1, 3), Rat(3, 2)}) {
        for (const Rat& h : {Rat(1), Rat(2, 3)}) {
            auto v = constraint_check_bgw(N, h, 6);
            CHECK(v.pass);
            CHECK(v.checked_weight == 5);
        }
    }
    CHECK_FALSE(constraint_check_bgw_perturbed(Rat(0), Rat(1), 6, Rat(1, 3)).pass);
}
