#include "bkp/hirota.hpp"

#include <stdexcept>
#include <vector>

namespace bkp {

namespace {

// a(t) * b(t') as a joint series with the given cutoffs.
GradedSeries outer(const GradedSeries& a, const GradedSeries& b, int dt, int dts) {
    GradedSeries r(Alphabet::TxT2, dt, dts);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.first.weight() > dt) continue;
        for (const auto& [kb, cb] : b.terms()) r.add_term(ka.first, kb.first, ca * cb);
    }
    return r;
}

}  // namespace

GradedSeries hirota_residual(const GradedSeries& tau, int dt, int dts) {
    if (tau.alphabet() != Alphabet::T)
        throw std::invalid_argument("hirota_residual expects a series in the t alphabet");
    if (tau.cutoff() < dt + dts)
        throw std::invalid_argument("insufficient cutoff: need at least the sum of the bidegrees");
    const int zmax = dt + dts;

    // coefficients of e^{sum_k z^k (t_k - t'_k)} via the log-derivative
    // recursion n e_n = sum_k k x_k e_{n-k}, x_k = t_k - t'_k
    std::vector<GradedSeries> e(zmax + 1, GradedSeries(Alphabet::TxT2, dt, dts));
    e[0].add_term(OddMonomial{}, OddMonomial{}, Rat(1));
    for (int n = 1; n <= zmax; ++n) {
        for (int k = 1; k <= n; k += 2) {
            GradedSeries xk(Alphabet::TxT2, dt, dts);
            xk.add_term(OddMonomial::var(k), OddMonomial{}, Rat(1));
            xk.add_term(OddMonomial{}, OddMonomial::var(k), Rat(-1));
            e[n] = e[n] + e[n - k] * xk * Rat(k);
        }
        e[n] = e[n] * Rat(1, n);
    }

    MiwaShifted minus = miwa_shift(tau, Rat(-2), tau.cutoff());
    MiwaShifted plus = miwa_shift(tau, Rat(2), tau.cutoff());

    GradedSeries r(Alphabet::TxT2, dt, dts);
    for (int a = 0; a <= zmax; ++a) {
        // z^{-a} coefficient of the product of the two shifted factors
        for (int i = 0; i <= a; ++i) {
            auto it1 = minus.coeffs.find(-i);
            if (it1 == minus.coeffs.end()) continue;
            auto it2 = plus.coeffs.find(-(a - i));
            if (it2 == plus.coeffs.end()) continue;
            r = r + e[a] * outer(it1->second, it2->second, dt, dts);
        }
    }
    return r - outer(tau, tau, dt, dts);
}

HirotaVerdict is_bkp_tau(const GradedSeries& tau, int dt, int dts) {
    GradedSeries res = hirota_residual(tau, dt, dts);
    HirotaVerdict v;
    v.dt = dt;
    v.dts = dts;
    v.pass = res.is_zero();
    if (!v.pass) {
        const auto& [key, c] = *res.terms().begin();
        v.witness_t = key.first;
        v.witness_ts = key.second;
        v.value = c;
    }
    return v;
}

}  // namespace bkp
