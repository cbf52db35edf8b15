#include "bkp/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "bkp/tau.hpp"
#include "bkp/wops.hpp"

namespace bkp {

Rat RatFun::eval(const Rat& n) const {
    Rat d = den.eval(n);
    if (d == 0) throw std::domain_error("eigenvalue pole at exponent " + rat_to_string(n));
    return num.eval(n) / d;
}

LaurentEndo LaurentEndo::zpow_ratfun(int j, RatFun r) {
    LaurentEndo e;
    e.add_term(j, std::move(r));
    return e;
}

LaurentEndo LaurentEndo::identity() { return zpow_ratfun(0, RatFun{}); }

LaurentEndo LaurentEndo::d_by_dz() { return zpow_ratfun(-1, RatFun::poly(Poly::x())); }

int LaurentEndo::max_shift() const {
    int s = terms_.empty() ? 0 : terms_.front().first;
    for (const auto& [j, r] : terms_) s = std::max(s, j);
    return s;
}

int LaurentEndo::min_shift() const {
    int s = terms_.empty() ? 0 : terms_.front().first;
    for (const auto& [j, r] : terms_) s = std::min(s, j);
    return s;
}

LaurentEndo LaurentEndo::operator+(const LaurentEndo& o) const {
    LaurentEndo r = *this;
    for (const auto& [j, f] : o.terms_) r.add_term(j, f);
    return r;
}

LaurentEndo LaurentEndo::operator-(const LaurentEndo& o) const { return *this + o * Rat(-1); }

LaurentEndo LaurentEndo::operator*(const LaurentEndo& o) const {
    // (z^i P(D))(z^j Q(D)) = z^{i+j} P(D+j) Q(D)
    LaurentEndo r;
    for (const auto& [i, p] : terms_)
        for (const auto& [j, q] : o.terms_) r.add_term(i + j, p.shifted(Rat(j)).times(q));
    return r;
}

LaurentEndo LaurentEndo::operator*(const Rat& c) const {
    LaurentEndo r = *this;
    for (auto& [j, f] : r.terms_) f.num = f.num * c;
    return r;
}

LaurentWindow LaurentEndo::apply(const LaurentWindow& f) const {
    LaurentWindow out;
    int jmax = max_shift();
    out.zmin = f.zmin + jmax;
    out.zmax = f.zmax + jmax;
    for (const auto& [j, r] : terms_) {
        for (const auto& [n, c] : f.coeffs) {
            Rat v = r.eval(Rat(n)) * c;
            if (n + j >= out.zmin) out.set(n + j, out.coeff(n + j) + v);
        }
    }
    return out;
}

bool endo_agree(const LaurentEndo& a, const LaurentEndo& b, int nmin, int nmax) {
    for (int n = nmin; n <= nmax; ++n) {
        std::map<int, Rat> va, vb;
        for (const auto& [j, r] : a.terms()) va[j] += r.eval(Rat(n));
        for (const auto& [j, r] : b.terms()) vb[j] += r.eval(Rat(n));
        std::erase_if(va, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(vb, [](const auto& kv) { return kv.second == 0; });
        if (va != vb) return false;
    }
    return true;
}

Rat gamma_ratio(const Rat& x, int m) {
    Rat r = 1;
    for (int i = 1; i <= m; ++i) r *= x - i;
    return r;
}

namespace {

// R_m = prod_b ((D+1/2-m)^2 - w^2) / prod_a ((D+1/2-m)^2 - u^2)
RatFun r_fun(const WeightData& wd, int m) {
    Poly lin({Rat(1, 2) - m, Rat(1)});
    Poly sq = lin * lin;
    RatFun r;
    for (const Rat& w : wd.denom_params) r.num = r.num * (sq - Poly::constant(w * w));
    for (const Rat& u : wd.numer_params) r.den = r.den * (sq - Poly::constant(u * u));
    return r;
}

void check_s(const std::map<int, Rat>& s) {
    for (const auto& [k, v] : s)
        if (k <= 0 || k % 2 == 0)
            throw std::invalid_argument("s indices must be odd and positive");
}

}  // namespace

LaurentWindow grassmannian_basis(const WeightData& weights, const std::map<int, Rat>& s, int k,
                                 int K) {
    if (k <= 0) throw std::invalid_argument("basis index must be positive");
    check_s(s);
    // coefficients of e^{-sum_j s_j z^{-j}} indexed by m in z^{-m}, m <= K
    std::vector<Rat> f(K + 1, Rat(0));
    f[0] = 1;
    for (const auto& [j, sj] : s) {
        if (sj == 0) continue;
        std::vector<Rat> g(K + 1, Rat(0));
        Rat power = 1;  // (-sj)^i / i!
        for (int i = 0; i * j <= K; ++i) {
            for (int m = 0; m + i * j <= K; ++m) g[m + i * j] += f[m] * power;
            power *= -sj / (i + 1);
        }
        f = std::move(g);
    }
    LaurentWindow out;
    out.zmax = k - 1;
    out.zmin = k - 1 - K;
    for (int m = 0; m <= K; ++m) {
        Rat ratio = f[m];
        Rat half = Rat(2 * k - 1, 2);
        for (const Rat& u : weights.numer_params)
            ratio *= gamma_ratio(half + u, m) * gamma_ratio(half - u, m);
        for (const Rat& w : weights.denom_params) {
            Rat d = gamma_ratio(half + w, m) * gamma_ratio(half - w, m);
            if (d == 0) throw std::domain_error("diagonal eigenvalue pole on the window");
            ratio /= d;
        }
        out.set(k - 1 - m, ratio);
    }
    return out;
}

LaurentEndo ks_q(const WeightData& weights, const std::map<int, Rat>& s) {
    check_s(s);
    return LaurentEndo::zpow_ratfun(1, r_fun(weights, 0));
}

LaurentEndo ks_p(const WeightData& weights, const std::map<int, Rat>& s) {
    check_s(s);
    // R_0^{-1} d/dz = z^{-1} R_0^{-1}(D-1) D
    LaurentEndo r = LaurentEndo::zpow_ratfun(
        -1, r_fun(weights, 0).inverse().shifted(Rat(-1)).times(RatFun::poly(Poly::x())));
    for (const auto& [k, sk] : s) {
        if (sk == 0) continue;
        RatFun prod;
        for (int m = 1; m <= k + 1; ++m) prod = prod.times(r_fun(weights, m).inverse());
        prod.num = prod.num * (Rat(-k) * sk);
        r = r + LaurentEndo::zpow_ratfun(-k - 1, prod);
    }
    return r;
}

LaurentEndo ks_c(const WeightData& weights, const std::map<int, Rat>& s) {
    check_s(s);
    LaurentEndo r = LaurentEndo::zpow_ratfun(0, RatFun::poly(Poly::x()));
    for (const auto& [k, sk] : s) {
        if (sk == 0) continue;
        RatFun prod;
        for (int m = 1; m <= k; ++m) prod = prod.times(r_fun(weights, m).inverse());
        prod.num = prod.num * (Rat(-k) * sk);
        r = r + LaurentEndo::zpow_ratfun(-k, prod);
    }
    return r;
}

LaurentEndo qsc_operator(const WeightData& weights, const std::map<int, Rat>& s) {
    check_s(s);
    int ell = 0;
    for (const auto& [k, sk] : s)
        if (sk != 0) ell = std::max(ell, k);
    auto w_factor = [&](int r) {  // prod_b ((D+r-1/2)^2 - w^2)
        Poly lin({Rat(2 * r - 1, 2), Rat(1)});
        Poly sq = lin * lin;
        Poly p = Poly::constant(Rat(1));
        for (const Rat& w : weights.denom_params) p = p * (sq - Poly::constant(w * w));
        return p;
    };
    auto u_factor = [&](int m) {  // prod_a ((D-m-1/2)^2 - u^2)
        Poly lin({Rat(-2 * m - 1, 2), Rat(1)});
        Poly sq = lin * lin;
        Poly p = Poly::constant(Rat(1));
        for (const Rat& u : weights.numer_params) p = p * (sq - Poly::constant(u * u));
        return p;
    };
    Poly kpoly = Poly::constant(Rat(1));
    for (int r = 1; r <= ell; ++r) kpoly = kpoly * w_factor(r);
    LaurentEndo a = LaurentEndo::zpow_ratfun(0, RatFun::poly(Poly::x() * kpoly));
    for (const auto& [k, sk] : s) {
        if (sk == 0) continue;
        Poly p = Poly::constant(Rat(-k) * sk);
        for (int r = 1; r <= ell - k; ++r) p = p * w_factor(r);
        for (int m = 0; m <= k - 1; ++m) p = p * u_factor(m);
        a = a + LaurentEndo::zpow_ratfun(-k, RatFun::poly(std::move(p)));
    }
    return a;
}

SpectralVerdict annihilation_check(const LaurentEndo& a, const LaurentWindow& psi) {
    SpectralVerdict v;
    LaurentWindow out = a.apply(psi);
    v.window_lo = out.zmin;
    v.window_hi = out.zmax;
    if (out.zmin > out.zmax) {
        v.status = CheckStatus::Inconclusive;
        return v;
    }
    for (int n = out.zmin; n <= out.zmax; ++n) {
        if (out.coeff(n) != 0) {
            v.status = CheckStatus::Fail;
            v.witness_power = n;
            v.witness_value = out.coeff(n);
            return v;
        }
    }
    v.status = CheckStatus::Pass;
    return v;
}

SpectralVerdict in_span_check(const LaurentWindow& g, const std::vector<LaurentWindow>& basis) {
    // basis[i] is Phi_{i+1} = z^i (1 + O(z^{-1}))
    SpectralVerdict v;
    LaurentWindow rem = g;
    int lo = g.zmin;
    v.window_hi = g.zmax;
    for (int n = g.zmax; n >= lo; --n) {
        Rat c = rem.coeff(n);
        if (c == 0) continue;
        if (n < 0) {
            v.status = CheckStatus::Fail;
            v.witness_power = n;
            v.witness_value = c;
            v.window_lo = lo;
            return v;
        }
        if (n >= static_cast<int>(basis.size())) {
            v.status = CheckStatus::Inconclusive;
            v.window_lo = lo;
            return v;
        }
        const LaurentWindow& phi = basis[n];
        lo = std::max(lo, phi.zmin);
        if (n < lo) break;
        for (const auto& [m, d] : phi.coeffs)
            if (m >= lo) rem.set(m, rem.coeff(m) - c * d);
    }
    v.status = CheckStatus::Pass;
    v.window_lo = lo;
    return v;
}

SpectralVerdict ks_invariance_check(const WeightData& weights, const std::map<int, Rat>& s,
                                    int k_max, int K) {
    LaurentEndo q = ks_q(weights, s);
    LaurentEndo p = ks_p(weights, s);
    int top = k_max + std::max({q.max_shift(), p.max_shift(), 0}) + 1;
    std::vector<LaurentWindow> basis;
    for (int k = 1; k <= top; ++k) basis.push_back(grassmannian_basis(weights, s, k, K));
    for (int k = 1; k <= k_max; ++k) {
        for (const LaurentEndo* op : {&q, &p}) {
            SpectralVerdict v = in_span_check(op->apply(basis[k - 1]), basis);
            if (v.status != CheckStatus::Pass) return v;
        }
    }
    SpectralVerdict v;
    v.status = CheckStatus::Pass;
    v.window_lo = -K;
    v.window_hi = top - 1;
    return v;
}

ConstraintVerdict constraint_check_bgw_perturbed(const Rat& N, const Rat& hbar, int D,
                                                 const Rat& coeff_w12) {
    GradedSeries tau = bgw_tau(N, hbar, D);
    DOperator op = W_km_closed(0, 1, D) * Rat(-1, 2) + W_km_closed(-1, 2, D) * coeff_w12 +
                   J_op(-1) * (hbar * (Rat(1, 16) - N * N / 4));
    GradedSeries out = apply(op, tau);
    ConstraintVerdict v;
    v.checked_weight = D - 1;
    v.pass = out.truncated(D - 1).is_zero();
    return v;
}

ConstraintVerdict constraint_check_bgw(const Rat& N, const Rat& hbar, int D) {
    return constraint_check_bgw_perturbed(N, hbar, D, hbar / 4);
}

}  // namespace bkp
