#include "bkp/tau.hpp"

#include <stdexcept>
#include <string>

#include "bkp/wops.hpp"

namespace bkp {

Rat content_factor(const Rat& c, int m) {
    Rat odd = 2 * m - 1;
    return (odd * odd - 4 * c * c) / 4;
}

void validate_weights(const WeightData& weights, int cutoff) {
    for (size_t j = 0; j < weights.denom_params.size(); ++j) {
        for (int m = 1; m <= cutoff; ++m) {
            if (content_factor(weights.denom_params[j], m) == 0)
                throw std::invalid_argument("denominator content vanishes at parameter " +
                                            std::to_string(j + 1) + ", m=" + std::to_string(m));
        }
    }
}

Rat content_product(const WeightData& weights, const StrictPartition& lambda) {
    Rat r = 1;
    for (int part : lambda.parts()) {
        for (int m = 1; m <= part; ++m) {
            for (const Rat& u : weights.numer_params) r *= content_factor(u, m);
            for (const Rat& w : weights.denom_params) {
                Rat f = content_factor(w, m);
                if (f == 0) throw std::invalid_argument("denominator content vanishes");
                r /= f;
            }
        }
    }
    return r;
}

namespace {

void check_s_indices(const std::map<int, Rat>& s) {
    for (const auto& [k, v] : s)
        if (k <= 0 || k % 2 == 0)
            throw std::invalid_argument("s indices must be odd and positive");
}

}  // namespace

GradedSeries hypergeometric_tau(const TauSpec& spec) {
    validate_weights(spec.weights, spec.cutoff);
    check_s_indices(spec.s_values);
    if (spec.formal_s) {
        int d = std::min(spec.cutoff, spec.s_cutoff);
        GradedSeries r(Alphabet::TxS, spec.cutoff, spec.s_cutoff);
        for (const auto& lambda : enumerate_strict_upto(d)) {
            Rat c = rat_pow(Rat(1, 2), lambda.length()) * content_product(spec.weights, lambda);
            auto qt = q_lambda_half(lambda, lambda.size());
            for (const auto& [kt, ct] : qt.terms())
                for (const auto& [ks, cs] : qt.terms()) r.add_term(kt.first, ks.first, c * ct * cs);
        }
        return r;
    }
    GradedSeries r(Alphabet::T, spec.cutoff);
    for (const auto& lambda : enumerate_strict_upto(spec.cutoff)) {
        Rat qs = specialize(q_lambda_half(lambda, lambda.size()), spec.s_values);
        if (qs == 0) continue;
        Rat c = rat_pow(Rat(1, 2), lambda.length()) * content_product(spec.weights, lambda) * qs;
        r = r + q_lambda_half(lambda, spec.cutoff) * c;
    }
    return r;
}

GradedSeries bgw_tau(const Rat& N, const Rat& hbar, int D) {
    TauSpec spec;
    spec.weights.numer_params = {N};
    spec.s_values = {{1, hbar / 2}};
    spec.hbar = hbar;
    spec.cutoff = D;
    return hypergeometric_tau(spec);
}

namespace {

// exp(A) . 1 for a weight-raising operator by graded iteration; terminates
// because every application raises weight by at least 1.
GradedSeries exp_apply_to_one(const DOperator& a, int D) {
    GradedSeries acc = GradedSeries::constant(Rat(1), Alphabet::T, D);
    GradedSeries term = acc;
    for (int j = 1; !term.is_zero(); ++j) {
        term = apply(a, term) * Rat(1, j);
        acc = acc + term;
    }
    return acc;
}

Poly bare_symbol_poly(const std::vector<Rat>& params) {
    // prod ((x - 1/2)^2 - u^2)
    Poly r = Poly::constant(Rat(1));
    for (const Rat& u : params) {
        Poly lin({Rat(-1, 2), Rat(1)});
        r = r * (lin * lin - Poly::constant(u * u));
    }
    return r;
}

}  // namespace

GradedSeries bgw_cutjoin(const Rat& N, const Rat& hbar, int D) {
    DOperator a = (W_km_closed(-1, 2, D) * Rat(1, 4) + J_op(-1) * (Rat(1, 16) - N * N / 4)) * hbar;
    return exp_apply_to_one(a, D);
}

namespace {

GradedSeries cutjoin_tspace(const TauSpec& spec) {
    if (!spec.weights.denom_params.empty())
        throw std::invalid_argument("t-space strategy requires b = 0");
    const int D = spec.cutoff;
    ZDSymbol w = ZDSymbol::monomial(-1, bare_symbol_poly(spec.weights.numer_params));
    DOperator a(D);
    ZDSymbol wk;  // w^k, built incrementally over odd k
    int built = 0;
    for (const auto& [k, sk] : spec.s_values) {
        if (sk == 0) continue;
        while (built < k) {
            wk = built == 0 ? w : wk * w;
            ++built;
        }
        a = a + W_of_symbol(wk, D) * (-sk);
    }
    return exp_apply_to_one(a, D);
}

GradedSeries cutjoin_qbasis(const TauSpec& spec) {
    const int D = spec.cutoff;
    std::map<StrictPartition, Rat> content;
    for (const auto& lambda : enumerate_strict_upto(D)) {
        Rat r = content_product(spec.weights, lambda);
        if (r == 0)
            throw std::invalid_argument(
                "vanishing content product: q-basis strategy needs an invertible diagonal");
        content.emplace(lambda, r);
    }
    auto apply_a = [&](const QExpansion& e) {
        QExpansion out;
        out.cutoff = D;
        for (const auto& [k, sk] : spec.s_values) {
            if (sk == 0) continue;
            for (const auto& [lambda, c] : e.coeffs) {
                if (lambda.size() + k > D) continue;
                Rat base = sk * Rat(k, 2) * c / content.at(lambda);
                auto prod = to_qbasis(q_lambda_half(lambda, lambda.size() + k) *
                                      GradedSeries::variable(k, lambda.size() + k));
                for (const auto& [mu, d] : prod.coeffs) out.add(mu, base * d * content.at(mu));
            }
        }
        return out;
    };
    QExpansion acc;
    acc.cutoff = D;
    acc.add(StrictPartition(std::vector<int>{}), Rat(1));
    QExpansion term = acc;
    for (int j = 1; !term.coeffs.empty(); ++j) {
        term = apply_a(term);
        for (auto& [mu, c] : term.coeffs) c /= j;
        for (const auto& [mu, c] : term.coeffs) acc.add(mu, c);
    }
    return from_qbasis(acc, D);
}

}  // namespace

GradedSeries cutjoin_tau(const TauSpec& spec, CutjoinStrategy strategy) {
    validate_weights(spec.weights, spec.cutoff);
    check_s_indices(spec.s_values);
    if (spec.formal_s) throw std::invalid_argument("cut-and-join requires specialized s");
    return strategy == CutjoinStrategy::TSpace ? cutjoin_tspace(spec) : cutjoin_qbasis(spec);
}

RecursionReport degree_recursion_check(const TauSpec& spec) {
    if (!spec.weights.denom_params.empty())
        throw std::invalid_argument("recursion check requires b = 0");
    for (const auto& [k, v] : spec.s_values)
        if (k != 1 && v != 0) throw std::invalid_argument("recursion check requires s = s_1 only");
    Rat s1 = spec.s_values.count(1) ? spec.s_values.at(1) : Rat(0);
    const int D = spec.cutoff;
    GradedSeries tau = hypergeometric_tau(spec);
    DOperator w = W_of_symbol(ZDSymbol::monomial(-1, bare_symbol_poly(spec.weights.numer_params)), D);
    RecursionReport rep;
    for (int k = 1; k <= D; ++k) {
        GradedSeries lhs = tau.weight_part(k);
        GradedSeries rhs = apply(w, tau.weight_part(k - 1)) * (-s1 / k);
        if (lhs != rhs) {
            rep.pass = false;
            rep.failed_weight = k;
            return rep;
        }
    }
    return rep;
}

LaurentWindow wave_function(const GradedSeries& tau, int K) {
    if (tau.alphabet() != Alphabet::T)
        throw std::invalid_argument("wave_function expects a series in the t alphabet");
    if (K > tau.cutoff())
        throw std::invalid_argument("window exceeds the trusted cutoff of the tau-function");
    MiwaShifted m = miwa_shift(tau, Rat(-2), tau.cutoff());
    LaurentWindow w;
    w.zmin = -K;
    w.zmax = 0;
    for (const auto& [p, series] : m.coeffs)
        if (p >= -K) w.set(p, series.constant_term());
    return w;
}

std::map<std::pair<StrictPartition, StrictPartition>, Rat> hurwitz_table(const TauSpec& spec) {
    if (!spec.formal_s) throw std::invalid_argument("hurwitz_table requires formal s");
    GradedSeries f = hypergeometric_tau(spec);
    // split by s-monomial, expand the t side, regroup, expand the s side
    std::map<OddMonomial, GradedSeries> by_s;
    for (const auto& [key, c] : f.terms()) {
        auto it = by_s.find(key.second);
        if (it == by_s.end())
            it = by_s.emplace(key.second, GradedSeries(Alphabet::T, spec.cutoff)).first;
        it->second.add_term(key.first, c);
    }
    std::map<StrictPartition, GradedSeries> by_lambda;
    for (const auto& [smono, series] : by_s) {
        for (const auto& [lambda, c] : to_qbasis(series).coeffs) {
            auto it = by_lambda.find(lambda);
            if (it == by_lambda.end())
                it = by_lambda.emplace(lambda, GradedSeries(Alphabet::T, spec.s_cutoff)).first;
            it->second.add_term(smono, c);
        }
    }
    std::map<std::pair<StrictPartition, StrictPartition>, Rat> table;
    for (const auto& [lambda, series] : by_lambda)
        for (const auto& [mu, c] : to_qbasis(series).coeffs) table[{lambda, mu}] = c;
    return table;
}

}  // namespace bkp
