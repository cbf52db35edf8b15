#include "bkp/wops.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace bkp {

void DOperator::add_term(const OddMonomial& creation, const OddMonomial& annihilation,
                         const Rat& c) {
    if (c == 0) return;
    Key key{creation, annihilation};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int DOperator::max_shift() const {
    if (terms_.empty()) return 0;
    int s = terms_.begin()->first.creation.weight() - terms_.begin()->first.annihilation.weight();
    for (const auto& [key, c] : terms_)
        s = std::max(s, key.creation.weight() - key.annihilation.weight());
    return s;
}

DOperator DOperator::operator+(const DOperator& o) const {
    DOperator r(std::min(window_, o.window_));
    for (const auto& [key, c] : terms_) r.add_term(key.creation, key.annihilation, c);
    for (const auto& [key, c] : o.terms_) r.add_term(key.creation, key.annihilation, c);
    return r;
}

DOperator DOperator::operator-(const DOperator& o) const { return *this + o * Rat(-1); }

DOperator DOperator::operator*(const Rat& c) const {
    DOperator r(window_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [key, v] : r.terms_) v *= c;
    return r;
}

DOperator DOperator::restricted(int w, int cre_bound) const {
    DOperator r(std::min(window_, w));
    for (const auto& [key, c] : terms_)
        if (key.annihilation.weight() <= w && key.creation.weight() <= cre_bound)
            r.add_term(key.creation, key.annihilation, c);
    return r;
}

GradedSeries apply(const DOperator& op, const GradedSeries& f, int out_cutoff) {
    if (f.cutoff() > op.window())
        throw std::invalid_argument("operator window too small for series cutoff");
    if (out_cutoff < 0) out_cutoff = f.cutoff();
    GradedSeries r(f.alphabet(), out_cutoff);
    if (is_joint(f.alphabet())) r = GradedSeries(f.alphabet(), out_cutoff, f.cutoff_second());
    for (const auto& [mono, v] : f.terms()) {
        for (const auto& [key, c] : op.terms()) {
            // differentiate, then multiply
            Rat factor = 1;
            bool vanishes = false;
            for (auto [k, b] : key.annihilation.factors()) {
                int e = mono.first.exponent_of(k);
                if (e < b) {
                    vanishes = true;
                    break;
                }
                factor *= falling(e, b);
            }
            if (vanishes) continue;
            OddMonomial reduced = mono.first;
            for (auto [k, b] : key.annihilation.factors())
                for (int i = 0; i < b; ++i) reduced = reduced.divide_var(k);
            r.add_term(reduced.times(key.creation), mono.second, v * c * factor);
        }
    }
    return r;
}

DOperator compose(const DOperator& a, const DOperator& b) {
    int window = std::min(b.window(), a.window() - b.max_shift());
    DOperator r(window);
    for (const auto& [kb, cb] : b.terms()) {
        for (const auto& [ka, ca] : a.terms()) {
            // normal order d^{annA} t^{creB}
            // variables where both act
            std::vector<std::tuple<int, int, int>> overlap;  // (k, a_k, c_k)
            for (auto [k, ak] : ka.annihilation.factors()) {
                int ck = kb.creation.exponent_of(k);
                if (ck > 0) overlap.emplace_back(k, ak, ck);
            }
            // recursive enumeration over contraction exponents per variable
            std::vector<int> gamma(overlap.size(), 0);
            auto emit = [&](const Rat& w) {
                OddMonomial cre = ka.creation;
                OddMonomial ann = kb.annihilation;
                // subtract gamma from creB and annA
                OddMonomial creB = kb.creation;
                OddMonomial annA = ka.annihilation;
                for (size_t i = 0; i < overlap.size(); ++i) {
                    auto [k, ak, ck] = overlap[i];
                    for (int j = 0; j < gamma[i]; ++j) {
                        creB = creB.divide_var(k);
                        annA = annA.divide_var(k);
                    }
                }
                r.add_term(cre.times(creB), ann.times(annA), ca * cb * w);
            };
            // iterate gamma lexicographically
            while (true) {
                Rat w = 1;
                for (size_t i = 0; i < overlap.size(); ++i) {
                    auto [k, ak, ck] = overlap[i];
                    int g = gamma[i];
                    // C(ak, g) * ck!/(ck-g)!
                    w *= factorial(ak) / (factorial(g) * factorial(ak - g));
                    w *= falling(ck, g);
                }
                emit(w);
                size_t i = 0;
                for (; i < overlap.size(); ++i) {
                    auto [k, ak, ck] = overlap[i];
                    if (gamma[i] < std::min(ak, ck)) {
                        ++gamma[i];
                        break;
                    }
                    gamma[i] = 0;
                }
                if (i == overlap.size()) break;
            }
        }
    }
    return r;
}

DOperator commutator(const DOperator& a, const DOperator& b) {
    return compose(a, b) - compose(b, a);
}

DOperator J_op(int k) {
    DOperator r;
    if (k == 0 || k % 2 == 0) return r;
    if (k > 0)
        r.add_term(OddMonomial{}, OddMonomial::var(k), Rat(2));
    else
        r.add_term(OddMonomial::var(-k), OddMonomial{}, Rat(-k));
    return r;
}

namespace {

struct Mode {
    OddMonomial mono;
    bool creation;
    Rat coeff;
    int weight;
};

Mode j_factor(int index) {
    // J_m for m > 0 is 2 d/dt_m; J_{-m} is m t_m
    if (index > 0) return {OddMonomial::var(index), false, Rat(2), index};
    return {OddMonomial::var(-index), true, Rat(-index), -index};
}

// Normal-ordered product of current modes: t parts collected left.
void add_normal_product(DOperator& op, const std::vector<int>& indices, const Rat& scale) {
    OddMonomial cre, ann;
    Rat c = scale;
    for (int idx : indices) {
        Mode m = j_factor(idx);
        c *= m.coeff;
        if (m.creation)
            cre = cre.times(m.mono);
        else
            ann = ann.times(m.mono);
    }
    op.add_term(cre, ann, c);
}

}  // namespace

DOperator L_op(int k, int window) {
    DOperator r(window);
    if (k % 2 != 0) return r;
    int range = window + std::abs(k) + 1;
    if (range % 2 == 0) ++range;  // loop must step through odd indices
    for (int i = -range; i <= range; i += 2) {
        int j = k - i;
        int ann = (i > 0 ? i : 0) + (j > 0 ? j : 0);
        int cre = (i < 0 ? -i : 0) + (j < 0 ? -j : 0);
        if (ann > window || cre > window + std::max(0, -k)) continue;
        add_normal_product(r, {i, j}, Rat(1, 2));
    }
    return r;
}

DOperator M_op(int k, int window) {
    DOperator r(window);
    if (k % 2 == 0) return r;
    int range = window + std::abs(k) + 1;
    if (range % 2 == 0) ++range;
    for (int i = -range; i <= range; i += 2) {
        for (int j = -range; j <= range; j += 2) {
            int l = k - i - j;
            if (std::abs(l) > range) continue;
            int ann = (i > 0 ? i : 0) + (j > 0 ? j : 0) + (l > 0 ? l : 0);
            int cre = (i < 0 ? -i : 0) + (j < 0 ? -j : 0) + (l < 0 ? -l : 0);
            if (ann > window || cre > window + std::max(0, -k)) continue;
            add_normal_product(r, {i, j, l}, Rat(1, 3));
        }
    }
    return r;
}

DOperator W_km_closed(int k, int m, int window) {
    if ((k + m) % 2 == 0) throw std::invalid_argument("W_{k,m} requires k + m odd");
    switch (m) {
        case 0:
            return J_op(k);
        case 1:
            return L_op(k, window) - J_op(k) * Rat(k, 2);
        case 2:
            return M_op(k, window) - L_op(k, window) * Rat(k + 1) +
                   J_op(k) * Rat((k + 1) * (2 * k + 1), 6);
        default:
            throw std::invalid_argument("closed form available only for m <= 2");
    }
}

namespace {

// Faa di Bruno differential polynomials in commuting symbols g_a ~ d^{a-1} J:
// P_1 = g_1, P_{j+1} = g_1 P_j + dP_j with d g_a = g_{a+1}.
using FdbMono = std::vector<int>;  // sorted derivative orders
using FdbPoly = std::map<FdbMono, Rat>;

FdbPoly fdb_polynomial(int j) {
    FdbPoly p{{FdbMono{1}, Rat(1)}};
    for (int step = 1; step < j; ++step) {
        FdbPoly next;
        auto add = [&](FdbMono m, const Rat& c) {
            std::sort(m.begin(), m.end());
            auto [it, inserted] = next.emplace(std::move(m), c);
            if (!inserted) it->second += c;
        };
        for (const auto& [m, c] : p) {
            FdbMono m1 = m;
            m1.push_back(1);
            add(std::move(m1), c);
            for (size_t i = 0; i < m.size(); ++i) {
                // skip repeated positions of equal value: handle via multiplicity
                if (i > 0 && m[i] == m[i - 1]) continue;
                int mult = 1;
                for (size_t l = i + 1; l < m.size() && m[l] == m[i]; ++l) ++mult;
                FdbMono md = m;
                md[i] += 1;
                add(std::move(md), c * mult);
            }
        }
        p = std::move(next);
    }
    return p;
}

// Coefficient of w^{target} in the normal-ordered product of current
// derivative factors given by `orders`, restricted to annihilation weight
// <= ann_bound and creation weight <= cre_bound.
void modes_rec(const std::vector<int>& orders, size_t idx, int wpow, int ann_w, int cre_w,
               const Rat& coeff, OddMonomial cre, OddMonomial ann, int target, int ann_bound,
               int cre_bound, DOperator& out, const Rat& scale) {
    if (idx == orders.size()) {
        if (wpow == target) out.add_term(cre, ann, coeff * scale);
        return;
    }
    int a = orders[idx];
    // creation mode kappa: kappa t_kappa w^{kappa-1}, differentiated a-1 times
    for (int kappa = 1; cre_w + kappa <= cre_bound; kappa += 2) {
        Rat c = Rat(kappa) * falling(kappa - 1, a - 1);
        if (c != 0)
            modes_rec(orders, idx + 1, wpow + kappa - a, ann_w, cre_w + kappa, coeff * c,
                      cre.times(OddMonomial::var(kappa)), ann, target, ann_bound, cre_bound, out,
                      scale);
    }
    // annihilation mode kappa: 2 w^{-kappa-1} d_kappa, differentiated a-1 times
    for (int kappa = 1; ann_w + kappa <= ann_bound; kappa += 2) {
        Rat c = Rat(2) * falling(-kappa - 1, a - 1);
        modes_rec(orders, idx + 1, wpow - kappa - a, ann_w + kappa, cre_w, coeff * c, cre,
                  ann.times(OddMonomial::var(kappa)), target, ann_bound, cre_bound, out, scale);
    }
}

// Adds scale * [w^{target}] U_j(w) to out.
void accumulate_u_coefficient(int j, int target, int ann_bound, int cre_bound, DOperator& out,
                              const Rat& scale) {
    if (j == 0) return;
    for (const auto& [orders, c] : fdb_polynomial(j)) {
        modes_rec(orders, 0, 0, 0, 0, c, OddMonomial{}, OddMonomial{}, target, ann_bound,
                  cre_bound, out, scale);
    }
}

}  // namespace

DOperator faa_di_bruno_W(int k, int m, int window) {
    if ((k + m) % 2 == 0) throw std::invalid_argument("W_{k,m} requires k + m odd");
    int ann_bound = window;
    int cre_bound = window + std::max(0, -k);
    DOperator r(window);
    // (1/2) res_w w^{k+m-1} (2w/(m+1) U_{m+1}(w) + U_m(w))
    accumulate_u_coefficient(m + 1, -(k + m + 1), ann_bound, cre_bound, r, Rat(1, m + 1));
    accumulate_u_coefficient(m, -(k + m), ann_bound, cre_bound, r, Rat(1, 2));
    return r;
}

ZDSymbol ZDSymbol::monomial(int zdeg, Poly p) {
    ZDSymbol s;
    s.set(zdeg, std::move(p));
    return s;
}

ZDSymbol ZDSymbol::zd(int zdeg, int dpow) {
    std::vector<Rat> c(dpow + 1, Rat(0));
    c[dpow] = 1;
    return monomial(zdeg, Poly(std::move(c)));
}

Poly ZDSymbol::poly_at(int zdeg) const {
    auto it = terms_.find(zdeg);
    return it == terms_.end() ? Poly() : it->second;
}

void ZDSymbol::set(int zdeg, Poly p) {
    if (p.is_zero())
        terms_.erase(zdeg);
    else
        terms_[zdeg] = std::move(p);
}

ZDSymbol ZDSymbol::operator+(const ZDSymbol& o) const {
    ZDSymbol r = *this;
    for (const auto& [j, p] : o.terms_) r.set(j, r.poly_at(j) + p);
    return r;
}

ZDSymbol ZDSymbol::operator-(const ZDSymbol& o) const { return *this + o * Rat(-1); }

ZDSymbol ZDSymbol::operator*(const ZDSymbol& o) const {
    // (z^i p(D)) (z^j q(D)) = z^{i+j} p(D + j) q(D)
    ZDSymbol r;
    for (const auto& [i, p] : terms_)
        for (const auto& [j, q] : o.terms_) r.set(i + j, r.poly_at(i + j) + p.shifted(Rat(j)) * q);
    return r;
}

ZDSymbol ZDSymbol::operator*(const Rat& c) const {
    ZDSymbol r;
    if (c == 0) return r;
    for (const auto& [j, p] : terms_) r.set(j, p * c);
    return r;
}

bool ZDSymbol::is_odd_symbol() const {
    for (const auto& [j, p] : terms_) {
        // iota(z^j p(D)) = (-1)^j z^j p(-j - D); oddness: p(-j-x) = (-1)^{j+1} p(x)
        Rat sign = (j % 2 == 0) ? Rat(-1) : Rat(1);
        if (p.composed_affine(Rat(-1), Rat(-j)) != p * sign) return false;
    }
    return true;
}

ZDSymbol w_km_symbol(int k, int m) {
    Poly second = falling_poly(m, Rat(k + m - 1));  // (D+k+m-1)(D+k+m-2)...(D+k)
    Poly first = falling_poly(m);                   // D(D-1)...(D-m+1)
    Rat sign = ((k + m) % 2 == 0) ? Rat(1) : Rat(-1);
    return ZDSymbol::monomial(k, first * Rat(-1) + second * sign);
}

std::map<std::pair<int, int>, Rat> zd_basis_decompose(const ZDSymbol& a) {
    if (!a.is_odd_symbol())
        throw std::invalid_argument("symbol fails the parity check (not in the odd algebra)");
    std::map<std::pair<int, int>, Rat> out;
    for (const auto& [k, poly] : a.terms()) {
        Poly p = poly;
        while (!p.is_zero()) {
            int m = p.degree();
            if ((k + m) % 2 == 0)
                throw std::logic_error("unexpected parity in symbol decomposition");
            // leading coefficient of w_{k,m}'s polynomial part is -2
            Rat c = p.coeff(m) / Rat(-2);
            out[{k, m}] = c;
            p = p - w_km_symbol(k, m).poly_at(k) * c;
            if (!p.is_zero() && p.degree() >= m)
                throw std::logic_error("decomposition failed to reduce degree");
            // the following degree must drop by two (parity of the remainder)
            if (!p.is_zero() && (k + p.degree()) % 2 == 0)
                throw std::logic_error("remainder breaks parity");
        }
    }
    return out;
}

DOperator W_of_symbol(const ZDSymbol& a, int window) {
    DOperator r(window);
    for (const auto& [km, c] : zd_basis_decompose(a))
        r = r + faa_di_bruno_W(km.first, km.second, window) * c;
    return r;
}

QExpansion diagonal_action(const Poly& p, const QExpansion& e) {
    for (int i = 0; i <= p.degree(); i += 2)
        if (p.coeff(i) != 0)
            throw std::invalid_argument("diagonal action requires an odd polynomial in D");
    QExpansion out;
    out.cutoff = e.cutoff;
    for (const auto& [lambda, c] : e.coeffs) {
        Rat eig = 0;
        for (int part : lambda.parts()) eig -= p.eval(Rat(part));
        out.add(lambda, c * eig);
    }
    return out;
}

Rat central_mu(const ZDSymbol& a, const ZDSymbol& b) {
    if (!a.is_odd_symbol() || !b.is_odd_symbol())
        throw std::invalid_argument("central term requires symbols in the odd algebra");
    // K = (w1 - w2)/(w1 + w2) expanded for |w1| > |w2|: sum_n c_n w1^{-n} w2^n
    auto c = [](int n) { return n == 0 ? Rat(1) : Rat(n % 2 == 0 ? 2 : -2); };
    Rat mu = 0;
    // term a_{w2} b_{w1}: needs deg_z(a) = -(n+s), deg_z(b) = n+s
    for (const auto& [i, p] : a.terms()) {
        if (i > 0) continue;
        Poly q = b.poly_at(-i);
        if (q.is_zero()) continue;
        int d = -i;
        for (int n = 0; n <= d; ++n) mu += c(n) * c(d - n) * p.eval(Rat(n)) * q.eval(Rat(-n));
    }
    // minus term a_{w1} b_{w2}
    for (const auto& [i, p] : a.terms()) {
        if (i < 0) continue;
        Poly q = b.poly_at(-i);
        if (q.is_zero()) continue;
        for (int n = 0; n <= i; ++n) mu -= c(n) * c(i - n) * p.eval(Rat(-n)) * q.eval(Rat(n));
    }
    return mu / 8;
}

}  // namespace bkp
