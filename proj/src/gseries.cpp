#include "bkp/gseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkp {

OddMonomial::OddMonomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (size_t i = 0; i < factors_.size(); ++i) {
        auto [k, e] = factors_[i];
        if (k <= 0 || k % 2 == 0) throw std::invalid_argument("variable index must be odd positive");
        if (e <= 0) throw std::invalid_argument("exponent must be positive");
        if (i + 1 < factors_.size() && factors_[i + 1].first == k)
            throw std::invalid_argument("duplicate variable in monomial");
    }
}

OddMonomial OddMonomial::var(int k, int exponent) {
    return OddMonomial({{k, exponent}});
}

int OddMonomial::weight() const {
    int w = 0;
    for (auto [k, e] : factors_) w += k * e;
    return w;
}

int OddMonomial::degree() const {
    int d = 0;
    for (auto [k, e] : factors_) d += e;
    return d;
}

int OddMonomial::exponent_of(int k) const {
    for (auto [kk, e] : factors_)
        if (kk == k) return e;
    return 0;
}

OddMonomial OddMonomial::times(const OddMonomial& o) const {
    OddMonomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

OddMonomial OddMonomial::divide_var(int k) const {
    OddMonomial r;
    bool found = false;
    for (auto [kk, e] : factors_) {
        if (kk == k) {
            found = true;
            if (e > 1) r.factors_.emplace_back(kk, e - 1);
        } else {
            r.factors_.emplace_back(kk, e);
        }
    }
    if (!found) throw std::invalid_argument("monomial not divisible by variable");
    return r;
}

std::strong_ordering OddMonomial::operator<=>(const OddMonomial& o) const {
    if (auto c = weight() <=> o.weight(); c != 0) return c;
    return factors_ <=> o.factors_;
}

GradedSeries::GradedSeries(Alphabet alphabet, int cutoff)
    : alphabet_(alphabet), cutoff1_(cutoff), cutoff2_(is_joint(alphabet) ? cutoff : 0) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

GradedSeries::GradedSeries(Alphabet alphabet, int cutoff1, int cutoff2)
    : alphabet_(alphabet), cutoff1_(cutoff1), cutoff2_(cutoff2) {
    if (!is_joint(alphabet)) throw std::invalid_argument("two cutoffs require a joint alphabet");
    if (cutoff1 < 0 || cutoff2 < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

GradedSeries GradedSeries::constant(const Rat& c, Alphabet alphabet, int cutoff) {
    GradedSeries r(alphabet, cutoff);
    if (is_joint(alphabet)) r.cutoff2_ = cutoff;
    if (c != 0) r.terms_[{OddMonomial{}, OddMonomial{}}] = c;
    return r;
}

GradedSeries GradedSeries::variable(int k, int cutoff, Alphabet alphabet) {
    GradedSeries r(alphabet, cutoff);
    r.add_term(OddMonomial::var(k), Rat(1));
    return r;
}

Rat GradedSeries::coefficient(const OddMonomial& m) const {
    return coefficient(m, OddMonomial{});
}

Rat GradedSeries::coefficient(const OddMonomial& m1, const OddMonomial& m2) const {
    auto it = terms_.find({m1, m2});
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat GradedSeries::constant_term() const {
    return coefficient(OddMonomial{}, OddMonomial{});
}

GradedSeries GradedSeries::weight_part(int w) const {
    GradedSeries r(*this);
    r.terms_.clear();
    for (const auto& [key, c] : terms_)
        if (key.first.weight() + key.second.weight() == w) r.terms_[key] = c;
    return r;
}

static void check_same_alphabet(const GradedSeries& a, const GradedSeries& b) {
    if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    check_same_alphabet(*this, o);
    GradedSeries r(*this);
    r.cutoff1_ = std::min(cutoff1_, o.cutoff1_);
    r.cutoff2_ = std::min(cutoff2_, o.cutoff2_);
    r.terms_.clear();
    for (const auto& [key, c] : terms_) r.add_term(key.first, key.second, c);
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
    return *this + (-o);
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r(*this);
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
    check_same_alphabet(*this, o);
    GradedSeries r(*this);
    r.cutoff1_ = std::min(cutoff1_, o.cutoff1_);
    r.cutoff2_ = std::min(cutoff2_, o.cutoff2_);
    r.terms_.clear();
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            OddMonomial m1 = ka.first.times(kb.first);
            if (m1.weight() > r.cutoff1_) continue;
            OddMonomial m2 = ka.second.times(kb.second);
            if (is_joint(alphabet_) && m2.weight() > r.cutoff2_) continue;
            r.add_term(std::move(m1), std::move(m2), ca * cb);
        }
    }
    return r;
}

GradedSeries GradedSeries::operator*(const Rat& c) const {
    GradedSeries r(*this);
    if (c == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& [key, v] : r.terms_) v *= c;
    return r;
}

GradedSeries GradedSeries::truncated(int cutoff1, int cutoff2) const {
    GradedSeries r(*this);
    r.cutoff1_ = std::min(cutoff1_, cutoff1);
    if (is_joint(alphabet_)) r.cutoff2_ = std::min(cutoff2_, cutoff2);
    std::erase_if(r.terms_, [&](const auto& kv) {
        return kv.first.first.weight() > r.cutoff1_ ||
               (is_joint(r.alphabet_) && kv.first.second.weight() > r.cutoff2_);
    });
    return r;
}

void GradedSeries::add_term(const OddMonomial& m, const Rat& c) {
    add_term(m, OddMonomial{}, c);
}

void GradedSeries::add_term(const OddMonomial& m1, const OddMonomial& m2, const Rat& c) {
    if (!m2.is_one() && !is_joint(alphabet_))
        throw std::invalid_argument("second-alphabet monomial in a single-alphabet series");
    if (m1.weight() > cutoff1_) return;
    if (is_joint(alphabet_) && m2.weight() > cutoff2_) return;
    if (c == 0) return;
    Key key{m1, m2};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedSeries exp_positive(const GradedSeries& f) {
    if (f.constant_term() != 0) throw std::invalid_argument("exp of series with nonzero constant term");
    GradedSeries acc = f * Rat(0);
    acc.add_term(OddMonomial{}, OddMonomial{}, Rat(1));
    GradedSeries power = acc;
    for (int n = 1; !power.is_zero(); ++n) {
        power = power * f * (Rat(1) / n);
        if (power.is_zero()) break;
        acc = acc + power;
    }
    return acc;
}

GradedSeries partial(const GradedSeries& f, int k) {
    if (k <= 0 || k % 2 == 0) throw std::invalid_argument("derivative index must be odd positive");
    GradedSeries r = f * Rat(0);
    for (const auto& [key, c] : f.terms()) {
        int e = key.first.exponent_of(k);
        if (e == 0) continue;
        r.add_term(key.first.divide_var(k), key.second, c * e);
    }
    return r;
}

GradedSeries partial_second(const GradedSeries& f, int k) {
    if (k <= 0 || k % 2 == 0) throw std::invalid_argument("derivative index must be odd positive");
    if (!is_joint(f.alphabet())) throw std::invalid_argument("series has no second alphabet");
    GradedSeries r = f * Rat(0);
    for (const auto& [key, c] : f.terms()) {
        int e = key.second.exponent_of(k);
        if (e == 0) continue;
        r.add_term(key.first, key.second.divide_var(k), c * e);
    }
    return r;
}

static Rat eval_monomial(const OddMonomial& m, const std::map<int, Rat>& values) {
    Rat v = 1;
    for (auto [k, e] : m.factors()) {
        auto it = values.find(k);
        if (it == values.end()) return Rat(0);
        v *= rat_pow(it->second, e);
    }
    return v;
}

Rat specialize(const GradedSeries& f, const std::map<int, Rat>& values) {
    if (is_joint(f.alphabet())) throw std::invalid_argument("use specialize_second for joint series");
    Rat r = 0;
    for (const auto& [key, c] : f.terms()) r += c * eval_monomial(key.first, values);
    return r;
}

GradedSeries specialize_second(const GradedSeries& f, const std::map<int, Rat>& values) {
    if (!is_joint(f.alphabet())) throw std::invalid_argument("series has no second alphabet");
    GradedSeries r(Alphabet::T, f.cutoff());
    for (const auto& [key, c] : f.terms()) {
        Rat v = c * eval_monomial(key.second, values);
        if (v != 0) r.add_term(key.first, v);
    }
    return r;
}

GradedSeries rescale_vars(const GradedSeries& f, const Rat& c) {
    GradedSeries r = f * Rat(0);
    for (const auto& [key, v] : f.terms())
        r.add_term(key.first, key.second, v * rat_pow(c, key.first.degree()));
    return r;
}

MiwaShifted miwa_shift(const GradedSeries& f, const Rat& c, int zwindow) {
    if (f.alphabet() != Alphabet::T) throw std::invalid_argument("miwa_shift requires alphabet T");
    if (zwindow < f.cutoff()) throw std::invalid_argument("zwindow must be at least the cutoff");
    MiwaShifted out;
    out.zmin = -zwindow;
    auto& slots = out.coeffs;
    auto slot = [&](int p) -> GradedSeries& {
        auto it = slots.find(p);
        if (it == slots.end())
            it = slots.emplace(p, GradedSeries(Alphabet::T, f.cutoff())).first;
        return it->second;
    };
    for (const auto& [key, coeff] : f.terms()) {
        // Expand prod_k (t_k + c/(k z^k))^{e_k} term by term.
        std::vector<std::tuple<OddMonomial, Rat, int>> acc;  // (monomial, coeff, zpower)
        acc.emplace_back(OddMonomial{}, coeff, 0);
        for (auto [k, e] : key.first.factors()) {
            std::vector<std::tuple<OddMonomial, Rat, int>> next;
            // binomial expansion of (t_k + c/(k z^k))^e
            Rat shift = c / k;
            for (int j = 0; j <= e; ++j) {
                // choose j copies of the shift, e-j copies of t_k
                Rat binom = factorial(e) / (factorial(j) * factorial(e - j));
                Rat w = binom * rat_pow(shift, j);
                OddMonomial part = (j == e) ? OddMonomial{} : OddMonomial::var(k, e - j);
                for (const auto& [m, cv, zp] : acc) {
                    int zp2 = zp - k * j;
                    if (zp2 < -zwindow) continue;
                    next.emplace_back(m.times(part), cv * w, zp2);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [m, cv, zp] : acc) slot(zp).add_term(m, cv);
    }
    std::erase_if(slots, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

GradedSeries promote_first(const GradedSeries& f, Alphabet joint, int cutoff2) {
    if (is_joint(f.alphabet())) throw std::invalid_argument("series is already joint");
    GradedSeries r(joint, f.cutoff(), cutoff2);
    for (const auto& [key, c] : f.terms()) r.add_term(key.first, OddMonomial{}, c);
    return r;
}

GradedSeries promote_second(const GradedSeries& f, Alphabet joint, int cutoff1) {
    if (is_joint(f.alphabet())) throw std::invalid_argument("series is already joint");
    GradedSeries r(joint, cutoff1, f.cutoff());
    for (const auto& [key, c] : f.terms()) r.add_term(OddMonomial{}, key.first, c);
    return r;
}

}  // namespace bkp
