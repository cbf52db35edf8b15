#ifndef BKP_SPECTRAL_HPP
#define BKP_SPECTRAL_HPP

#include <map>
#include <vector>

#include "bkp/poly.hpp"
#include "bkp/rational.hpp"

namespace bkp {

struct WeightData;  // tau.hpp

// Laurent coefficients trusted on [zmin, zmax]: powers above zmax are exactly
// zero, powers below zmin are unknown tail.
struct LaurentWindow {
    int zmin = 0;
    int zmax = 0;
    std::map<int, Rat> coeffs;  // zero entries may be omitted

    Rat coeff(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    void set(int n, const Rat& c) {
        if (c == 0)
            coeffs.erase(n);
        else
            coeffs[n] = c;
    }
    bool operator==(const LaurentWindow&) const = default;
};

// Rational function of D acting eigenvalue-wise: D z^n = n z^n.
struct RatFun {
    Poly num = Poly::constant(Rat(1));
    Poly den = Poly::constant(Rat(1));

    static RatFun poly(Poly p) { return {std::move(p), Poly::constant(Rat(1))}; }
    Rat eval(const Rat& n) const;  // throws on pole
    bool pole_at(const Rat& n) const { return den.eval(n) == 0; }
    RatFun inverse() const { return {den, num}; }
    RatFun times(const RatFun& o) const { return {num * o.num, den * o.den}; }
    // R(D + j)
    RatFun shifted(const Rat& j) const { return {num.shifted(j), den.shifted(j)}; }
};

// Finite sum of z^j R_j(D) primitives, z-powers normal ordered to the left;
// covers multiply-by-z^j, rational functions of D, and d/dz = z^{-1} D.
class LaurentEndo {
  public:
    LaurentEndo() = default;
    static LaurentEndo zpow_ratfun(int j, RatFun r);
    static LaurentEndo identity();
    static LaurentEndo d_by_dz();  // z^{-1} D

    const std::vector<std::pair<int, RatFun>>& terms() const { return terms_; }
    int max_shift() const;
    int min_shift() const;

    LaurentEndo operator+(const LaurentEndo& o) const;
    LaurentEndo operator-(const LaurentEndo& o) const;
    LaurentEndo operator*(const LaurentEndo& o) const;  // composition
    LaurentEndo operator*(const Rat& c) const;

    // Applies to a window with conservative trust propagation; throws on an
    // eigenvalue pole inside the operand's support.
    LaurentWindow apply(const LaurentWindow& f) const;

    void add_term(int j, RatFun r) { terms_.emplace_back(j, std::move(r)); }

  private:
    std::vector<std::pair<int, RatFun>> terms_;
};

// Two endomorphisms agree iff their eigencoefficients match; checked on
// exponents nmin..nmax (throws on pole there).
bool endo_agree(const LaurentEndo& a, const LaurentEndo& b, int nmin, int nmax);

// Gamma(x)/Gamma(x-m) = (x-1)(x-2)...(x-m), exact.
Rat gamma_ratio(const Rat& x, int m);

// Basis vector Phi_k = z^{k-1}(1 + O(z^{-1})) of the Grassmannian point:
// diagonal Gamma-ratio action on z^{k-1} e^{-sum_j s_j z^{-j}}, normalized.
// Trusted down to z^{k-1-K}.
LaurentWindow grassmannian_basis(const WeightData& weights, const std::map<int, Rat>& s, int k,
                                 int K);

LaurentEndo ks_q(const WeightData& weights, const std::map<int, Rat>& s);
LaurentEndo ks_p(const WeightData& weights, const std::map<int, Rat>& s);
LaurentEndo ks_c(const WeightData& weights, const std::map<int, Rat>& s);

// Polynomial-in-(z^{-1}, D) operator annihilating the wave function.
LaurentEndo qsc_operator(const WeightData& weights, const std::map<int, Rat>& s);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct SpectralVerdict {
    CheckStatus status = CheckStatus::Inconclusive;
    int window_lo = 0;  // certified range of z-powers checked
    int window_hi = 0;
    int witness_power = 0;  // for Fail
    Rat witness_value;
};

SpectralVerdict annihilation_check(const LaurentEndo& a, const LaurentWindow& psi);

// Exact reduction of g against basis vectors Phi_{i+1} = z^i (1 + O(z^{-1}))
// (basis[i] has top degree i); pass iff g lies in their span modulo the
// untrusted tail.
SpectralVerdict in_span_check(const LaurentWindow& g, const std::vector<LaurentWindow>& basis);

SpectralVerdict ks_invariance_check(const WeightData& weights, const std::map<int, Rat>& s,
                                    int k_max, int K);

struct ConstraintVerdict {
    bool pass = false;
    int checked_weight = 0;
};

// W^B_c tau_BGW = 0 through weight D-1; coeff_w12 overrides the hbar/4
// factor (negative controls).
ConstraintVerdict constraint_check_bgw(const Rat& N, const Rat& hbar, int D);
ConstraintVerdict constraint_check_bgw_perturbed(const Rat& N, const Rat& hbar, int D,
                                                 const Rat& coeff_w12);

}  // namespace bkp

#endif
