#ifndef BKP_WOPS_HPP
#define BKP_WOPS_HPP

#include <map>
#include <optional>

#include "bkp/gseries.hpp"
#include "bkp/poly.hpp"
#include "bkp/qschur.hpp"

namespace bkp {

inline constexpr int kUnbounded = 1 << 20;

// Normal-ordered differential operator sum_i c_i t^{alpha_i} d^{beta_i} in the
// odd times, with all multiplications left of all derivatives. Generators are
// infinite mode sums, so an operator carries the window (maximum input weight)
// on which its materialization is complete.
class DOperator {
  public:
    struct Key {
        OddMonomial creation;
        OddMonomial annihilation;
        bool operator==(const Key&) const = default;
        std::strong_ordering operator<=>(const Key&) const = default;
    };

    explicit DOperator(int window = kUnbounded) : window_(window) {}

    int window() const { return window_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const OddMonomial& creation, const OddMonomial& annihilation, const Rat& c);

    // Largest weight gain cre - ann over terms (0 for the zero operator).
    int max_shift() const;

    DOperator operator+(const DOperator& o) const;
    DOperator operator-(const DOperator& o) const;
    DOperator operator*(const Rat& c) const;

    // Terms with annihilation weight <= w and creation weight <= cre_bound;
    // two operators agree on inputs of weight <= w iff these coincide.
    DOperator restricted(int w, int cre_bound) const;

    bool operator==(const DOperator&) const = default;

  private:
    int window_;
    std::map<Key, Rat> terms_;
};

// Applies op to f; throws if f's cutoff exceeds the operator window. The
// result is carried at cutoff out_cutoff (default: f's cutoff).
GradedSeries apply(const DOperator& op, const GradedSeries& f, int out_cutoff = -1);

// Operator product AB, normal-ordered; window shrinks per the weight
// bookkeeping of both factors.
DOperator compose(const DOperator& a, const DOperator& b);
DOperator commutator(const DOperator& a, const DOperator& b);

// Heisenberg current mode: 2 d/dt_k for odd k > 0, -k t_{-k} for odd k < 0,
// zero otherwise.
DOperator J_op(int k);
// Virasoro mode (even k; zero otherwise), materialized on the window.
DOperator L_op(int k, int window);
// W^(3) mode (odd k; zero otherwise), materialized on the window.
DOperator M_op(int k, int window);

// Closed combinations for m <= 2: W_{k,0} = J_k, W_{k,1} = L_k - (k/2) J_k,
// W_{k,2} = M_k - (k+1) L_k + (k+1)(2k+1)/6 J_k. Requires k + m odd.
DOperator W_km_closed(int k, int m, int window);

// Same operators via the residue extraction from the current's Faa di Bruno
// differential polynomials; valid for any m >= 0 with k + m odd.
DOperator faa_di_bruno_W(int k, int m, int window);

// Symbol sum_j z^j p_j(D), D = z d/dz, in the normal form with z-powers on
// the left.
class ZDSymbol {
  public:
    ZDSymbol() = default;

    static ZDSymbol monomial(int zdeg, Poly p);
    // z^{zdeg} D^m
    static ZDSymbol zd(int zdeg, int dpow);

    const std::map<int, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly poly_at(int zdeg) const;

    ZDSymbol operator+(const ZDSymbol& o) const;
    ZDSymbol operator-(const ZDSymbol& o) const;
    ZDSymbol operator*(const ZDSymbol& o) const;  // operator composition
    ZDSymbol operator*(const Rat& c) const;

    // Membership in the odd part: iota(a) = -a with iota the anti-involution
    // fixing the algebra; reduces to p_j(-j - x) == (-1)^{j+1} p_j(x).
    bool is_odd_symbol() const;

    bool operator==(const ZDSymbol&) const = default;

  private:
    void set(int zdeg, Poly p);
    std::map<int, Poly> terms_;
};

// Basis element w_{k,m} = -z^{k+m} d_z^m + (-1)^{k+m} z d_z^m z^{k+m-1}.
ZDSymbol w_km_symbol(int k, int m);

// Coefficients c_{k,m} with a = sum c_{k,m} w_{k,m}; throws if the symbol
// fails the parity check.
std::map<std::pair<int, int>, Rat> zd_basis_decompose(const ZDSymbol& a);

// W-image of a symbol on a window, via decomposition + Faa di Bruno.
DOperator W_of_symbol(const ZDSymbol& a, int window);

// Diagonal action of W_{p(D)} for odd p: multiplies c_lambda by
// -sum_j p(lambda_j). Throws if p has even-power terms.
QExpansion diagonal_action(const Poly& p, const QExpansion& e);

// Central term mu(a, b) of the commutator, from the double residue with the
// |w1| > |w2| expansion.
Rat central_mu(const ZDSymbol& a, const ZDSymbol& b);

}  // namespace bkp

#endif
