#ifndef BKP_GSERIES_HPP
#define BKP_GSERIES_HPP

#include <compare>
#include <map>
#include <vector>

#include "bkp/rational.hpp"

namespace bkp {

// Monomial in odd-indexed variables, e.g. t_1^2 t_3. Factors are kept sorted
// by variable index; all exponents are positive.
class OddMonomial {
  public:
    OddMonomial() = default;
    explicit OddMonomial(std::vector<std::pair<int, int>> factors);

    static OddMonomial var(int k, int exponent = 1);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int weight() const;   // sum k * e_k
    int degree() const;   // sum e_k
    int exponent_of(int k) const;

    OddMonomial times(const OddMonomial& o) const;
    // Divides by var(k); degree of k must be positive.
    OddMonomial divide_var(int k) const;

    bool operator==(const OddMonomial&) const = default;
    // Canonical order: by weight, then lexicographic on the factor list.
    std::strong_ordering operator<=>(const OddMonomial& o) const;

  private:
    std::vector<std::pair<int, int>> factors_;
};

enum class Alphabet { T, S, TxS, TxT2 };

inline bool is_joint(Alphabet a) { return a == Alphabet::TxS || a == Alphabet::TxT2; }

// Truncated weight-graded polynomial over exact rationals in one odd alphabet,
// or a pair of alphabets with independent cutoffs. Immutable value semantics:
// all operations return new series.
class GradedSeries {
  public:
    struct Key {
        OddMonomial first;
        OddMonomial second;  // identity for single-alphabet series
        bool operator==(const Key&) const = default;
        std::strong_ordering operator<=>(const Key&) const = default;
    };

    GradedSeries(Alphabet alphabet, int cutoff);
    GradedSeries(Alphabet alphabet, int cutoff1, int cutoff2);

    static GradedSeries constant(const Rat& c, Alphabet alphabet, int cutoff);
    static GradedSeries variable(int k, int cutoff, Alphabet alphabet = Alphabet::T);

    Alphabet alphabet() const { return alphabet_; }
    int cutoff() const { return cutoff1_; }
    int cutoff_second() const { return cutoff2_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const OddMonomial& m) const;
    Rat coefficient(const OddMonomial& m1, const OddMonomial& m2) const;
    Rat constant_term() const;

    // Sum of terms of total weight w (joint weight for joint alphabets).
    GradedSeries weight_part(int w) const;

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator-() const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries operator*(const Rat& c) const;

    // Retains terms fitting the (possibly smaller) new cutoffs.
    GradedSeries truncated(int cutoff1, int cutoff2 = 0) const;

    // Inserts c * t^m (single alphabet) into the term map.
    void add_term(const OddMonomial& m, const Rat& c);
    void add_term(const OddMonomial& m1, const OddMonomial& m2, const Rat& c);

    bool operator==(const GradedSeries&) const = default;

  private:
    Alphabet alphabet_;
    int cutoff1_;
    int cutoff2_;
    std::map<Key, Rat> terms_;
};

// exp(f) for f with zero constant term; terminates because every power of f
// raises the minimum weight.
GradedSeries exp_positive(const GradedSeries& f);

// Formal d/dt_k in the first alphabet; k must be odd and positive.
GradedSeries partial(const GradedSeries& f, int k);
// Formal d/ds_k (second alphabet of a joint series).
GradedSeries partial_second(const GradedSeries& f, int k);

// Evaluates every variable of a single-alphabet series; unset keys are zero.
Rat specialize(const GradedSeries& f, const std::map<int, Rat>& values);
// Evaluates only the second alphabet of a joint series, returning a series
// over the first alphabet.
GradedSeries specialize_second(const GradedSeries& f, const std::map<int, Rat>& values);

// Substitutes t_k -> c^k * t_k for a uniform variable rescale c (so t -> t/2
// uses c = 1/2 on coefficients degree-wise). Used for the Q(t/2) convention.
GradedSeries rescale_vars(const GradedSeries& f, const Rat& c);

// Finite z-window of f(t + c[z^{-1}]): map from z-power (<= 0) to series.
struct MiwaShifted {
    int zmin = 0;  // most negative retained power
    std::map<int, GradedSeries> coeffs;
};

// Substitutes t_k -> t_k + c/(k z^k) and expands; powers below -zwindow are
// dropped. f must be over alphabet T.
MiwaShifted miwa_shift(const GradedSeries& f, const Rat& c, int zwindow);

// Lifts a single-alphabet series into a joint alphabet (as first or second
// factor) with the given cutoffs.
GradedSeries promote_first(const GradedSeries& f, Alphabet joint, int cutoff2);
GradedSeries promote_second(const GradedSeries& f, Alphabet joint, int cutoff1);

}  // namespace bkp

#endif
