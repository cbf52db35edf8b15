#ifndef BKP_TAU_HPP
#define BKP_TAU_HPP

#include <map>
#include <utility>
#include <vector>

#include "bkp/qschur.hpp"
#include "bkp/spectral.hpp"

namespace bkp {

// Rational parameters of the weight generating function
// r(z) = prod_a r^{(u_a)}(z) / prod_b r^{(w_b)}(z), r^{(c)}(m) = ((2m-1)^2-4c^2)/4.
struct WeightData {
    std::vector<Rat> numer_params;  // u_1..u_a
    std::vector<Rat> denom_params;  // w_1..w_b
};

// No denominator content may vanish for 1 <= m <= cutoff; throws naming the
// offending parameter index and m.
void validate_weights(const WeightData& weights, int cutoff);

// ((2m-1)^2 - 4c^2)/4
Rat content_factor(const Rat& c, int m);

// prod_j prod_{m=1}^{lambda_j} prod_a r^{(u_a)}(m) / prod_b r^{(w_b)}(m)
Rat content_product(const WeightData& weights, const StrictPartition& lambda);

struct TauSpec {
    WeightData weights;
    std::map<int, Rat> s_values;  // odd positive indices; ignored when formal_s
    bool formal_s = false;
    Rat hbar = 1;  // metadata; enters through s_values for the named models
    int cutoff = 0;
    int s_cutoff = 0;  // second-alphabet cutoff when formal_s
};

// sum_lambda 2^{-l(lambda)} r_lambda Q_lambda(t/2) Q_lambda(s/2); the s side
// is either evaluated at s_values or kept formal (joint T x S series).
GradedSeries hypergeometric_tau(const TauSpec& spec);

// Generalized BGW partition sum: weights u=[N], s = {1: hbar/2}.
GradedSeries bgw_tau(const Rat& N, const Rat& hbar, int D);

// exp(hbar (1/4 W_{-1,2} + (1/16 - N^2/4) W_{-1,0})) . 1, evaluated by graded
// iteration (the operator raises weight by exactly 1).
GradedSeries bgw_cutjoin(const Rat& N, const Rat& hbar, int D);

enum class CutjoinStrategy { TSpace, QBasis };

// exp(-sum_k s_k W_{w(u,w)^k}) . 1 with w(u,w) = z^{-1} prod((D-1/2)^2-u^2) /
// prod((D-1/2)^2-w^2). TSpace requires b = 0 (polynomial symbol); QBasis
// conjugates multiplication by t_k with the diagonal content action.
GradedSeries cutjoin_tau(const TauSpec& spec, CutjoinStrategy strategy);

struct RecursionReport {
    bool pass = true;
    int failed_weight = -1;
};

// For b = 0 and s supported on {1}: checks the weight-graded recursion
// tau^(k) = -(s_1/k) W_{w(u)} tau^(k-1) against the partition sum.
RecursionReport degree_recursion_check(const TauSpec& spec);

// Psi(z) = tau(-2[z^{-1}]): Miwa shift with c = -2, all times to zero.
// Trusted down to z^{-K}; requires K <= tau cutoff.
LaurentWindow wave_function(const GradedSeries& tau, int K);

// Double Q-expansion coefficients of a formal-s tau: (lambda, mu) -> rational,
// extracted via to_qbasis in both alphabets. Zero entries omitted.
std::map<std::pair<StrictPartition, StrictPartition>, Rat> hurwitz_table(const TauSpec& spec);

}  // namespace bkp

#endif
