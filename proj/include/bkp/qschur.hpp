#ifndef BKP_QSCHUR_HPP
#define BKP_QSCHUR_HPP

#include <map>

#include "bkp/gseries.hpp"
#include "bkp/partition.hpp"

namespace bkp {

// Expansion f(t) = sum_lambda c_lambda Q_lambda(t/2) over strict partitions.
struct QExpansion {
    int cutoff = 0;
    std::map<StrictPartition, Rat> coeffs;

    void add(const StrictPartition& p, const Rat& c);
    bool operator==(const QExpansion&) const = default;
};

// One-row Q-function Q_(r): coefficient of z^r in exp(2 sum_{k odd} t_k z^k).
GradedSeries one_row_q(int r, int cutoff);

// Q_lambda(t), time convention t_k = p_k / k fixed by the Cauchy and hook
// identities. Homogeneous of weight |lambda|.
GradedSeries q_lambda(const StrictPartition& lambda, int cutoff);

// Q_lambda(t/2), the basis in which hypergeometric taus are diagonal.
GradedSeries q_lambda_half(const StrictPartition& lambda, int cutoff);

// Q_lambda(delta_{k,1}) = 2^{|lambda|} / prod(lambda_j!) * prod_{k<m}
// (lambda_k - lambda_m)/(lambda_k + lambda_m).
Rat q_delta_hook(const StrictPartition& lambda);

// Exact change of basis between monomials and {Q_lambda(t/2)}.
QExpansion to_qbasis(const GradedSeries& f);
GradedSeries from_qbasis(const QExpansion& e, int cutoff);

// Q-basis expansion of t_1 * Q_lambda(t/2).
QExpansion pieri_t1(const StrictPartition& lambda, int cutoff);

// Q-basis expansion of t_k * Q_lambda(t/2) for odd k.
QExpansion multiply_tk(int k, const QExpansion& e, int cutoff);

}  // namespace bkp

#endif
