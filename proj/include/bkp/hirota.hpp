#ifndef BKP_HIROTA_HPP
#define BKP_HIROTA_HPP

#include "bkp/gseries.hpp"

namespace bkp {

// Residue of z^{-1} e^{sum z^k (t_k - t'_k)} tau(t - 2[z^{-1}]) tau(t' + 2[z^{-1}])
// minus tau(t) tau(t'), as an exact joint series through bidegree (dt, dts).
// The bilinear coupling mixes weights from both sides, so exactness at
// (dt, dts) requires the input cutoff to reach dt + dts; throws otherwise.
GradedSeries hirota_residual(const GradedSeries& tau, int dt, int dts);

struct HirotaVerdict {
    bool pass = false;
    int dt = 0;
    int dts = 0;
    // first offending bimonomial in the canonical term order, with its
    // exact coefficient; meaningful only when pass is false
    OddMonomial witness_t;
    OddMonomial witness_ts;
    Rat value;
};

HirotaVerdict is_bkp_tau(const GradedSeries& tau, int dt, int dts);

}  // namespace bkp

#endif
