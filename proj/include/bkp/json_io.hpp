#ifndef BKP_JSON_IO_HPP
#define BKP_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "bkp/gseries.hpp"
#include "bkp/hirota.hpp"
#include "bkp/partition.hpp"
#include "bkp/qschur.hpp"
#include "bkp/spectral.hpp"
#include "bkp/wops.hpp"

namespace bkp {

// Insertion-ordered JSON so canonical map iteration yields byte-stable output.
using Json = nlohmann::ordered_json;

std::string alphabet_name(Alphabet a);
Alphabet alphabet_from_name(const std::string& name);

Json partition_to_json(const StrictPartition& p);        // [4,1]
StrictPartition partition_from_json(const Json& j);

Json monomial_to_json(const OddMonomial& m);             // {"1":2,"3":1}
OddMonomial monomial_from_json(const Json& j);

// {"alphabet":"T","cutoff":D,"terms":[{"mono":{...},"coeff":"p/q"},...]};
// joint series add "cutoff2" and a "mono2" per term.
Json series_to_json(const GradedSeries& f);
GradedSeries series_from_json(const Json& j);

Json qexpansion_to_json(const QExpansion& e);            // [{"partition":[...],"coeff":"p/q"}]
QExpansion qexpansion_from_json(const Json& j);

Json doperator_to_json(const DOperator& op);             // [{"creation":..,"annihilation":..,"coeff":..}]

Json window_to_json(const LaurentWindow& w);             // {"zmin":..,"zmax":..,"coeffs":{"-1":"-1/8"}}
LaurentWindow window_from_json(const Json& j);

Json hirota_to_json(const HirotaVerdict& v);

std::string dump_canonical(const Json& j);               // 2-space indent + trailing newline

}  // namespace bkp

#endif
