/**
 * @file json_io.hpp
 * @brief JSON interchange for the CLI: invariants rendered as "k/n" strings
 *        so exact values survive serialization, places as "real" or the
 *        decimal prime, and every top-level document versioned under a
 *        "schema" key.
 */
#pragma once

#include <json.hpp>

#include "brauerlab/cocycle.hpp"
#include "brauerlab/models.hpp"
#include "brauerlab/obstruction.hpp"
#include "brauerlab/period_index.hpp"

namespace brauerlab::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "brauerlab/1";

json integer_to_json(const Integer& n);           // number when it fits, else decimal string
Integer integer_from_json(const json& j);

json invariant_to_json(const InvariantClass& a);  // "k/n"
InvariantClass invariant_from_json(const json& j);

json place_to_json(const Place& v);               // "real" or decimal prime
Place place_from_json(const json& j);

json invariant_map_to_json(const QuaternionSymbol& q,
                           const std::map<Place, InvariantClass>& inv);

json fibre_to_json(const SpecialFibre& fb);
SpecialFibre fibre_from_json(const json& j);

json curve_to_json(const CurveDescriptor& c);

json global_report_to_json(const GlobalReport& report);

json deduction_report_to_json(const DeductionReport& report);

json admissibility_to_json(const PITriple& t, const AdmissibilityResult& r);

json pairs_to_json(long long g, const std::vector<std::pair<long long, long long>>& pairs);

std::vector<std::pair<Place, CyclicSubgroup>> constraints_from_json(const json& j);

json hbn_vectors_to_json(const std::vector<std::pair<Place, CyclicSubgroup>>& constraints,
                         const std::vector<std::vector<InvariantClass>>& vectors);

/// Runs the cocycle-laboratory checks described by the request document:
/// module selection, optional one-cochain (reports its coboundary), optional
/// two-cochain (reports cocycle/associativity checks), and the H^2 orders.
json cocycle_session_to_json(const json& request);

}  // namespace brauerlab::io
