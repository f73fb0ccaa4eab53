#pragma once

#include <json.hpp>

#include "brieskorn/invariants.hpp"
#include "brieskorn/lattice.hpp"

namespace brieskorn {

/// Flat JSON object for a KMReport: rationals as "p/q" strings, integers as
/// numbers, verdict as "pass"/"fail". Key order is fixed.
nlohmann::ordered_json report_to_json(const KMReport& report);

/// JSON for a LatticeCensus plus the tuple it belongs to.
nlohmann::ordered_json census_to_json(const BrieskornData& data,
                                      const LatticeCensus& census);

}  // namespace brieskorn
