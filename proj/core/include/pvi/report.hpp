#pragma once

#include <string>

#include "pvi/residual.hpp"

namespace pvi {

// "PASS boalch-39 theta=(...) path=exact residual=0 ..." (single line)
std::string report_text(const VerifyReport& rep);

// Deterministic JSON line; no timestamps in the payload.
std::string report_json(const VerifyReport& rep);

}  // namespace pvi
