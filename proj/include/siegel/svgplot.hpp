#pragma once
// Static SVG scatter of a g = 2 ledger: x = k_2, y = k_1, one marker shape
// per degree class (the display sets V_e \ V_{e-1}), diagonal k_1 = k_2 guide
// line, legend.  Pure integer pixel arithmetic, so output bytes are a
// deterministic function of the ledger.

#include <string>

#include "siegel/vanishing.hpp"

namespace siegel {

// Throws std::invalid_argument for g != 2.
std::string render_scatter_svg(const VanishingLedger& ledger);

} // namespace siegel
