// Orbit diagrams: lattice window, break hyperplanes, shaded module supports.
#pragma once

#include "br/weight.hpp"

namespace br {

// Rank 1: a number line with break ticks and shaded support rays.
// Rank 2: a lattice with vertical/horizontal break lines and shaded boxes.
// Throws for rank > 2 (the CLI falls back to a textual table).
std::string diagram_svg(const BellRogalskiDatum& datum, const Classification& cls,
                        long window);
std::string diagram_tikz(const BellRogalskiDatum& datum,
                         const Classification& cls, long window);

}  // namespace br
