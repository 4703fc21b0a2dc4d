#pragma once

// Schematic picture of the Farey tessellation near x, the vertical geodesic
// ending at x and the tessellation edges it crosses, colored by their
// Delta-letter (red = 1, blue = 0, green = inf).

#include <string>

#include "paritycf/paritycf.h"

namespace cli {

/// `delta` must have been expanded with PCF_DELTA_CYLINDERS. Output depends
/// only on its arguments.
std::string render_svg(const pcf_input* x, const pcf_delta* delta);

}  // namespace cli
