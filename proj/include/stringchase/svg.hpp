#pragma once

#include <string>

#include "stringchase/grid.hpp"
#include "stringchase/search.hpp"

namespace stringchase {

/// Draws a 2-D trace: grid lines, one polyline per visited string, vertex
/// labels as text, and the final fully-labeled string highlighted.
/// Throws SvgUnsupportedDimension unless spec.n == 2.
std::string render_trace_svg(const GridSpec& spec, const PathTrace& trace);

}  // namespace stringchase
