#ifndef LIECOMB_RENDER_HPP
#define LIECOMB_RENDER_HPP

// Deterministic text and SVG drawings: ASCII honeycombs and hives in the
// usual Y-top / hexagon / three-Y layout, triangular hive arrays, and the
// three pictograph kinds.  The SU(3)-honeycomb is drawn metrically: its
// central hexagon has sides equal to the six ij in {12,23} labels at
// 120-degree angles (it closes exactly when the hexagon constraint holds)
// with the three 13-labels as outward legs.  O-blade edges carrying a 1
// are thickened in SVG.

#include <string>

#include "liecomb/honeycomb.hpp"
#include "liecomb/pictograph.hpp"

namespace liecomb::render {

std::string honeycomb_text(const honeycomb::Honeycomb& h);
std::string hive_text(const honeycomb::Hive& h);
std::string pictograph_text(const pictograph::Pictograph& p);
std::string pictograph_svg(const pictograph::Pictograph& p);

}  // namespace liecomb::render

#endif
