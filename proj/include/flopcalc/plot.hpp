#pragma once

#include <cstddef>
#include <string>

#include "flopcalc/rational.hpp"
#include "flopcalc/restriction.hpp"
#include "flopcalc/wallcross.hpp"

namespace flopcalc {

/// Rendering parameters. Coordinates are exact rationals; rounding to the SVG
/// grid (6 decimals, half to even) happens only at output. Colors come from a
/// fixed palette cycled in ray enumeration order.
struct PlotSpec {
  Rat xmin = Rat(-2);
  Rat xmax = Rat(2);
  Rat ymin = Rat(-2);
  Rat ymax = Rat(2);
  Rat pixels_per_unit = Rat(160);
  Rat stroke_scale = Rat(1);
  bool labels = true;
};

/// The finite arrangement H_I for |I^c| = 2: one line through the origin per
/// ray, annotated with its top multiplicity. Byte-deterministic.
std::string render_finite(const RootSystem& rs, const NodeSet& subset, const PlotSpec& spec);

/// The infinite arrangement H_I^aff: all translates sum beta_i theta_i in
/// (1/k)Z for each listed multiplicity k, within the window. Supports
/// |I^c| = 2 (line families) and |I^c| = 1 (a number line with ticks).
std::string render_infinite(const RootSystem& rs, const NodeSet& subset, const PlotSpec& spec);

/// Images of the unit box under every chamber's comparison map, overlaid on
/// the infinite arrangement; |I^c| = 2 only.
std::string render_fundamental_regions(const RootSystem& rs, const NodeSet& subset,
                                       const PlotSpec& spec, std::size_t chamber_limit);

} // namespace flopcalc
