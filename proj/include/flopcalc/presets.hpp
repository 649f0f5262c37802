#pragma once

#include "flopcalc/enumerative.hpp"

namespace flopcalc {

/// The cA2 two-curve family: diagram A2, I empty, GV values
/// n_{(1,0)} = n_{(0,1)} = 1 and n_{(1,1)} = k. dim A_con = 4k + 2; mutating
/// at the second curve gives k + 5.
GVTable make_cA2_table(long long k);

/// Single-curve flop of length 1..6: the (diagram, node) pairs realising each
/// length, with every supported value set to 1. The support is {k C : 1 <= k <= length}.
GVTable make_single_curve_table(int length);

/// Ambient (diagram spec, contracted subset) realising the single-curve flop
/// of the given length.
std::pair<std::string, NodeSet> single_curve_ambient(int length);

} // namespace flopcalc
