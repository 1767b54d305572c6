#pragma once

// Textual loop and point-set descriptions used by the command line.
//
// Loop specs:
//   trivial                   constant loop
//   gluck:px,py,pz            one turn about p
//   gluck-concat:p;q          G_p * G_q (points may be parenthesized)
//   james:x1;...;xk           lambda^k of the reduced word
//   <file>.json               a serialized LoopSO3
//
// Point-set specs (starting points of exported fibers):
//   fib:K                     K spiral points
//   equator:K                 K equally spaced equatorial points
//   LAxLO                     latitude-longitude grid points
//   pts:x,y,z;...             explicit points (normalized)

#include "fiberkit/loop.hpp"

#include <string_view>
#include <vector>

namespace fiberkit {

/// Throws std::invalid_argument on malformed specs.
LoopSO3d parse_loop_spec(std::string_view spec, int resolution = kDefaultResolution);

std::vector<S2Pointd> parse_point_set(std::string_view spec);

/// "x,y,z" or "(x,y,z)", normalized onto S^2.
S2Pointd parse_s2_point(std::string_view text);

}  // namespace fiberkit
