#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbd/matrix.hpp"

namespace rbd {

struct Crossing {
  std::size_t white_a;
  std::size_t white_b;
  int sign;
  // Black regions meeting at the crossing, when known.
  std::optional<std::pair<std::size_t, std::size_t>> black;
};

/// Checkerboard data of a link diagram: each crossing joins two white
/// regions (and two black regions).
struct AlternatingDiagram {
  std::size_t white_regions = 0;
  std::size_t black_regions = 0;
  std::vector<Crossing> crossings;
};

struct GoeritzForm {
  IntMatrix form;
  std::size_t basepoint = 0;
  bool flipped = false;  // the opposite sign convention was needed
};

// G_ij = -(sum of signs joining i and j), G_ii = -sum_j G_ij, basepoint deleted.
GoeritzForm goeritz_form(const AlternatingDiagram& d, std::size_t basepoint);

// Same construction over the black regions with every sign reversed.
GoeritzForm goeritz_form_black(const AlternatingDiagram& d, std::size_t basepoint);

// |det| of the white Goeritz form with basepoint 0.
Integer det_check(const AlternatingDiagram& d);

// Forms for the ribbon family: n (-3, -2) pairs, or the mirror with n - 1 (-5)s.
IntMatrix family_form(int n, bool mirror);

// Diagram whose white Goeritz form (last region as basepoint) is family_form(n, mirror).
AlternatingDiagram family_diagram(int n, bool mirror);

AlternatingDiagram trefoil_diagram();

}  // namespace rbd
