#pragma once

#include <string>
#include <vector>

#include "rbd/integer.hpp"

namespace rbd {

/// orientation * L(p, q); orientation is +1 or -1.
struct LensSpace {
  Integer p;
  Integer q;
  int orientation = 1;
};

LensSpace make_lens(const Integer& p, const Integer& q, int orientation = 1);

// Rewrites -L(p, q) as L(p, p - q) and reduces q into [0, p).
LensSpace normalize(const LensSpace& l);

// Oriented homeomorphism test.
bool lens_equiv(const LensSpace& a, const LensSpace& b);

// Homeomorphism ignoring orientation.
bool lens_equiv_unoriented(const LensSpace& a, const LensSpace& b);

// q + q' = p for the chains C_{p,q} and C_{p,q'}.
bool dual_pair(const Integer& p, const Integer& q, const Integer& q2);

// Boundary of a linear chain with weights <= -2: -L(p, q) with p/q = [-w_1, ..., -w_k].
LensSpace chain_boundary(const std::vector<Integer>& weights);

// -L(p^2, pq - 1), the boundary of the chain C_{p,q}.
LensSpace park_boundary(const Integer& p, const Integer& q);

std::string format_lens(const LensSpace& l);

}  // namespace rbd
