#pragma once

#include <cstddef>

#include "squaretile/origami.hpp"

namespace squaretile {

/// A unit horizontal slit along the top edge of square `base_square`
/// (0-based). Its endpoints are the top-left and top-right corners.
struct SlitSpec {
  std::size_t base_square = 0;
};

/// The raw insertion: a new square s = n with h'(s) = s, v'(a) = s and
/// v'(s) = v(a). This is a slit connected sum with a unit torus.
Origami insert_square_handle(const Origami& o, const SlitSpec& slit);

/// Whether the two slit endpoints are different points of the surface.
bool slit_endpoints_distinct(const Origami& o, const SlitSpec& slit);

/// Bubbles a square handle into the slit. The two endpoints get glued into
/// one cone point: genus goes up by one and total zero order by two. When the
/// endpoints already coincide the slit is a closed loop, the insertion only
/// lengthens the surface along it, and InputError is thrown. Postconditions
/// are checked and raise InvariantViolation.
Origami bubble_square_handle(const Origami& o, const SlitSpec& slit);

}  // namespace squaretile
