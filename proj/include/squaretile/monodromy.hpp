#pragma once

#include <array>
#include <optional>
#include <vector>

#include "squaretile/homology.hpp"

namespace squaretile {

/// The parabolic affine multitwist of an origami in a periodic direction and
/// its action on H_1.
///
/// With cylinders of circumference l_c and height h_c, the shear is
/// k = lcm(l_c / gcd(l_c, h_c)) and cylinder c is twisted t_c = k h_c / l_c
/// times. Horizontal and slanted directions twist positively
/// (dA = [[1, k], [0, 1]] for horizontal); the vertical direction twists the
/// other way, giving dB = [[1, 0], [k, 1]].
struct MultitwistAction {
  std::array<long, 2> direction;  // normalized
  Sl2z derivative;
  long shear = 0;
  int sign = 1;
  std::vector<Cylinder> cylinders;
  std::vector<long> twist_counts;
  std::vector<Vector> waists;  // coordinates, same order as cylinders
  Matrix matrix_h1;            // columns are images of the basis of H_1

  /// gamma + sign * sum_c t_c <w_c, gamma> w_c, on coordinates.
  Vector apply(const Homology& hom, const Vector& gamma) const;
};

MultitwistAction multitwist(const Homology& hom, std::array<long, 2> dir);

/// Restriction to the span of `basis`; columns are coordinates of images.
/// Throws InvariantViolation when the span is not invariant.
Matrix perp_matrix(const MultitwistAction& mt, const PerpBasis& basis);
Matrix restrict_to(const Matrix& m, const std::vector<Vector>& basis);

/// Action on cohomology dual to a homology matrix: (M^-1)^t.
Matrix cohomology_matrix(const Matrix& m);

/// Coefficients of target in terms of family, if it lies in their span.
std::optional<Vector> express(const std::vector<Vector>& family, const Vector& target);

}  // namespace squaretile
