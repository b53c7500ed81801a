#pragma once

#include <array>
#include <optional>
#include <vector>

#include "squaretile/homology.hpp"
#include "squaretile/origami.hpp"

namespace squaretile {

/// Quadratic form q: H_1(M; Z/2) -> Z/2 of the translation structure, read off
/// a concrete immersed multicurve carrying the closed integral chain: the chain
/// is split into closed edge walks, each walk is pushed off the edges to its
/// left, and q = (turning/4 + double points + components) mod 2.
/// Requires all cone orders even (InputError otherwise).
int quadratic_form_of_chain(const Homology& hom, const Vector& chain);

struct SpinData {
  std::vector<int> basis_values;   // q on each integral basis class
  std::vector<std::array<Vector, 2>> symplectic_pairs;  // mod 2, basis coordinates
  int parity = 0;                  // Arf invariant, in {0, 1}
};

/// Spin parity. InputError when some zero has odd order.
SpinData spin_parity(const Homology& hom);

/// q on a class given in basis coordinates (any integers; read mod 2).
int quadratic_form(const Homology& hom, const SpinData& spin, const Vector& coords);

/// An affine involution with derivative -I, found on the origami refined into
/// 4n half-size squares. The translation part c lies in {0, 1/2}^2.
struct InvolutionWitness {
  Permutation refined;              // on quarter squares 4i + 2b + a, (a, b) = position
  Permutation square_map;           // square holding the image of i's top-right quarter
  std::array<int, 2> shift_halves;  // 2c
  std::size_t fixed_vertices = 0;   // fixed points at vertices of the original tiling
  std::size_t fixed_edge_points = 0;
  std::size_t fixed_interior_points = 0;
  std::size_t fixed_points() const { return fixed_vertices + fixed_edge_points + fixed_interior_points; }
  bool hyperelliptic = false;       // 2g + 2 fixed points
};

/// Quarter squares of the refinement: quarter 4i + 2b + a sits at offset
/// (a/2, b/2) inside square i.
Origami refine(const Origami& o);

/// First involution found, trying shifts (0,0), (1/2,0), (0,1/2), (1/2,1/2)
/// and for each the image squares in order. The caller reads `hyperelliptic`.
std::optional<InvolutionWitness> hyperelliptic_involution(const Origami& o);
/// Every involution with derivative -I, in search order.
std::vector<InvolutionWitness> involutions(const Origami& o);

}  // namespace squaretile
