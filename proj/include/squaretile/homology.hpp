#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "squaretile/cylinders.hpp"
#include "squaretile/matrix.hpp"
#include "squaretile/origami.hpp"

namespace squaretile {

/// Cellular homology of an origami. Chains are vectors of 2n rationals indexed
/// by x_edge / y_edge; classes are coordinate vectors of length 2g in the
/// integral basis returned by basis().
///
/// The basis comes from a tree-cotree decomposition: a breadth-first spanning
/// tree of the vertex graph, a spanning tree of the dual graph on the remaining
/// edges, and one fundamental cycle for each of the 2g edges left over.
class Homology {
 public:
  explicit Homology(const Origami& o);

  const Origami& origami() const noexcept { return o_; }
  std::size_t genus() const noexcept { return basis_.size() / 2; }
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t edge_count() const noexcept { return 2 * o_.size(); }

  /// Basis chains (integral closed edge paths) and their intersection matrix.
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const Matrix& gram() const noexcept { return gram_; }

  /// Vertex endpoints of an edge, ids as in singularities().
  std::size_t edge_init(std::size_t e) const;
  std::size_t edge_term(std::size_t e) const;

  Vector boundary(const Vector& chain) const;            // one entry per vertex
  Vector square_boundary(std::size_t square) const;      // a chain
  bool is_cycle(const Vector& chain) const;

  /// Coordinates of a closed chain. Throws InputError on non-closed chains.
  Vector coordinates(const Vector& chain) const;
  Vector chain(const Vector& coords) const;

  /// Intersection of two closed chains, computed locally at the vertices from
  /// the cyclic order of edge ends with the first chain pushed to its left.
  Rational intersection(const Vector& c1, const Vector& c2) const;
  /// Same pairing on coordinate vectors through the gram matrix.
  Rational pairing(const Vector& x, const Vector& y) const;

  /// <curve, chain> for a transverse curve given by its edge crossings.
  Rational crossing_pairing(const std::vector<Crossing>& curve, const Vector& chain) const;
  /// Class of a closed transverse curve, recovered from its pairings with
  /// the basis.
  Vector class_of_curve(const std::vector<Crossing>& curve) const;

  std::array<Rational, 2> holonomy_of_chain(const Vector& chain) const;
  /// 2 x 2g matrix sending coordinates to holonomy.
  const Matrix& holonomy_matrix() const noexcept { return holonomy_; }
  std::array<Rational, 2> holonomy(const Vector& coords) const;

 private:
  Origami o_;
  std::vector<std::size_t> vertex_of_;
  std::size_t vertex_count_ = 0;
  std::vector<Vector> basis_;
  Matrix gram_;
  Matrix gram_transpose_inverse_;
  Matrix holonomy_;
  std::optional<LinearSolver> solver_;
};

/// An end of an edge at one of its vertices.
struct EdgeEnd {
  std::size_t edge;
  bool initial;
};

/// For each vertex (ids as in singularities()), the 4(k+1) edge ends in
/// counterclockwise order.
std::vector<std::vector<EdgeEnd>> edge_ends_ccw(const Origami& o);

/// Coordinates of the core curve of a cylinder; `row` picks which leaf.
Vector waist_class(const Homology& hom, const Cylinder& cyl, std::size_t row = 0);

/// An ordered basis of the kernel of holonomy, in H_1 coordinates.
struct PerpBasis {
  std::vector<Vector> vectors;
  std::vector<std::string> labels;
  bool from_waists = false;  // built from horizontal and vertical core curves
};

/// Optional reordering of the canonical horizontal (sigma) and vertical (zeta)
/// cylinder lists, e.g. {0, 2, 1}, applied before labels are assigned.
struct WaistOrder {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> zeta;
};

/// Horizontal and vertical waist classes in (possibly reordered) canonical
/// order, together with their circumferences.
struct Waists {
  std::vector<Vector> sigma, zeta;
  std::vector<long> sigma_length, zeta_length;
};
Waists horizontal_vertical_waists(const Homology& hom, const WaistOrder* order = nullptr);

/// Basis of ker(holonomy). When the waist classes have rank 2g this is
/// sigma_i - (l_i / l_0) sigma_0 and zeta_j - (l_j / l_0) zeta_0, each scaled
/// to be primitive integral; otherwise the echelon kernel of the holonomy map.
PerpBasis perp_subspace(const Homology& hom, const WaistOrder* order = nullptr);

/// Serializes a chain as "x1:1 y3:-2" style sparse text, 1-based squares.
std::string chain_to_string(const Vector& chain, std::size_t n);

}  // namespace squaretile
