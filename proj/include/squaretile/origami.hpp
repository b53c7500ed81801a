#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "squaretile/permutation.hpp"

namespace squaretile {

/// A square-tiled surface: n unit squares, h(i) the square to the right of
/// square i and v(i) the square on top of it.
///
/// Squares are 0-based in the API and 1-based in text.
class Origami {
 public:
  /// Throws ParseError(NotTransitive) when <h, v> is not transitive.
  Origami(Permutation h, Permutation v);

  std::size_t size() const noexcept { return h_.size(); }
  const Permutation& h() const noexcept { return h_; }
  const Permutation& v() const noexcept { return v_; }
  const Permutation& h_inv() const noexcept { return h_inv_; }
  const Permutation& v_inv() const noexcept { return v_inv_; }

  /// Maps the bottom-left corner of square i to the bottom-left corner of the
  /// next square counterclockwise around the same vertex: v h v^-1 h^-1.
  Permutation corner_rotation() const;

  /// Canonical text "h=...; v=...; n=N" with sorted cycles.
  std::string to_string() const;

  /// Conjugate by a relabeling p: square i becomes p(i).
  Origami relabeled(const Permutation& p) const;

  friend bool operator==(const Origami& a, const Origami& b) { return a.h_ == b.h_ && a.v_ == b.v_; }
  friend bool operator!=(const Origami& a, const Origami& b) { return !(a == b); }

 private:
  Permutation h_, v_, h_inv_, v_inv_;
};

/// Parses "h=(2,3)(4,5,6); v=(1,4,2)(3,5); n=6". The n field is optional;
/// without it n is the largest symbol. Separators may be ';' or newlines.
Origami parse_origami(const std::string& text);

/// A vertex of the square tiling: an orbit of square corners.
/// `corners` lists every square whose bottom-left corner sits at the vertex,
/// in counterclockwise order starting with the smallest.
struct Vertex {
  std::size_t id;
  std::vector<std::size_t> corners;
  /// Cone angle is 2*pi*(cone_order + 1).
  std::size_t cone_order;
};

std::vector<Vertex> singularities(const Origami& o);

/// vertex_of[i] is the id of the vertex at the bottom-left corner of square i.
std::vector<std::size_t> vertex_of_corners(const Origami& o);

struct StratumSignature {
  std::vector<std::size_t> zero_orders;  // descending
  std::size_t genus = 0;
  std::size_t marked_regular_points = 0;

  std::string to_string() const;  // e.g. "H(4)" or "H(0)" style "H()" for the torus
  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

StratumSignature stratum(const Origami& o);

/// Integer 2x2 matrix with determinant one.
struct Sl2z {
  long a = 1, b = 0, c = 0, d = 1;

  static Sl2z checked(long a, long b, long c, long d);  // throws InputError if det != 1
  static Sl2z T() { return {1, 1, 0, 1}; }
  static Sl2z S() { return {0, -1, 1, 0}; }

  std::array<long, 2> apply(std::array<long, 2> x) const { return {a * x[0] + b * x[1], c * x[0] + d * x[1]}; }
  Sl2z inverse() const { return {d, -b, -c, a}; }
  friend Sl2z operator*(const Sl2z& x, const Sl2z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Sl2z&, const Sl2z&) = default;
};

/// The origami m.o. Implemented by writing m as a word in T and S, with
///   T.(h, v) = (h, v h^-1)      (horizontal shear)
///   S.(h, v) = (v^-1, h)        (rotation by a quarter turn counterclockwise)
Origami sl2z_act(const Sl2z& m, const Origami& o);

/// Letters of a word W with W == m, each letter 'T', 't' (T^-1) or 'S'.
std::string sl2z_word(const Sl2z& m);

/// Some g in SL(2,Z) with g.dir == (1, 0). dir must be primitive.
Sl2z sl2z_to_horizontal(std::array<long, 2> dir);

/// Smallest relabeling p (lexicographically on images) with
/// p h1 p^-1 = h2 and p v1 p^-1 = v2.
std::optional<Permutation> iso(const Origami& o1, const Origami& o2);

/// Translation automorphisms: all p commuting with h and v, sorted.
std::vector<Permutation> aut(const Origami& o);

}  // namespace squaretile
