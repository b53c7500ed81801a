#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "squaretile/origami.hpp"

namespace squaretile {

/// Edge numbering shared by every chain-level computation: x_i (the bottom
/// edge of square i, oriented rightward) is edge i, and y_i (the left edge of
/// square i, oriented upward) is edge n + i.
inline std::size_t x_edge(std::size_t square) { return square; }
inline std::size_t y_edge(std::size_t n, std::size_t square) { return n + square; }

/// A transverse passage of a curve through an edge interior. direction is +1
/// for crossing an x edge upward or a y edge rightward, -1 otherwise.
struct Crossing {
  std::size_t edge;
  int direction;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Primitive direction with q > 0, or (1, 0). Throws InputError for zero or
/// non-primitive vectors.
std::array<long, 2> normalize_direction(std::array<long, 2> dir);

/// One closed leaf family of the straight-line flow: a row of a cylinder.
struct Strip {
  /// Transversal pieces visited in order. For horizontal flow a piece is the
  /// left edge of a square (slot 0); otherwise slot j of the bottom edge of a
  /// square, the open interval (j/q, (j+1)/q).
  std::vector<std::pair<std::size_t, long>> pieces;
  /// Crossings of the core leaf, starting at the first piece.
  std::vector<Crossing> core;
  /// Squares the core leaf passes through, sorted and unique.
  std::vector<std::size_t> squares;
};

struct Cylinder {
  std::array<long, 2> direction;  // normalized
  std::vector<Strip> rows;
  long circumference = 0;  // in units of the primitive direction vector
  long height = 0;         // number of rows
  std::size_t min_square() const;
  std::vector<std::size_t> squares() const;
};

/// Cylinders of the straight-line flow in direction dir, sorted by
/// circumference then by smallest square. Adjacent rows merge exactly when the
/// leaf between them meets no zero; regular marked points do not split.
std::vector<Cylinder> cylinders(const Origami& o, std::array<long, 2> dir);

}  // namespace squaretile
