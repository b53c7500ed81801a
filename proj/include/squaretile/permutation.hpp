#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace squaretile {

/// A bijection of {0, ..., n-1}. Text forms use 1-based symbols.
///
/// Composition reads right to left: (a * b)(i) = a(b(i)), i.e. b is applied
/// first. Every formula in the library uses this convention.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ParseError(NotBijection) when `images` is not a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Cycles use 1-based symbols; symbols absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation pow(long k) const;
  bool is_identity() const;

  /// Cycles with 0-based entries, each starting at its smallest element,
  /// ordered by that element. Fixed points included.
  std::vector<std::vector<std::size_t>> cycles() const;
  /// Sorted 1-based cycle notation without fixed points; "()" for identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::size_t> images_;
};

/// Parses "(1,2)(3,4,5)" style cycle notation, commas or blanks as separators.
/// Returns 1-based cycles; "()" and "" mean no cycles.
std::vector<std::vector<std::size_t>> parse_cycles(const std::string& text);

}  // namespace squaretile
