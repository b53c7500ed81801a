#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squaretile/matrix.hpp"

namespace squaretile {

/// (M - I)^size == 0.
bool is_unipotent(const Matrix& m);
/// Finite log series of a unipotent matrix; InputError otherwise.
Matrix nilpotent_log(const Matrix& m);
/// Finite exponential series of a nilpotent matrix; InputError otherwise.
Matrix nilpotent_exp(const Matrix& n);

bool is_symplectic(const Matrix& m, const Matrix& form);
bool in_symplectic_algebra(const Matrix& l, const Matrix& form);

/// A nondegenerate antisymmetric form preserved by every generator: the
/// standard [[0, I], [-I, 0]] when it works, otherwise the first
/// nondegenerate element among the basis of invariant forms and their sum.
std::optional<Matrix> infer_symplectic_form(const std::vector<Matrix>& generators);

/// Generator words use one letter per generator, 'A' for the first; a
/// lowercase letter is the inverse. "AB" is the product A * B.
Matrix word_matrix(const std::vector<Matrix>& generators, const std::string& word);
/// g L g^-1 with g = word_matrix(word).
Matrix conjugate_by_word(const std::vector<Matrix>& generators, const std::string& word, const Matrix& l);

struct DensityOptions {
  std::size_t max_word_length = 8;
  std::optional<Matrix> form;
};

struct DensityCertificate {
  Matrix form;
  std::vector<Matrix> algebra_basis;
  std::vector<std::string> witness_log;  // one entry per basis element
  std::size_t dimension = 0;
  std::size_t target_dimension = 0;  // m (2m + 1)
  bool dense = false;
  bool closed = false;  // span stable under conjugation and brackets
  std::size_t levels = 0;  // conjugation rounds performed

  bool contains(const Matrix& l) const;
};

/// Lie algebra generated by the logs of the unipotent generators and closed
/// under conjugation by the generators (breadth first, one letter per round)
/// and under brackets. A dense verdict proves that the Zariski closure of the
/// group generated by the unipotent inputs is all of Sp(form).
DensityCertificate lie_closure(const std::vector<Matrix>& generators, const DensityOptions& options = {});

}  // namespace squaretile
