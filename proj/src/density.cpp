#include "squaretile/density.hpp"

#include <cctype>

#include "squaretile/error.hpp"

namespace squaretile {

namespace {

Matrix standard_form(std::size_t size) {
  const std::size_t m = size / 2;
  Matrix j(size, size);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = -1;
  }
  return j;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

bool is_unipotent(const Matrix& m) {
  if (!m.square()) return false;
  return power(m - Matrix::identity(m.rows()), static_cast<unsigned>(m.rows())).is_zero();
}

Matrix nilpotent_log(const Matrix& m) {
  if (!is_unipotent(m)) throw InputError("matrix is not unipotent; no finite logarithm");
  const std::size_t n = m.rows();
  const Matrix x = m - Matrix::identity(n);
  Matrix term = x, out(n, n);
  for (std::size_t k = 1; k <= n && !term.is_zero(); ++k) {
    out += term * Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    term = term * x;
  }
  return out;
}

Matrix nilpotent_exp(const Matrix& x) {
  if (!x.square() || !power(x, static_cast<unsigned>(x.rows())).is_zero())
    throw InputError("matrix is not nilpotent; no finite exponential");
  const std::size_t n = x.rows();
  Matrix out = Matrix::identity(n), term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x * Rational(1, static_cast<long>(k));
    out += term;
  }
  return out;
}

bool is_symplectic(const Matrix& m, const Matrix& form) {
  return m.square() && m.rows() == form.rows() && m.transpose() * form * m == form;
}

bool in_symplectic_algebra(const Matrix& l, const Matrix& form) { return (l.transpose() * form + form * l).is_zero(); }

std::optional<Matrix> infer_symplectic_form(const std::vector<Matrix>& generators) {
  if (generators.empty()) return std::nullopt;
  const std::size_t n = generators.front().rows();
  if (n == 0 || n % 2) return std::nullopt;
  const Matrix j0 = standard_form(n);
  bool standard = true;
  for (const auto& g : generators) standard = standard && is_symplectic(g, j0);
  if (standard) return j0;

  // Unknowns: J(a, b) for a < b. Each generator gives (M^t J M - J)(i, j) = 0 for i < j.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) unknowns.emplace_back(a, b);
  auto elementary = [&](std::size_t k) {
    Matrix e(n, n);
    e(unknowns[k].first, unknowns[k].second) = 1;
    e(unknowns[k].second, unknowns[k].first) = -1;
    return e;
  };
  const std::size_t eqs_per = unknowns.size();
  Matrix system(eqs_per * generators.size(), unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const Matrix e = elementary(k);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Matrix d = generators[g].transpose() * e * generators[g] - e;
      for (std::size_t q = 0; q < unknowns.size(); ++q) system(g * eqs_per + q, k) = d(unknowns[q].first, unknowns[q].second);
    }
  }
  std::vector<Matrix> candidates;
  for (const auto& v : nullspace(system)) {
    const Vector w = scaled_to_primitive_integers(v);
    Matrix j(n, n);
    for (std::size_t k = 0; k < unknowns.size(); ++k) j += elementary(k) * w[k];
    candidates.push_back(j);
  }
  if (candidates.size() > 1) {
    Matrix total(n, n);
    for (const auto& c : candidates) total += c;
    candidates.push_back(total);
  }
  for (const auto& c : candidates)
    if (determinant(c) != 0) return c;
  return std::nullopt;
}

Matrix word_matrix(const std::vector<Matrix>& generators, const std::string& word) {
  if (generators.empty()) throw InputError("no generators");
  Matrix out = Matrix::identity(generators.front().rows());
  for (char c : word) {
    const bool inv = std::islower(static_cast<unsigned char>(c));
    const int idx = std::toupper(static_cast<unsigned char>(c)) - 'A';
    if (idx < 0 || idx >= static_cast<int>(generators.size()))
      throw InputError(std::string("word letter '") + c + "' names no generator");
    out = out * (inv ? checked_inverse(generators[static_cast<std::size_t>(idx)]) : generators[static_cast<std::size_t>(idx)]);
  }
  return out;
}

Matrix conjugate_by_word(const std::vector<Matrix>& generators, const std::string& word, const Matrix& l) {
  const Matrix g = word_matrix(generators, word);
  return g * l * checked_inverse(g);
}

bool DensityCertificate::contains(const Matrix& l) const {
  if (algebra_basis.empty()) return l.is_zero();
  if (l.rows() != algebra_basis.front().rows() || l.cols() != algebra_basis.front().cols()) return false;
  Span s(l.entries().size());
  for (const auto& b : algebra_basis) s.insert(b.entries());
  return s.contains(l.entries());
}

DensityCertificate lie_closure(const std::vector<Matrix>& generators, const DensityOptions& options) {
  if (generators.empty()) throw InputError("no generators given");
  if (generators.size() > 26) throw InputError("at most 26 generators are supported");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.square() || g.rows() != n) throw InputError("generators must be square matrices of one size");
  if (n == 0 || n % 2) throw InputError("generators must have even size");

  DensityCertificate cert;
  if (options.form) {
    if (options.form->rows() != n || options.form->cols() != n) throw InputError("form has the wrong size");
    if (options.form->transpose() != Rational(-1) * *options.form || determinant(*options.form) == 0)
      throw InputError("form is not antisymmetric and nondegenerate");
    cert.form = *options.form;
  } else {
    auto j = infer_symplectic_form(generators);
    if (!j) throw InputError("generators preserve no common symplectic form");
    cert.form = *j;
  }
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (!is_symplectic(generators[k], cert.form))
      throw InputError("generator " + std::string(1, static_cast<char>('A' + k)) + " is not symplectic for the form");

  const std::size_t m = n / 2;
  cert.target_dimension = m * (2 * m + 1);

  std::vector<Matrix> letters, letters_inv;
  std::string names;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Matrix inv = checked_inverse(generators[k]);
    letters.push_back(generators[k]);
    letters_inv.push_back(inv);
    names.push_back(static_cast<char>('A' + k));
    letters.push_back(inv);
    letters_inv.push_back(generators[k]);
    names.push_back(static_cast<char>('a' + k));
  }

  struct Origin {
    std::string word;  // conjugating word, applied to base
    std::string base;  // seed log or bracket
  };
  std::vector<Origin> origin;
  Span span(n * n);
  auto add = [&](const Matrix& l, Origin o) {
    ensure(in_symplectic_algebra(l, cert.form), "closure element left the symplectic Lie algebra");
    if (!span.insert(l.entries())) return false;
    cert.algebra_basis.push_back(l);
    origin.push_back(std::move(o));
    return true;
  };
  auto full = [&] { return cert.algebra_basis.size() == cert.target_dimension; };

  std::vector<std::size_t> frontier;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!is_unipotent(generators[k])) continue;
    if (add(nilpotent_log(generators[k]), {"", "log " + std::string(1, static_cast<char>('A' + k))}))
      frontier.push_back(cert.algebra_basis.size() - 1);
  }

  // Brackets of each new element with everything present; new brackets are
  // themselves new. Returns all elements added.
  auto close_brackets = [&](std::vector<std::size_t> fresh) {
    std::vector<std::size_t> added;
    for (std::size_t q = 0; q < fresh.size() && !full(); ++q) {
      const std::size_t i = fresh[q];
      for (std::size_t j = 0; j < cert.algebra_basis.size() && !full(); ++j) {
        if (j == i) continue;
        if (add(bracket(cert.algebra_basis[i], cert.algebra_basis[j]),
                {"", "[e" + std::to_string(i) + ", e" + std::to_string(j) + "]"})) {
          fresh.push_back(cert.algebra_basis.size() - 1);
          added.push_back(cert.algebra_basis.size() - 1);
        }
      }
    }
    return added;
  };
  for (auto k : close_brackets(frontier)) frontier.push_back(k);

  while (!frontier.empty() && !full() && cert.levels < options.max_word_length) {
    ++cert.levels;
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (std::size_t l = 0; l < letters.size() && !full(); ++l) {
        const Matrix c = letters[l] * cert.algebra_basis[i] * letters_inv[l];
        if (add(c, {std::string(1, names[l]) + origin[i].word, origin[i].base})) next.push_back(cert.algebra_basis.size() - 1);
      }
    }
    for (auto k : close_brackets(next)) next.push_back(k);
    frontier = std::move(next);
  }

  cert.dimension = cert.algebra_basis.size();
  cert.dense = full();
  cert.closed = cert.dense || frontier.empty();
  for (const auto& o : origin) cert.witness_log.push_back(o.word.empty() ? o.base : "Ad(" + o.word + ") " + o.base);
  return cert;
}

}  // namespace squaretile
