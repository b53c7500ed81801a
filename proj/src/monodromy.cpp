#include "squaretile/monodromy.hpp"

#include <numeric>

#include "squaretile/error.hpp"

namespace squaretile {

Vector MultitwistAction::apply(const Homology& hom, const Vector& gamma) const {
  Vector out = gamma;
  for (std::size_t c = 0; c < waists.size(); ++c) {
    const Rational coeff = sign * twist_counts[c] * hom.pairing(waists[c], gamma);
    if (coeff == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += coeff * waists[c][k];
  }
  return out;
}

MultitwistAction multitwist(const Homology& hom, std::array<long, 2> dir) {
  MultitwistAction mt;
  mt.direction = normalize_direction(dir);
  const auto [p, q] = mt.direction;
  mt.cylinders = cylinders(hom.origami(), mt.direction);

  long k = 1;
  for (const auto& c : mt.cylinders) k = std::lcm(k, c.circumference / std::gcd(c.circumference, c.height));
  mt.shear = k;
  for (const auto& c : mt.cylinders) {
    ensure(k * c.height % c.circumference == 0, "twist count is not integral");
    mt.twist_counts.push_back(k * c.height / c.circumference);
    mt.waists.push_back(waist_class(hom, c));
  }
  mt.sign = p == 0 ? -1 : 1;
  const long s = mt.sign * k;
  mt.derivative = Sl2z::checked(1 - s * p * q, s * p * p, -s * q * q, 1 + s * p * q);

  const std::size_t r = hom.rank();
  mt.matrix_h1 = Matrix(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector e(r);
    e[j] = 1;
    mt.matrix_h1.set_column(j, mt.apply(hom, e));
  }
  ensure(mt.matrix_h1.transpose() * hom.gram() * mt.matrix_h1 == hom.gram(), "multitwist does not preserve the intersection form");
  return mt;
}

Matrix restrict_to(const Matrix& m, const std::vector<Vector>& basis) {
  const std::size_t d = basis.size();
  Matrix out(d, d);
  if (d == 0) return out;
  const LinearSolver solver(Matrix::from_columns(basis, m.rows()));
  ensure(solver.rank() == d, "restriction basis is linearly dependent");
  for (std::size_t j = 0; j < d; ++j) {
    const auto x = solver.solve(m * basis[j]);
    ensure(x.has_value(), "subspace is not invariant under the action");
    out.set_column(j, *x);
  }
  return out;
}

Matrix perp_matrix(const MultitwistAction& mt, const PerpBasis& basis) { return restrict_to(mt.matrix_h1, basis.vectors); }

Matrix cohomology_matrix(const Matrix& m) { return checked_inverse(m).transpose(); }

std::optional<Vector> express(const std::vector<Vector>& family, const Vector& target) {
  if (family.empty()) return is_zero(target) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return LinearSolver(Matrix::from_columns(family, target.size())).solve(target);
}

}  // namespace squaretile
