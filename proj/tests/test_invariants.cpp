#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "squaretile/error.hpp"
#include "squaretile/invariants.hpp"
#include "support.hpp"

using namespace squaretile;
using namespace testing_support;

namespace {

bool even_orders(const Origami& o) {
  for (auto k : stratum(o).zero_orders)
    if (k % 2) return false;
  return true;
}

long mod2(long x) { return ((x % 2) + 2) % 2; }

// Arf invariant by majority vote, with q built only from horizontal and
// vertical core curves (embedded straight loops, so q = 1 on each).
// Needs the core curves to span H_1 mod 2.
std::optional<int> arf_from_core_curves(const Homology& hom) {
  const auto w = horizontal_vertical_waists(hom);
  std::vector<Vector> cores = w.sigma;
  cores.insert(cores.end(), w.zeta.begin(), w.zeta.end());
  const std::size_t r = hom.rank();
  // Pick a mod 2 independent subset of size r.
  std::vector<Vector> chosen;
  std::vector<std::vector<int>> rows;
  for (const auto& c : cores) {
    std::vector<int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<int>(mod2(to_long(c[i])));
    // Gaussian elimination against rows.
    std::vector<int> red = v;
    for (const auto& row : rows) {
      std::size_t p = 0;
      while (p < r && !row[p]) ++p;
      if (red[p])
        for (std::size_t i = 0; i < r; ++i) red[i] ^= row[i];
    }
    bool nonzero = false;
    for (int x : red) nonzero = nonzero || x;
    if (!nonzero) continue;
    // Keep rows in a form where each has a distinct leading bit.
    std::size_t p = 0;
    while (!red[p]) ++p;
    for (auto& row : rows)
      if (row[p])
        for (std::size_t i = 0; i < r; ++i) row[i] ^= red[i];
    rows.push_back(red);
    chosen.push_back(c);
  }
  if (chosen.size() != r) return std::nullopt;
  long ones = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    long q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask >> i & 1)) continue;
      q += 1;
      for (std::size_t j = i + 1; j < r; ++j)
        if (mask >> j & 1) q += to_long(hom.pairing(chosen[i], chosen[j]));
    }
    ones += mod2(q);
  }
  return 2 * ones > (1l << r) ? 1 : 0;
}

Vector random_combo(const Homology& hom, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Vector chain(hom.edge_count(), Rational(0));
  for (const auto& b : hom.basis()) {
    const int c = coef(rng);
    for (std::size_t e = 0; e < chain.size(); ++e) chain[e] += Rational(c) * b[e];
  }
  return chain;
}

Vector add(const Vector& a, const Vector& b) {
  Vector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

}  // namespace

TEST_CASE("spin parity of the named surfaces") {
  const Homology t(torus());
  const auto st = spin_parity(t);
  CHECK(st.parity == 1);
  CHECK(st.basis_values == std::vector<int>{1, 1});

  const Homology a(mstar()), b(mstarstar());
  CHECK(spin_parity(a).parity == 1);
  CHECK(spin_parity(b).parity == 0);
  CHECK(arf_from_core_curves(a) == std::optional<int>(1));
  CHECK(arf_from_core_curves(b) == std::optional<int>(0));
  CHECK(arf_from_core_curves(t) == std::optional<int>(1));

  CHECK(spin_parity(Homology(l_shape())).parity == 1);  // H(2) is connected, odd
}

TEST_CASE("odd zero orders have no spin structure") {
  bool found = false;
  for (const auto& o : random_corpus(80, 7)) {
    if (even_orders(o)) continue;
    found = true;
    const Homology hom(o);
    CHECK_THROWS_AS(spin_parity(hom), InputError);
  }
  CHECK(found);
}

TEST_CASE("quadratic refinement on realized curves") {
  std::mt19937 rng(7);
  std::size_t tested = 0;
  auto corpus = full_corpus(70, 8);
  for (const auto& o : corpus) {
    if (!even_orders(o) || stratum(o).genus == 0) continue;
    ++tested;
    const Homology hom(o);
    const auto spin = spin_parity(hom);
    const auto& basis = hom.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        const long expect = spin.basis_values[i] + spin.basis_values[j] + to_long(hom.gram()(i, j));
        CHECK(quadratic_form_of_chain(hom, add(basis[i], basis[j])) == mod2(expect));
      }
    for (int k = 0; k < 4; ++k) {
      const Vector c = random_combo(hom, rng);
      CHECK(quadratic_form_of_chain(hom, c) == quadratic_form(hom, spin, hom.coordinates(c)));
      CHECK(quadratic_form_of_chain(hom, Rational(-1) * Matrix::identity(c.size()) * c) == quadratic_form_of_chain(hom, c));
    }
    // Core curves of cylinders in a few directions are embedded geodesics.
    for (std::array<long, 2> d : {std::array<long, 2>{1, 0}, {0, 1}, {1, 1}, {2, 1}, {-1, 2}})
      for (const auto& cyl : cylinders(o, d)) CHECK(quadratic_form(hom, spin, waist_class(hom, cyl)) == 1);
    if (auto arf = arf_from_core_curves(hom)) CHECK(*arf == spin.parity);
  }
  CHECK(tested >= 20);
}

TEST_CASE("spin parity does not depend on labels, basis or SL(2,Z) orbit") {
  std::mt19937 rng(11);
  for (const auto& o : full_corpus(50, 8)) {
    if (!even_orders(o) || stratum(o).genus == 0) continue;
    const int p = spin_parity(Homology(o)).parity;
    std::vector<std::size_t> perm(o.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(spin_parity(Homology(o.relabeled(Permutation(perm)))).parity == p);
    CHECK(spin_parity(Homology(sl2z_act(Sl2z::T(), o))).parity == p);
    CHECK(spin_parity(Homology(sl2z_act(Sl2z::S(), o))).parity == p);
  }
}

TEST_CASE("involutions of the named surfaces") {
  const auto t = hyperelliptic_involution(torus());
  REQUIRE(t);
  CHECK(t->fixed_points() == 4);
  CHECK(t->fixed_vertices == 1);
  CHECK(t->fixed_edge_points == 2);
  CHECK(t->fixed_interior_points == 1);
  CHECK(t->hyperelliptic);
  CHECK(t->shift_halves == std::array<int, 2>{0, 0});

  const auto b = hyperelliptic_involution(mstarstar());
  REQUIRE(b);
  CHECK(b->fixed_points() == 8);
  CHECK(b->hyperelliptic);

  CHECK_FALSE(hyperelliptic_involution(mstar()).has_value());
}

TEST_CASE("involution search against iso and aut of the refinement") {
  for (const auto& o : full_corpus(50, 6)) {
    const Origami r = refine(o);
    CHECK(stratum(r).genus == stratum(o).genus);
    const Origami rotated(r.h_inv(), r.v_inv());
    std::vector<Permutation> oracle;
    if (auto p0 = iso(r, rotated))
      for (const auto& a : aut(r)) {
        const Permutation phi = *p0 * a;
        if ((phi * phi).is_identity()) oracle.push_back(phi);
      }
    std::sort(oracle.begin(), oracle.end());
    std::vector<Permutation> found;
    for (const auto& w : involutions(o)) found.push_back(w.refined);
    std::sort(found.begin(), found.end());
    CHECK(found == oracle);
  }
}

TEST_CASE("involution properties") {
  std::mt19937 rng(5);
  for (const auto& o : full_corpus(50, 7)) {
    const std::size_t g = stratum(o).genus;
    const Origami r = refine(o);
    const auto vx = vertex_of_corners(r);
    const auto sing = singularities(r);
    for (const auto& w : involutions(o)) {
      CHECK((w.refined * w.refined).is_identity());
      for (std::size_t s = 0; s < r.size(); ++s) {
        const std::size_t image = vx[r.v()(r.h()(w.refined(s)))];
        CHECK(sing[image].cone_order == sing[vx[s]].cone_order);
      }
      // Riemann-Hurwitz: 2g + 2 - F is divisible by 4 and nonnegative.
      CHECK(w.fixed_points() <= 2 * g + 2);
      CHECK((2 * g + 2 - w.fixed_points()) % 4 == 0);
    }
    const auto w0 = hyperelliptic_involution(o);
    std::vector<std::size_t> perm(o.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto w1 = hyperelliptic_involution(o.relabeled(Permutation(perm)));
    REQUIRE(w0.has_value() == w1.has_value());
    if (w0) {
      std::multiset<std::size_t> c0, c1;
      for (const auto& w : involutions(o)) c0.insert(w.fixed_points());
      for (const auto& w : involutions(o.relabeled(Permutation(perm)))) c1.insert(w.fixed_points());
      CHECK(c0 == c1);
    }
  }
}
