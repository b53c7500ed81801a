#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "squaretile/error.hpp"
#include "squaretile/homology.hpp"
#include "support.hpp"

using namespace squaretile;
using namespace testing_support;

namespace {

Vector sum(std::initializer_list<std::pair<long, const Vector*>> terms) {
  Vector out((*terms.begin()->second).size());
  for (auto [c, v] : terms)
    for (std::size_t k = 0; k < v->size(); ++k) out[k] += c * (*v)[k];
  return out;
}

// Squares shared by two cylinders, divided by both heights: the number of
// times their core curves cross.
long shared_squares(const Cylinder& a, const Cylinder& b) {
  auto sa = a.squares(), sb = b.squares();
  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return static_cast<long>(common.size()) / (a.height * b.height);
}

// Assign delta_1 and delta_2 by which of them meets the named class.
std::pair<Vector, Vector> deltas(const Homology& hom, std::array<long, 2> dir, const Vector& meets_first,
                                 const Vector& meets_second) {
  const auto cs = cylinders(hom.origami(), dir);
  REQUIRE(cs.size() == 2);
  Vector d0 = waist_class(hom, cs[0]), d1 = waist_class(hom, cs[1]);
  if (hom.pairing(d0, meets_first) == 0) std::swap(d0, d1);
  CHECK(hom.pairing(d0, meets_first) != 0);
  CHECK(hom.pairing(d1, meets_second) != 0);
  return {d0, d1};
}

}  // namespace

TEST_CASE("ranks and gram matrices") {
  const Homology t(torus());
  CHECK(t.rank() == 2);
  const Matrix& g = t.gram();
  CHECK(g(0, 0) == 0);
  CHECK(abs(g(0, 1)) == 1);
  CHECK(g(1, 0) == -g(0, 1));
  CHECK(Homology(mstar()).rank() == 6);
  CHECK(Homology(l_shape()).rank() == 4);

  // <x, y> = +1 on the torus: east then north is positive.
  Vector x(2), y(2);
  x[0] = 1;
  y[1] = 1;
  CHECK(t.intersection(x, y) == 1);
  CHECK(t.intersection(y, x) == -1);
}

TEST_CASE("waist classes of M*") {
  const Homology hom(mstar());
  const auto hs = cylinders(mstar(), {1, 0});
  const auto vs = cylinders(mstar(), {0, 1});
  const Waists w = horizontal_vertical_waists(hom);
  REQUIRE(w.sigma.size() == 3);
  REQUIRE(w.zeta.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(hom.pairing(w.sigma[i], w.sigma[j]) == 0);
      CHECK(hom.pairing(w.zeta[i], w.zeta[j]) == 0);
      CHECK(hom.pairing(w.sigma[i], w.zeta[j]) == shared_squares(hs[i], vs[j]));
    }
  std::vector<Vector> all = w.sigma;
  all.insert(all.end(), w.zeta.begin(), w.zeta.end());
  CHECK(abs(determinant(Matrix::from_columns(all, 6))) == 1);

  CHECK(hom.holonomy(w.sigma[2]) == std::array<Rational, 2>{3, 0});
  CHECK(hom.holonomy(w.zeta[1]) == std::array<Rational, 2>{0, 2});

  // Slope one: delta_1 meets sigma_0, delta_2 meets zeta_2.
  auto [d1, d2] = deltas(hom, {1, 1}, w.sigma[0], w.zeta[2]);
  CHECK(d1 == sum({{1, &w.sigma[1]}, {1, &w.sigma[0]}, {1, &w.zeta[2]}}));
  CHECK(d2 == sum({{1, &w.sigma[2]}, {1, &w.zeta[1]}, {1, &w.zeta[0]}}));
}

TEST_CASE("waist classes of M**") {
  const Homology hom(mstarstar());
  const WaistOrder order{{}, {0, 2, 1}};
  const Waists w = horizontal_vertical_waists(hom, &order);
  CHECK(w.zeta_length == std::vector<long>{1, 2, 2});
  // zeta_2 is the vertical cylinder through squares 1 and 2.
  const auto vs = cylinders(mstarstar(), {0, 1});
  CHECK(w.zeta[2] == waist_class(hom, vs[1]));
  CHECK(vs[1].squares() == std::vector<std::size_t>{0, 1});

  auto [d1, d2] = deltas(hom, {2, 1}, w.sigma[0], w.zeta[0]);
  CHECK(d1 == sum({{1, &w.sigma[1]}, {2, &w.sigma[0]}, {1, &w.zeta[2]}}));
  CHECK(d2 == sum({{1, &w.sigma[1]}, {2, &w.sigma[2]}, {1, &w.zeta[1]}, {2, &w.zeta[0]}}));
  CHECK(hom.holonomy(d1) == std::array<Rational, 2>{4, 2});
}

TEST_CASE("perp bases") {
  CHECK(perp_subspace(Homology(torus())).vectors.empty());

  const Homology hs(mstar());
  const auto p = perp_subspace(hs);
  CHECK(p.from_waists);
  CHECK(p.labels == std::vector<std::string>{"sigma1-2sigma0", "sigma2-3sigma0", "zeta1-2zeta0", "zeta2-3zeta0"});
  const Waists w = horizontal_vertical_waists(hs);
  CHECK(p.vectors[1] == sum({{1, &w.sigma[2]}, {-3, &w.sigma[0]}}));

  const Homology hss(mstarstar());
  const WaistOrder order{{}, {0, 2, 1}};
  const auto q = perp_subspace(hss, &order);
  CHECK(q.labels == std::vector<std::string>{"sigma1-2sigma0", "sigma2-3sigma0", "zeta1-2zeta0", "zeta2-2zeta0"});
  for (const auto& v : q.vectors) CHECK(hss.holonomy(v) == std::array<Rational, 2>{0, 0});
}

TEST_CASE("chain level properties over the corpus") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (const auto& o : full_corpus()) {
    const Homology hom(o);
    const std::size_t n = o.size();
    CHECK(hom.rank() == 2 * stratum(o).genus);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(hom.is_cycle(hom.square_boundary(i)));
      CHECK(hom.holonomy_of_chain(hom.square_boundary(i)) == std::array<Rational, 2>{0, 0});
    }
    CHECK(nullspace(hom.holonomy_matrix()).size() + 2 == hom.rank());
    CHECK(perp_subspace(hom).vectors.size() + 2 == hom.rank());

    // Pairing ignores boundaries and is given by the gram matrix.
    for (std::size_t a = 0; a < hom.rank(); ++a)
      for (std::size_t b = 0; b < hom.rank(); ++b) {
        Vector c1 = hom.basis()[a], c2 = hom.basis()[b];
        for (std::size_t i = 0; i < n; ++i) {
          const int k1 = coeff(rng), k2 = coeff(rng);
          const Vector s = hom.square_boundary(i);
          for (std::size_t e = 0; e < c1.size(); ++e) {
            c1[e] += k1 * s[e];
            c2[e] += k2 * s[e];
          }
        }
        CHECK(hom.intersection(c1, c2) == hom.gram()(a, b));
        CHECK(hom.coordinates(c1) == hom.coordinates(hom.basis()[a]));
      }

    // Rows of a cylinder are homologous; horizontal rows equal their bottom edges.
    for (std::array<long, 2> dir : {std::array<long, 2>{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {3, 1}}) {
      for (const auto& c : cylinders(o, dir)) {
        const Vector w0 = waist_class(hom, c);
        for (std::size_t r = 1; r < c.rows.size(); ++r) CHECK(waist_class(hom, c, r) == w0);
        const auto hol = hom.holonomy(w0);
        CHECK(hol[0] == c.circumference * c.direction[0]);
        CHECK(hol[1] == c.circumference * c.direction[1]);
        if (dir[1] == 0 || dir[0] == 0) {
          Vector chain(hom.edge_count());
          for (auto [sq, slot] : c.rows[0].pieces) chain[dir[1] == 0 ? x_edge(sq) : y_edge(n, sq)] += 1;
          CHECK(hom.coordinates(chain) == w0);
        }
      }
    }
  }
}

TEST_CASE("errors") {
  const Homology hom(mstar());
  Vector open(hom.edge_count());
  std::size_t e = 0;
  while (hom.edge_init(e) == hom.edge_term(e)) ++e;
  open[e] = 1;
  CHECK_THROWS_AS(hom.coordinates(open), InputError);
  CHECK_THROWS_AS(hom.intersection(Vector(3), Vector(3)), InputError);
  const WaistOrder bad{{0, 0, 1}, {}};
  CHECK_THROWS_AS(perp_subspace(hom, &bad), InputError);
}
