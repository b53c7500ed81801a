#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "squaretile/density.hpp"
#include "squaretile/error.hpp"

using namespace squaretile;

namespace {

const Matrix A_star{{1, 0, 3, 3}, {0, 1, -2, -4}, {0, 0, 1, 0}, {0, 0, 0, 1}};
const Matrix B_star{{1, 0, 0, 0}, {0, 1, 0, 0}, {3, 3, 1, 0}, {-2, -4, 0, 1}};
const Matrix C_star{{2, 2, 1, 2}, {-1, -1, -1, -2}, {-1, -2, 0, -2}, {1, 2, 1, 3}};
const Matrix D_star = A_star;
const Matrix E_star{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {-1, -3, 0, 1}};
const Matrix F_star{{2, 3, 1, 3}, {-2, -5, -2, -6}, {-1, -3, 0, -3}, {2, 6, 2, 7}};
const Matrix log_A{{0, 0, 3, 3}, {0, 0, -2, -4}, {0, 0, 0, 0}, {0, 0, 0, 0}};

const std::vector<std::string> words{"B", "BB", "AB", "AAB", "BAB", "C", "CC", "AC", "BC"};

// As displayed, except the first matrix: its entry (4, 1) is printed as -14,
// which puts it outside sp(J). The conjugate is +14 (compare B^2, with 56).
const Matrix b_conjugate_as_printed{{-3, 3, 3, 3}, {-2, -10, -2, -4}, {-15, -21, 3, -3}, {-14, 34, 2, 10}};
const std::vector<Matrix> abc_conjugates{
    {{-3, 3, 3, 3}, {-2, -10, -2, -4}, {-15, -21, 3, -3}, {14, 34, 2, 10}},
    {{-6, 6, 3, 3}, {-4, -20, -2, -4}, {-60, -84, 6, -6}, {56, 136, 4, 20}},
    {{-6, 42, 120, 210}, {-28, -104, -140, -370}, {-15, -21, 6, -42}, {14, 34, 28, 104}},
    {{-9, 81, 411, 747}, {-54, -198, -498, -1332}, {-15, -21, 9, -81}, {14, 34, 54, 198}},
    {{54, 522, 120, 210}, {-348, -1164, -140, -370}, {-999, -2133, -54, -522}, {1422, 3978, 348, 1164}},
    {{4, 8, 6, 6}, {-2, -4, -3, -3}, {-4, -8, -3, -3}, {4, 8, 3, 3}},
    {{16, 32, 17, 25}, {-12, -24, -12, -18}, {-16, -32, -14, -22}, {16, 32, 14, 22}},
    {{4, 8, 10, 26}, {-10, -20, -19, -59}, {-4, -8, -7, -23}, {4, 8, 7, 23}},
    {{-2, 14, 6, 6}, {1, -7, -3, -3}, {-4, 10, 6, 6}, {1, 11, 3, 3}},
};

const std::vector<Matrix> def_conjugates{
    {{0, 6, 3, 3}, {-2, -10, -2, -4}, {-2, -4, 1, -1}, {6, 24, 3, 9}},
    {{0, 12, 3, 3}, {-4, -20, -2, -4}, {-8, -16, 2, -2}, {24, 96, 6, 18}},
    {{12, 66, 111, 255}, {-22, -98, -146, -364}, {-2, -4, -1, -11}, {6, 24, 33, 87}},
    {{48, 252, 387, 915}, {-84, -372, -522, -1308}, {-8, -16, -6, -42}, {24, 96, 126, 330}},
    {{156, 720, 111, 255}, {-240, -1044, -146, -364}, {-96, -360, -36, -120}, {624, 2664, 360, 924}},
    {{12, 36, 12, 30}, {-24, -72, -20, -58}, {-15, -45, -12, -36}, {30, 90, 24, 72}},
    {{54, 162, 51, 147}, {-108, -324, -98, -292}, {-60, -180, -54, -162}, {120, 360, 108, 324}},
    {{57, 171, 219, 651}, {-114, -342, -434, -1300}, {-15, -45, -57, -171}, {30, 90, 114, 342}},
    {{30, 114, 12, 30}, {-62, -226, -20, -58}, {-71, -253, -20, -64}, {234, 846, 72, 216}},
};

}  // namespace

TEST_CASE("unipotent logs") {
  CHECK(is_unipotent(A_star));
  CHECK(is_unipotent(C_star));
  CHECK(is_unipotent(F_star));
  CHECK_FALSE(is_unipotent(Rational(-1) * Matrix::identity(4)));
  CHECK(nilpotent_log(A_star) == log_A);
  CHECK(nilpotent_log(D_star) == log_A);
  CHECK(nilpotent_log(Matrix::identity(4)).is_zero());
  CHECK_THROWS_AS(nilpotent_log(Rational(-1) * Matrix::identity(2)), InputError);
  for (const auto& m : {A_star, B_star, C_star, E_star, F_star}) CHECK(nilpotent_exp(nilpotent_log(m)) == m);
  const Matrix big{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}};
  CHECK(nilpotent_exp(nilpotent_log(big)) == big);
}

TEST_CASE("invariant forms") {
  const auto j = infer_symplectic_form({A_star, B_star, C_star});
  REQUIRE(j.has_value());
  for (const auto& m : {A_star, B_star, C_star}) CHECK(is_symplectic(m, *j));
  CHECK(determinant(*j) != 0);
  const Matrix j2{{0, 1}, {-1, 0}};
  CHECK(*infer_symplectic_form({Matrix{{1, 1}, {0, 1}}}) == j2);
  CHECK_FALSE(infer_symplectic_form({Matrix{{2, 0}, {0, 1}}}).has_value());
}

TEST_CASE("conjugates displayed for A*, B*, C*") {
  const std::vector<Matrix> gens{A_star, B_star, C_star};
  std::vector<Vector> flat{log_A.entries()};
  for (std::size_t k = 0; k < words.size(); ++k) {
    CHECK(conjugate_by_word(gens, words[k], log_A) == abc_conjugates[k]);
    flat.push_back(abc_conjugates[k].entries());
  }
  CHECK(rank(Matrix::from_rows(flat, 16)) == 10);

  const auto cert = lie_closure(gens);
  CHECK(cert.dense);
  CHECK(cert.dimension == 10);
  CHECK(cert.contains(log_A));
  for (const auto& c : abc_conjugates) CHECK(cert.contains(c));
  CHECK_FALSE(in_symplectic_algebra(b_conjugate_as_printed, cert.form));
  CHECK_FALSE(cert.contains(b_conjugate_as_printed));
  for (const auto& l : cert.algebra_basis) CHECK(in_symplectic_algebra(l, cert.form));
  CHECK(cert.witness_log.size() == cert.dimension);
  CHECK(cert.witness_log.front() == "log A");
}

TEST_CASE("conjugates displayed for D*, E*, F*") {
  const std::vector<Matrix> gens{D_star, E_star, F_star};
  std::vector<Vector> flat{log_A.entries()};
  const std::vector<std::string> w{"B", "BB", "AB", "ABB", "BAB", "C", "CC", "AC", "BC"};
  for (std::size_t k = 0; k < w.size(); ++k) {
    CHECK(conjugate_by_word(gens, w[k], log_A) == def_conjugates[k]);
    flat.push_back(def_conjugates[k].entries());
  }
  CHECK(rank(Matrix::from_rows(flat, 16)) == 10);
  const auto cert = lie_closure(gens);
  CHECK(cert.dense);
  CHECK(cert.dimension == 10);
  for (const auto& c : def_conjugates) CHECK(cert.contains(c));
}

TEST_CASE("small cases") {
  const Matrix J{{0, 1}, {-1, 0}};
  const auto sl2 = lie_closure({Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {1, 1}}}, {8, J});
  CHECK(sl2.dense);
  CHECK(sl2.dimension == 3);
  CHECK(sl2.contains(Matrix{{1, 0}, {0, -1}}));

  const auto id = lie_closure({Matrix::identity(4)});
  CHECK_FALSE(id.dense);
  CHECK(id.dimension == 0);

  // One unipotent alone spans a line, closed but not dense.
  const auto one = lie_closure({A_star}, {8, *infer_symplectic_form({A_star, B_star, C_star})});
  CHECK(one.dimension == 1);
  CHECK(one.closed);
  CHECK_FALSE(one.dense);

  CHECK_THROWS_AS(lie_closure({Matrix{{1, 1}, {0, 1}}, Matrix::identity(4)}), InputError);
  CHECK_THROWS_AS(lie_closure({Matrix{{2, 0}, {0, 1}}}, {8, J}), InputError);
  CHECK_THROWS_AS(lie_closure({}), InputError);
}

TEST_CASE("dimension is monotone in the word bound") {
  const std::vector<Matrix> gens{A_star, B_star, C_star};
  std::size_t last = 0;
  for (std::size_t cap = 0; cap <= 4; ++cap) {
    const auto c = lie_closure(gens, {cap, std::nullopt});
    CHECK(c.dimension >= last);
    last = c.dimension;
    if (c.dense) CHECK(lie_closure(gens, {cap + 3, std::nullopt}).dense);
  }
  CHECK(last == 10);
}
