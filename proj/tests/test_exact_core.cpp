#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/cyclic.hpp"
#include "positroid/matrix.hpp"
#include "positroid/rng.hpp"
#include "positroid/sign.hpp"

using namespace positroid;

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-5, 9).sign() == -1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("plucker basics") {
  ExactMatrix I2 = ExactMatrix::identity(2);
  CHECK(plucker(I2, {1, 2}) == Rational(1));

  ExactMatrix V = vandermonde_positive(4, 2);  // rows (1,i)
  ExactMatrix Vt = V.transpose();              // 2x4: (1,1,1,1),(1,2,3,4)
  CHECK(plucker(Vt, {1, 3}) == Rational(2));

  ExactMatrix R(2, 4);
  for (int j = 0; j < 4; ++j) { R(0, j) = j + 1; R(1, j) = 2 * (j + 1); }
  CHECK(plucker(R, {2, 4}) == Rational(0));

  CHECK_THROWS_AS(plucker(Vt, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("plucker is alternating in column order") {
  Rng rng(17);
  ExactMatrix M(4, 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j)
      M(i, j) = rng.positive_rational() - rng.positive_rational();
  Rational a = plucker(M, {1, 3, 4, 6});
  CHECK(plucker(M, {3, 1, 4, 6}) == -a);
  CHECK(plucker(M, {1, 3, 6, 4}) == -a);
  CHECK(plucker(M, {3, 1, 6, 4}) == a);
}

TEST_CASE("vandermonde rows and positivity") {
  ExactMatrix V = vandermonde_positive(3, 2);
  CHECK(V(0, 0) == Rational(1));
  CHECK(V(0, 1) == Rational(1));
  CHECK(V(1, 1) == Rational(2));
  CHECK(V(2, 1) == Rational(3));
  CHECK(all_maximal_minors_positive(V));

  CHECK(all_maximal_minors_positive(vandermonde_positive(4, 3)));
  CHECK_THROWS_AS(vandermonde_positive(2, 3), std::invalid_argument);

  // Square case against the product formula.
  for (int n = 1; n <= 6; ++n) {
    Rational expect = 1;
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) expect *= Rational(j - i);
    CHECK(vandermonde_positive(n, n).det() == expect);
  }

  for (int n = 1; n <= 8; ++n)
    for (int p = 1; p <= n; ++p) CHECK(all_maximal_minors_positive(vandermonde_positive(n, p)));
}

TEST_CASE("sign_var and varbar") {
  VarCount c = sign_var({Rational(4), Rational(-1), Rational(0), Rational(-2)});
  CHECK(c.var == 1);
  CHECK(c.varbar == 3);

  CHECK(sign_var({Rational(1), Rational(2), Rational(5)}).var == 0);

  c = sign_var({Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
  CHECK(c.var == 4);
  CHECK(c.varbar == 4);

  CHECK(sign_var({}).var == 0);
  CHECK(sign_var({Rational(0), Rational(0)}).varbar == 1);
  // Leading/trailing zeros are free sign choices.
  c = sign_var({Rational(0), Rational(3), Rational(0)});
  CHECK(c.var == 0);
  CHECK(c.varbar == 2);
}

TEST_CASE("flip_set is cyclic and ignores zeros") {
  std::vector<Sign> v = {Sign::Pos, Sign::Zero, Sign::Neg, Sign::Zero,
                         Sign::Pos, Sign::Pos,  Sign::Neg};
  CHECK(flip_set(v) == std::vector<int>{6, 7});
  CHECK(sign_var_signs(v).var == 3);

  CHECK(flip_set({Sign::Pos, Sign::Pos, Sign::Pos}).empty());
  // Positions 1 and 2 flip; the wrap pair (v_3, v_1) = (+,+) does not.
  CHECK(flip_set({Sign::Pos, Sign::Neg, Sign::Pos}) == std::vector<int>{1, 2});
  CHECK(flip_set({Sign::Pos, Sign::Neg, Sign::Neg, Sign::Pos}) == std::vector<int>{1, 3});
}

TEST_CASE("twisted shift") {
  ExactMatrix Z = vandermonde_positive(4, 2);
  ExactMatrix S = twisted_shift(Z, 1);
  CHECK(all_maximal_minors_positive(S));
  // p even: wrapped row is negated.
  CHECK(S(3, 0) == -Z(0, 0));
  CHECK(S(0, 0) == Z(1, 0));

  // steps = n: every row wraps once, so the whole matrix is scaled by
  // (-1)^(p-1) -- the same projective point either way.
  ExactMatrix F = twisted_shift(Z, 4);
  CHECK(F == Z.scaled(Rational(-1)));
  ExactMatrix Z5 = vandermonde_positive(5, 2);
  CHECK(twisted_shift(Z5, 5) == Z5.scaled(Rational(-1)));
  CHECK(twisted_shift(vandermonde_positive(5, 3), 5) == vandermonde_positive(5, 3));

  // p odd: plain rotation, no sign.
  ExactMatrix Z3 = vandermonde_positive(4, 3);
  ExactMatrix S3 = twisted_shift(Z3, 1);
  CHECK(S3(3, 2) == Z3(0, 2));

  for (int n = 3; n <= 6; ++n)
    for (int p = 2; p <= 3; ++p)
      for (int s = 0; s <= n; ++s)
        CHECK(all_maximal_minors_positive(twisted_shift(vandermonde_positive(n, p), s)));

  // Negative steps shift the other way and still preserve positivity.
  CHECK(all_maximal_minors_positive(twisted_shift(Z, -1)));
  CHECK(twisted_shift(twisted_shift(Z, -1), 1) == Z);
}

TEST_CASE("gaussian kernel is totally positive and near-identity") {
  CHECK_THROWS_AS(gaussian_tp_kernel(3, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_tp_kernel(3, Rational(0)), std::invalid_argument);

  ExactMatrix R = gaussian_tp_kernel(2, Rational(1, 2));
  CHECK(R(0, 0) == Rational(1));
  CHECK(R(1, 1) == Rational(1));
  CHECK(R.det() == Rational(3, 4));

  CHECK(totally_positive(gaussian_tp_kernel(4, Rational(1, 3))));
  for (int n = 2; n <= 6; ++n)
    for (long d : {2L, 3L, 5L}) CHECK(totally_positive(gaussian_tp_kernel(n, Rational(1, d))));
}

TEST_CASE("rank and kernel") {
  ExactMatrix E(2, 5);
  E(0, 0) = 1;
  for (int j = 1; j < 5; ++j) E(1, j) = 1;
  CHECK(E.rank() == 2);
  ExactMatrix K = E.kernel();
  CHECK(K.rows() == 3);
  ExactMatrix Z = E * K.transpose();
  for (int i = 0; i < Z.rows(); ++i)
    for (int j = 0; j < Z.cols(); ++j) CHECK(Z(i, j).is_zero());
}

TEST_CASE("cyclic intervals") {
  CyclicInterval w(6, 2, 7);
  CHECK(w.contains(6));
  CHECK(w.contains(7));
  CHECK(w.contains(1));
  CHECK(w.contains(2));
  CHECK(!w.contains(3));
  CHECK(w.size() == 4);
  CHECK(w.elements() == std::vector<int>{6, 7, 1, 2});

  CyclicInterval s(3, 3, 7);
  CHECK(s.size() == 1);
  CHECK(s.contains(3));
  CHECK(!s.contains(4));

  CHECK_THROWS_AS(CyclicInterval(0, 3, 7), std::invalid_argument);
}
