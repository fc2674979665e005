#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "licci/errors.hpp"
#include "licci/poly.hpp"
#include "oracles.hpp"

using namespace licci;

namespace {

MultiPoly var(int n, int k) { return MultiPoly::variable(n, k); }

PolyMatrix random_matrix(int n, int nvars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      MultiPoly p = MultiPoly::constant(nvars, Rat(static_cast<long>(rng() % 7) - 3));
      if (rng() % 3 == 0) p = p + var(nvars, static_cast<int>(rng() % nvars));
      m.at(i, j) = p;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic and term order") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  MultiPoly p = (x + y) * (x + y);
  MultiPoly q = x * x + x.scaled(Rat(2)) * y + y.pow(2);
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(-p == p.scaled(Rat(-1)));

  // Graded lex keeps the leading (highest) term last in the map.
  MultiPoly r = x.pow(3) + y + MultiPoly::constant(2, Rat(5));
  std::vector<Exponent> order;
  for (const auto& [e, c] : r.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponent>{{0, 0}, {0, 1}, {3, 0}});

  CHECK(MultiPoly::constant(2, Rat(7)).constant_value() == Rat(7));
  CHECK_FALSE(x.is_constant());
  CHECK_THROWS_AS(x.constant_value(), std::logic_error);
  CHECK(MultiPoly::zero(2).is_constant());

  CHECK(p.evaluate({Rat(2), Rat(3)}) == Rat(25));
  CHECK((x.pow(2) * y - MultiPoly::constant(2, Rat(3))).evaluate({Rat(2), Rat(5)}) == Rat(17));
}

TEST_CASE("exact division") {
  MultiPoly x = var(2, 0), y = var(2, 1);
  MultiPoly f = x.pow(2) - y.pow(2);
  CHECK(f.divide_exact(x - y) == x + y);
  CHECK(f.divide_exact(x + y) == x - y);
  CHECK((x * y).divide_exact(x * y).constant_value() == Rat(1));
  CHECK_THROWS_AS(f.divide_exact(x), std::logic_error);
  CHECK_THROWS_AS(f.divide_exact(MultiPoly::zero(2)), std::invalid_argument);
}

TEST_CASE("determinants agree with cofactor expansion") {
  for (std::uint64_t seed = 1; seed <= 4; seed++) {
    for (int n : {2, 3, 4, 5}) {
      PolyMatrix m = random_matrix(n, 3, seed * 100 + n);
      CHECK(m.det() == oracle::det_cofactor(m));
    }
  }
  PolyMatrix empty(0, 0, 2);
  CHECK(empty.det().constant_value() == Rat(1));
}

TEST_CASE("pfaffians") {
  // 2x2: pf = a01.
  PolyMatrix s2(2, 2, 1);
  s2.at(0, 1) = var(1, 0);
  s2.at(1, 0) = -var(1, 0);
  CHECK(s2.pfaffian() == var(1, 0));

  // Generic 4x4 skew matrix in 6 variables: pf^2 = det.
  PolyMatrix s4(4, 4, 6);
  int k = 0;
  for (int i = 0; i < 4; i++) {
    for (int j = i + 1; j < 4; j++) {
      s4.at(i, j) = var(6, k);
      s4.at(j, i) = -var(6, k);
      k++;
    }
  }
  MultiPoly pf = s4.pfaffian();
  CHECK(pf * pf == s4.det());
  CHECK(pf == var(6, 0) * var(6, 5) - var(6, 1) * var(6, 4) + var(6, 2) * var(6, 3));

  PolyMatrix bad(2, 2, 1);
  bad.at(0, 1) = var(1, 0);
  CHECK_THROWS_AS(bad.pfaffian(), NotSkewError);
}

TEST_CASE("nilpotent exponential") {
  PolyMatrix n(3, 3, 1);
  n.at(0, 1) = var(1, 0);
  n.at(1, 2) = var(1, 0);
  PolyMatrix e = n.exp_nilpotent();
  CHECK(e.at(0, 0).constant_value() == Rat(1));
  CHECK(e.at(0, 1) == var(1, 0));
  CHECK(e.at(0, 2) == var(1, 0).pow(2).scaled(Rat(1, 2)));
  PolyMatrix e_inv = n.scaled(MultiPoly::constant(1, Rat(-1))).exp_nilpotent();
  CHECK((e * e_inv - PolyMatrix::identity(3, 1)).is_zero());

  PolyMatrix not_nil = PolyMatrix::identity(2, 1);
  CHECK_THROWS_AS(not_nil.exp_nilpotent(), std::invalid_argument);
}

TEST_CASE("monomial bases by multidegree") {
  // Two variables of degrees (0,-1) and (-1,-1); coarse coordinate 1.
  PolyRing ring{{"a", "b"}, {{0, -1}, {-1, -1}}, 1};
  auto basis = monomials_of_multidegree(ring, {-1, -2});
  CHECK(basis == std::vector<Exponent>{{1, 1}});
  auto basis2 = monomials_of_multidegree(ring, {0, -3});
  CHECK(basis2 == std::vector<Exponent>{{3, 0}});
  CHECK(monomials_of_multidegree(ring, {-3, -1}).empty());
  CHECK(monomials_of_multidegree(ring, {0, 0}) == std::vector<Exponent>{{0, 0}});

  PolyRing flat{{"a"}, {{0, 0}}, -1};
  CHECK_THROWS_AS(monomials_of_multidegree(flat, {0, 0}), InfiniteMonomialBasisError);
  PolyRing loose{{"a"}, {{-1, 0}}, 1};
  CHECK_THROWS_AS(monomials_of_multidegree(loose, {-1, 0}), InfiniteMonomialBasisError);

  CHECK(monomial_multidegree(ring, {2, 1}) == RootVector{-1, -3});
  MultiPoly h = var(2, 0) * var(2, 1);
  CHECK(is_homogeneous_of(ring, h, {-1, -2}));
  CHECK_FALSE(is_homogeneous_of(ring, h + var(2, 0), {-1, -2}));
  CHECK(is_homogeneous_of(ring, MultiPoly::zero(2), {-1, -2}));
}

TEST_CASE("subsets and shuffle signs") {
  auto s = subsets(4, 2);
  CHECK(s == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(subsets(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(subsets(3, 3) == std::vector<std::vector<int>>{{0, 1, 2}});

  CHECK(shuffle_sign({0, 1}, 4) == 1);
  CHECK(shuffle_sign({2, 3}, 4) == 1);
  CHECK(shuffle_sign({1, 2}, 4) == 1);
  CHECK(shuffle_sign({1, 3}, 4) == -1);
  CHECK(shuffle_sign({1}, 3) == -1);
  CHECK(shuffle_sign({}, 3) == 1);
}

TEST_CASE("graded linear solves") {
  // Variables a, b with degrees (-1) and (-1); coarse coordinate 0.
  PolyRing ring{{"a", "b"}, {{-1}, {-1}}, 0};
  MultiPoly a = var(2, 0), b = var(2, 1);

  // x * a = a^2 + a b has the unique degree (-1) solution x = a + b.
  PolyMatrix A(1, 1, 2);
  A.at(0, 0) = a;
  bool unique = false;
  auto x = graded_solve(ring, A, {{-1}}, {a * a + a * b}, &unique);
  CHECK(x[0] == a + b);
  CHECK(unique);

  // Two unknowns, one equation: underdetermined, free variable pinned to 0.
  PolyMatrix B(1, 2, 2);
  B.at(0, 0) = a;
  B.at(0, 1) = a;
  auto y = graded_solve(ring, B, {{-1}, {-1}}, {a * b}, &unique);
  CHECK_FALSE(unique);
  CHECK(B.at(0, 0) * y[0] + B.at(0, 1) * y[1] == a * b);

  // Inconsistent: a * x = b has no polynomial solution of degree (-1).
  CHECK_THROWS_AS(graded_solve(ring, A, {{-1}}, {b * b}), NoSolutionError);
}

TEST_CASE("matrix helpers") {
  MultiPoly x = var(1, 0);
  PolyMatrix m(2, 3, 1);
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 3; j++) m.at(i, j) = x.pow(i + j);
  CHECK(m.transposed().at(2, 1) == x.pow(3));
  CHECK(m.submatrix({1}, {0, 2}).at(0, 1) == x.pow(3));
  CHECK(minor_of(m, {0, 1}, {0, 1}) == m.submatrix({0, 1}, {0, 1}).det());

  QMatrix q(2, 2);
  q.at(0, 1) = Rat(5);
  PolyMatrix lifted = PolyMatrix::from_rational(q, 3);
  CHECK(lifted.at(0, 1).constant_value() == Rat(5));
  QMatrix back = lifted.evaluate({Rat(1), Rat(1), Rat(1)});
  CHECK(back == q);
}
