#include "doctest.h"
#include "licci/diagram.hpp"
#include "licci/errors.hpp"
#include "licci/weight.hpp"

using namespace licci;

TEST_CASE("base change round trips on A3") {
  Diagram d(2, 1, 2);
  WeightAlgebra wa(d);
  REQUIRE(wa.invertible());
  for (int i = 0; i < wa.n(); i++) {
    Weight w = wa.fundamental(i);
    RootVector c = wa.omega_to_alpha_int(wsub(w, wa.reflect(i, w)));
    RootVector simple(wa.n(), 0);
    simple[i] = 1;
    CHECK(c == simple);  // omega_i - s_i omega_i = alpha_i
    CHECK(wa.alpha_to_omega(simple) == wa.simple_root(i));
  }
  Weight mix = {2, -1, 3};
  CHECK(wa.alpha_to_omega(wa.omega_to_alpha_int(
            wadd(wa.simple_root(0), wa.simple_root(2)))) == wadd(wa.simple_root(0), wa.simple_root(2)));
  CHECK_FALSE(wa.is_dominant(mix));
  CHECK(wa.is_dominant(wa.rho()));
}

TEST_CASE("fundamental weights are not in the A3 root lattice") {
  Diagram d(2, 1, 2);
  WeightAlgebra wa(d);
  CHECK_THROWS(wa.omega_to_alpha_int(wa.fundamental(0)));
  std::vector<Rat> frac = wa.omega_to_alpha(wa.fundamental(0));
  CHECK(frac[0] == Rat(3, 4));  // known A3 inverse Cartan column
  CHECK(frac[1] == Rat(1, 2));
  CHECK(frac[2] == Rat(1, 4));
}

TEST_CASE("reflections in both bases agree") {
  Diagram d(2, 2, 2);  // D4
  WeightAlgebra wa(d);
  for (int i = 0; i < wa.n(); i++) {
    RootVector alpha(wa.n(), 0);
    alpha[i] = 1;
    RootVector ref = wa.reflect_root(i, alpha);
    CHECK(ref == wneg(alpha));  // s_i alpha_i = -alpha_i
    for (int j = 0; j < wa.n(); j++) {
      if (j == i) continue;
      RootVector beta(wa.n(), 0);
      beta[j] = 1;
      RootVector sref = wa.reflect_root(i, beta);
      // s_i alpha_j = alpha_j - c_ij alpha_i
      RootVector want = beta;
      want[i] -= wa.cartan().at(i, j).get_num();
      CHECK(sref == want);
    }
  }
  // Cross-base consistency: reflect in omega coords, convert, compare.
  Weight w = {1, 2, 0, -1};
  for (int i = 0; i < wa.n(); i++) {
    std::vector<Rat> a = wa.omega_to_alpha(w);
    std::vector<Rat> b = wa.omega_to_alpha(wa.reflect(i, w));
    // the difference must be a rational multiple of alpha_i
    for (int j = 0; j < wa.n(); j++) {
      if (j == i) continue;
      CHECK(a[j] == b[j]);
    }
  }
}

TEST_CASE("invariant pairing") {
  Diagram d(2, 1, 2);
  WeightAlgebra wa(d);
  // (omega_i, alpha_j) = delta_ij with the normalization (alpha, alpha) = 2.
  for (int i = 0; i < wa.n(); i++) {
    for (int j = 0; j < wa.n(); j++) {
      Rat got = wa.pairing(wa.fundamental(i), wa.simple_root(j));
      CHECK(got == (i == j ? Rat(1) : Rat(0)));
    }
  }
  // W-invariance under each simple reflection.
  Weight a = {1, -2, 3}, b = {0, 1, 2};
  for (int i = 0; i < wa.n(); i++)
    CHECK(wa.pairing(wa.reflect(i, a), wa.reflect(i, b)) == wa.pairing(a, b));
}

TEST_CASE("singular form is reported") {
  Diagram d(2, 4, 4);  // affine E7^(1)
  WeightAlgebra wa(d);
  CHECK_FALSE(wa.invertible());
  CHECK_THROWS_AS(wa.omega_to_alpha(wa.fundamental(0)), AffineTypeError);
  // Reflections stay available without the inverse form.
  RootVector alpha(wa.n(), 0);
  alpha[0] = 1;
  CHECK(wa.reflect_root(0, alpha) == wneg(alpha));
}
