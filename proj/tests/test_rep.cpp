#include <cstdio>
#include <vector>

#include "doctest.h"
#include "licci/diagram.hpp"
#include "licci/errors.hpp"
#include "licci/rep.hpp"
#include "licci/serialize.hpp"
#include "licci/weight.hpp"
#include "oracles.hpp"

using namespace licci;

namespace {

void check_chevalley(const Rep& rep, int n) {
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      QMatrix lhs = rep.E[i] * rep.F[j] - rep.F[j] * rep.E[i];
      if (i != j) {
        CHECK(lhs.is_zero());
        continue;
      }
      QMatrix h(rep.dim(), rep.dim());
      for (int k = 0; k < rep.dim(); k++) h.at(k, k) = Rat(rep.weights[k][i].get_si());
      CHECK(lhs == h);
    }
  }
}

}  // namespace

TEST_CASE("small irreducibles have the oracle dimensions") {
  Diagram a2(2, 1, 1);  // path x1 - u
  WeightAlgebra wa(a2);
  struct Case {
    std::vector<long> lambda;
    long dim;
  };
  const std::vector<Case> cases = {
      {{1, 0}, 3}, {{0, 1}, 3}, {{1, 1}, 8}, {{2, 0}, 6}, {{3, 1}, 24},
  };
  for (const auto& c : cases) {
    Weight lambda(c.lambda.begin(), c.lambda.end());
    const Rep& rep = get_irrep(a2, lambda);
    CHECK(rep.dim() == c.dim);
    CHECK(rep.dim() == oracle::weyl_dim(a2, c.lambda));
    CHECK(rep.weights[0] == lambda);
    CHECK(rep.highest == lambda);
    check_chevalley(rep, wa.n());
  }
}

TEST_CASE("weights are dominated and multiplicity-graded consistently") {
  Diagram a3(2, 1, 2);
  const Rep& rep = get_irrep(a3, Weight{0, 1, 0});  // middle fundamental of A3
  CHECK(rep.dim() == 6);
  // Origins form a tree rooted at the highest weight vector.
  CHECK(rep.origin[0] == std::pair<int, int>(-1, -1));
  for (int k = 1; k < rep.dim(); k++) {
    auto [vertex, parent] = rep.origin[k];
    REQUIRE(parent >= 0);
    CHECK(parent < k);
    Weight w = rep.weights[parent];
    WeightAlgebra wa(a3);
    CHECK(wsub(w, rep.weights[k]) == wa.simple_root(vertex));
  }
  CHECK(weight_space(rep, rep.highest) == std::vector<int>{0});
}

TEST_CASE("adjoint representations and graded dimensions") {
  Diagram d4(2, 2, 2);
  // Adjoint highest weight of D4 is the fundamental weight at the center.
  const Rep& adj = get_irrep(d4, Weight{0, 1, 0, 0});
  CHECK(adj.dim() == 28);
  CHECK(adj.dim() == oracle::weyl_dim(d4, {0, 1, 0, 0}));
  CHECK(static_cast<int>(all_roots(d4).size()) + 4 == 28);

  std::vector<int> dims = z1_graded_dims(d4);
  // Levi A3 plus Cartan line in the middle, wedge-square blocks outside.
  std::vector<int> want = {static_cast<int>(oracle::binomial(4, 2)), 16,
                           static_cast<int>(oracle::binomial(4, 2))};
  CHECK(dims == want);
}

TEST_CASE("reflection lifts permute weight spaces") {
  Diagram a3(2, 1, 2);
  WeightAlgebra wa(a3);
  const Rep& rep = get_irrep(a3, Weight{1, 0, 0});
  REQUIRE(rep.dim() == 4);
  for (int i = 0; i < wa.n(); i++) {
    QMatrix s = simple_reflection_lift(rep, i);
    CHECK(s * simple_reflection_lift_inverse(rep, i) == QMatrix::identity(4));
    for (int col = 0; col < 4; col++) {
      for (int row = 0; row < 4; row++) {
        if (s.at(row, col) == 0) continue;
        CHECK(rep.weights[row] == wa.reflect(i, rep.weights[col]));
      }
    }
  }
  WeylWord w = parse_word(a3, "z1 u x1");
  QMatrix lift = word_lift(rep, w);
  CHECK(lift * word_lift_inverse(rep, w) == QMatrix::identity(4));
}

TEST_CASE("root operators raise and lower by the root") {
  Diagram a3(2, 1, 2);
  WeightAlgebra wa(a3);
  const Rep& rep = get_irrep(a3, Weight{1, 0, 0});
  RootVector beta{0, 1, 1};  // alpha_u + alpha_z1
  RootOperators ops = root_operators(rep, wa, beta);
  Weight shift = wa.alpha_to_omega(beta);
  CHECK_FALSE(ops.E.is_zero());
  for (int col = 0; col < rep.dim(); col++) {
    for (int row = 0; row < rep.dim(); row++) {
      if (ops.E.at(row, col) != 0) CHECK(rep.weights[row] == wadd(rep.weights[col], shift));
      if (ops.F.at(row, col) != 0) CHECK(rep.weights[row] == wsub(rep.weights[col], shift));
    }
  }
  CHECK_THROWS_AS(root_operators(rep, wa, RootVector{1, 0, 1}), NotPositiveRootError);
}

TEST_CASE("component grading by the z1 drop") {
  Diagram a3(2, 1, 2);
  WeightAlgebra wa(a3);
  const Rep& rep = get_irrep(a3, Weight{1, 0, 0});
  int z1 = a3.index_of("z1");
  std::vector<std::vector<int>> grading = t_grading(rep, wa, z1);
  REQUIRE(grading.size() == 2);
  CHECK(grading[0].size() == 3);
  CHECK(grading[1].size() == 1);
  CHECK(component_at_drop(rep, wa, z1, 0) == grading[0]);
  CHECK(component_at_drop(rep, wa, z1, 1) == grading[1]);
}

TEST_CASE("representations serialize and round trip through a file") {
  Diagram a2(2, 1, 1);
  const Rep& rep = get_irrep(a2, Weight{1, 1});
  std::string path = "rep_roundtrip_tmp.json";
  rep_to_json_file(rep, path);
  Rep back = rep_from_json_file(path);
  std::remove(path.c_str());
  CHECK(back.dim() == rep.dim());
  CHECK(back.highest == rep.highest);
  CHECK(back.weights == rep.weights);
  CHECK(back.origin == rep.origin);
  for (int i = 0; i < 2; i++) {
    CHECK(back.E[i] == rep.E[i]);
    CHECK(back.F[i] == rep.F[i]);
  }
}

TEST_CASE("irreducible construction rejects bad input") {
  Diagram a2(2, 1, 1);
  CHECK_THROWS_AS(build_irrep(a2, Weight{-1, 0}), NotDominantError);
  Diagram affine(3, 3, 3);
  CHECK_THROWS_AS(build_irrep(affine, Weight(affine.size(), 0)), NotFiniteTypeError);
}
