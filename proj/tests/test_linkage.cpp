#include <utility>
#include <vector>

#include "doctest.h"
#include "licci/diagram.hpp"
#include "licci/errors.hpp"
#include "licci/linkage.hpp"
#include "licci/resolution.hpp"

using namespace licci;

namespace {

GradedComplex koszul() {
  Diagram d(2, 1, 2);
  return build_resolution(d, Format(1, 3, 3, 1), parse_word(d, "z1 u x1"));
}

GradedComplex split_d4() {
  Diagram d(2, 2, 2);
  return build_resolution(d, Format(1, 4, 4, 1), {});
}

int nonzero_count(const PolyMatrix& m, int col) {
  int n = 0;
  for (int i = 0; i < m.rows(); i++)
    if (!m.at(i, col).is_zero()) n++;
  return n;
}

}  // namespace

TEST_CASE("multiplication lifts on the Koszul complex") {
  GradedComplex c = koszul();
  StructureMaps maps = structure_maps(c);
  CHECK(maps.pairs == subsets(3, 2));
  CHECK(maps.a1.is_constant());
  REQUIRE(maps.w31.rows() == 3);
  REQUIRE(maps.w31.cols() == 3);

  // Exterior multiplication: each pair column hits exactly one generator of
  // F2, with a constant unit.
  for (int t = 0; t < 3; t++) {
    CHECK(nonzero_count(maps.w31, t) == 1);
    CHECK_FALSE(maps.w31.at(t, t).is_zero());
    CHECK(maps.w31.at(t, t).is_constant());
  }

  // Independent replay of the defining contraction.
  Rat inv = Rat(1) / maps.a1.constant_value();
  for (int t = 0; t < 3; t++) {
    int i = maps.pairs[t][0], j = maps.pairs[t][1];
    for (int m = 0; m < 3; m++) {
      MultiPoly got = MultiPoly::zero(3);
      for (int g = 0; g < 3; g++) got = got + c.d2.at(m, g) * maps.w31.at(g, t);
      MultiPoly want = MultiPoly::zero(3);
      if (m == j) want = want + c.d1.at(0, i).scaled(inv);
      if (m == i) want = want - c.d1.at(0, j).scaled(inv);
      CHECK(got == want);
    }
  }

  REQUIRE(maps.w21.rows() == 1);
  REQUIRE(maps.w21.cols() == 9);
  for (int col = 0; col < 9; col++) {
    if (col == 2 || col == 4 || col == 6) {
      CHECK(maps.w21.at(0, col).is_constant());
      CHECK_FALSE(maps.w21.at(0, col).is_zero());
    } else {
      CHECK(maps.w21.at(0, col).is_zero());
    }
  }
}

TEST_CASE("multiplication lifts on the split complex act as the identity") {
  GradedComplex c = split_d4();
  StructureMaps maps = structure_maps(c);
  REQUIRE(maps.pairs.size() == 6);

  // The single unit of d1 sits in slot 3; pairs through it reproduce the
  // matching F2 generator, all other pairs map to zero.
  for (size_t t = 0; t < maps.pairs.size(); t++) {
    int i = maps.pairs[t][0], j = maps.pairs[t][1];
    if (j == 3) {
      CHECK(nonzero_count(maps.w31, static_cast<int>(t)) == 1);
      CHECK_FALSE(maps.w31.at(i, static_cast<int>(t)).is_zero());
      CHECK(maps.w31.at(i, static_cast<int>(t)).is_constant());
    } else {
      CHECK(nonzero_count(maps.w31, static_cast<int>(t)) == 0);
    }
  }

  REQUIRE(maps.w21.rows() == 1);
  REQUIRE(maps.w21.cols() == 16);
  for (int col = 0; col < 16; col++) {
    if (col == 15) {
      CHECK(maps.w21.at(0, col).is_constant());
      CHECK_FALSE(maps.w21.at(0, col).is_zero());
    } else {
      CHECK(maps.w21.at(0, col).is_zero());
    }
  }
}

TEST_CASE("structure maps reject unsupported shapes") {
  Diagram d(3, 1, 2);
  GradedComplex c = build_resolution(d, Format(2, 4, 3, 1), {});
  CHECK_THROWS_AS(structure_maps(c), FormatError);
}

TEST_CASE("linked format arithmetic") {
  CHECK(link_format(Format(1, 3, 3, 1)) == Format(1, 4, 3, 0));
  CHECK(link_format(Format(1, 4, 3, 0)) == Format(1, 3, 3, 1));
  CHECK(link_format(Format(1, 4, 5, 2)) == Format(1, 5, 5, 1));
  CHECK(link_format(Format(1, 5, 5, 1)) == Format(1, 4, 5, 2));
  CHECK(link_format(link_format(Format(1, 5, 6, 2))) == Format(1, 5, 6, 2));
  CHECK_THROWS_AS(link_format(Format(1, 2, 2, 1)), FormatError);
  CHECK_THROWS_AS(link_format(Format(2, 4, 3, 1)), FormatError);
}

TEST_CASE("column selections are validated") {
  GradedComplex c = koszul();
  CHECK_THROWS_AS(link(c, {0, 1}), FormatError);
  CHECK_THROWS_AS(link(c, {0, 1, 9}), FormatError);
  CHECK_THROWS_AS(link(c, {0, 1, 1}), FormatError);
  CHECK_THROWS_AS(link(c, {2, 1, 0}), FormatError);
}

TEST_CASE("a split column triple is flagged, not linked") {
  GradedComplex c = split_d4();
  // Columns 0..2 of the split d1 are zero, which can never be regular.
  CHECK_THROWS_AS(link(c, {0, 1, 2}), RegularSequenceSuspect);
}

TEST_CASE("the Koszul complex links to itself") {
  GradedComplex c = koszul();
  LinkResult res = link(c, {0, 1, 2});
  CHECK(res.linked.format == Format(1, 4, 3, 0));
  CHECK(res.evidence.find("heuristic") != std::string::npos);

  // Same ambient data, mapping-cone grading.
  CHECK(res.linked.sigma == c.sigma);
  CHECK(res.linked.ring.names == c.ring.names);
  CHECK(res.linked.table.modules[0] == c.table.modules[0]);
  CHECK(res.linked.table.modules[1].size() == 4);
  CHECK(res.linked.table.modules[1][0] == RootVector{0, 0, 0});
  CHECK(res.linked.table.modules[3].empty());

  // The first entry of the linked d1 is the degree-zero comparison unit.
  CHECK(res.psi3.at(0, 0).is_constant());
  CHECK(res.psi3.at(0, 0).constant_value() != 0);
  CHECK(res.linked.d1.at(0, 0) == res.psi3.at(0, 0));

  CheckReport report = check_complex(res.linked);
  CHECK(report.ok());
}

TEST_CASE("degree-zero rank deficits") {
  GradedComplex k = koszul();
  std::pair<int, int> dk = rank_invariants(k, structure_maps(k));
  CHECK(dk.first == 0);
  CHECK(dk.second == 0);

  GradedComplex s = split_d4();
  std::pair<int, int> dsp = rank_invariants(s, structure_maps(s));
  CHECK(dsp.first == 0);
  CHECK(dsp.second == 0);
}
