#include <vector>

#include "doctest.h"
#include "licci/diagram.hpp"
#include "licci/errors.hpp"
#include "licci/grading.hpp"
#include "licci/weight.hpp"
#include "licci/weyl.hpp"

using namespace licci;

namespace {

bool same_set(std::vector<RootVector> a, std::vector<RootVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("weight chains of the smallest format") {
  // Format (1,3,3,1), path diagram with storage order x1, u, z1.
  Diagram d(2, 1, 2);
  Format f(1, 3, 3, 1);
  WeightAlgebra wa(d);
  QSequences q = q_sequences(d, f, wa);

  CHECK(q.q0p == std::vector<Weight>{{1, 0, 0}});
  CHECK(q.q1p == std::vector<Weight>{{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}});
  CHECK(q.q1 == std::vector<Weight>{{0, 1, 0}, {1, -1, 1}, {-1, 0, 1}});
  CHECK(q.q2 == std::vector<Weight>{{0, 1, 0}, {1, -1, 1}, {1, 0, -1}});
  CHECK(q.q2p == std::vector<Weight>{{0, 0, 1}, {0, 1, -1}, {1, -1, 0}});
  CHECK(q.q3p == std::vector<Weight>{{0, 0, 1}});
}

TEST_CASE("weight chain symmetries on a larger shape") {
  // Format (1,5,6,2) on the diagram with arms 1, 2, 2 around the center.
  Diagram d(2, 3, 3);
  Format f(1, 5, 6, 2);
  WeightAlgebra wa(d);
  QSequences q = q_sequences(d, f, wa);
  int f1 = f.f1, f2 = f.f2, f3 = f.f3;
  REQUIRE(static_cast<int>(q.q1.size()) == f1);
  REQUIRE(static_cast<int>(q.q2.size()) == f2);
  REQUIRE(static_cast<int>(q.q3p.size()) == f3);

  Weight wz1 = wa.fundamental(d.index_of("z1"));
  Weight wx1 = wa.fundamental(d.index_of("x1"));
  for (int i = 0; i < f1; i++) CHECK(wadd(q.q1[i], q.q1p[f1 - 1 - i]) == wz1);
  for (int i = 0; i < f2; i++) CHECK(wadd(q.q2[i], q.q2p[f2 - 1 - i]) == wx1);
  for (int i = 0; i < f.r2(); i++) CHECK(q.q1[i] == q.q2[i]);
  for (int i = 0; i < f3; i++) CHECK(q.q3p[i] == q.q2p[i]);
  CHECK(q.q2p[0] == wa.fundamental(d.index_of("z2")));
  CHECK(q.q2p[1] == wsub(wz1, wa.fundamental(d.index_of("z2"))));

  CHECK_THROWS_AS(q_sequences(d, Format(1, 4, 3, 0), wa), FormatError);
}

TEST_CASE("generator multidegrees of the Koszul complex") {
  Diagram d(2, 1, 2);
  Format f(1, 3, 3, 1);
  WeightAlgebra wa(d);
  WeylWord sigma = parse_word(d, "z1 u x1");
  BettiTable t = resolution_grading(d, f, wa, sigma);

  CHECK(t.modules[0] == std::vector<RootVector>{{0, 0, 0}});
  CHECK(same_set(t.modules[1], {{0, 0, -1}, {0, -1, -1}, {-1, -1, -1}}));
  CHECK(same_set(t.modules[2], {{0, -1, -2}, {-1, -1, -2}, {-1, -2, -2}}));
  CHECK(t.modules[3] == std::vector<RootVector>{{-1, -2, -3}});

  int z1 = d.index_of("z1");
  auto cg = coarse_grading(t, z1);
  CHECK(cg[0] == std::vector<Int>{0});
  CHECK(cg[1] == std::vector<Int>{1, 1, 1});
  CHECK(cg[2] == std::vector<Int>{2, 2, 2});
  CHECK(cg[3] == std::vector<Int>{3});
  CHECK(coarse_table_text(t, z1) == "0 -> R(-3) -> R^3(-2) -> R^3(-1) -> R");

  CHECK_THROWS_AS(resolution_grading(d, f, wa, parse_word(d, "u")), NotMinimalCosetError);
}

TEST_CASE("exchanged grading in the original coordinates") {
  Diagram d(2, 1, 2);
  Format f(1, 3, 3, 1);
  WeightAlgebra wa(d);
  WeylWord sigma = parse_word(d, "z1 u x1");
  BettiTable t = resolution_grading(d, f, wa, sigma);
  BettiTable ex = exchange_grading(t, wa, sigma);

  CHECK(ex.modules[0] == std::vector<RootVector>{{0, 0, 0}});
  CHECK(same_set(ex.modules[1], {{-1, -1, -1}, {-1, -1, 0}, {-1, 0, 0}}));
  CHECK(same_set(ex.modules[2], {{-2, -2, -1}, {-2, -1, -1}, {-2, -1, 0}}));
  CHECK(ex.modules[3] == std::vector<RootVector>{{-3, -2, -1}});

  // After the x/z coordinate swap and a global shift this is again the
  // original table, with homological positions reversed.
  Diagram dx = exchange_diagram(d);
  BettiTable pred;
  pred.format = f;
  pred.modules.resize(4);
  for (int p = 0; p < 4; p++)
    for (const RootVector& v : ex.modules[3 - p])
      pred.modules[p].push_back(exchange_coords(d, dx, wneg(v)));
  BettiTable built = t;
  RootVector delta;
  CHECK(equal_up_to_shift(built, pred, &delta));
  CHECK(delta == RootVector{1, 2, 3});
}

TEST_CASE("exchange companions") {
  CHECK(exchange_format(Format(1, 5, 6, 2)) == Format(2, 6, 5, 1));
  CHECK(exchange_format(Format(1, 3, 3, 1)) == Format(1, 3, 3, 1));
  CHECK(exchange_format(exchange_format(Format(1, 4, 5, 2))) == Format(1, 4, 5, 2));

  Diagram d(2, 3, 3);
  Diagram dx = exchange_diagram(d);
  CHECK(dx.p() == 3);
  CHECK(dx.q() == 3);
  CHECK(dx.r() == 2);

  WeylWord w = parse_word(d, "z1 u x1 y1");
  WeylWord wx = exchange_word(d, dx, w);
  CHECK(word_to_string(dx, wx) == "y1 z1 u x1");

  // d stores x1,u,y1,y2,z1,z2; dx stores x1,x2,u,y1,y2,z1.  The x and z arms
  // trade names, so dx reads (z1,z2,u,y1,y2,x1) off the original coordinates.
  RootVector c{1, 2, 3, 4, 5, 6};
  RootVector swapped = exchange_coords(d, dx, c);
  CHECK(swapped == RootVector{5, 6, 2, 3, 4, 1});
}

TEST_CASE("table comparison up to shift") {
  BettiTable a;
  a.format = Format(1, 3, 3, 1);
  a.modules = {{{0, 0, 0}}, {{0, 0, -1}}, {{0, -1, -1}}, {{-1, -1, -1}}};
  BettiTable b = a;
  for (auto& mod : b.modules)
    for (auto& v : mod) v = wadd(v, RootVector{2, -1, 0});
  RootVector delta;
  CHECK(equal_up_to_shift(a, b, &delta));
  CHECK(delta == RootVector{2, -1, 0});

  BettiTable c = a;
  c.modules[2][0] = RootVector{5, 5, 5};
  CHECK_FALSE(equal_up_to_shift(a, c));
  BettiTable e = a;
  e.format = Format(1, 4, 4, 1);
  CHECK_FALSE(equal_up_to_shift(a, e));
}

TEST_CASE("text renderings") {
  Diagram d(2, 2, 2);
  Format f(1, 4, 4, 1);
  WeightAlgebra wa(d);
  BettiTable t = resolution_grading(d, f, wa, {});
  int z1 = d.index_of("z1");
  CHECK(coarse_table_text(t, z1) == "0 -> R(-1) -> R^3+R(-1) -> R^4 -> R");

  std::vector<int> order{0, 1, 2, 3};
  std::string text = betti_text(d, t, order, z1);
  CHECK(text.find("F0:") != std::string::npos);
  CHECK(text.find("coarse 0") != std::string::npos);

  Json j = betti_to_json(t, z1);
  CHECK(j["modules"].size() == 4);
  CHECK(j["modules"][0]["rank"] == 1);
}
