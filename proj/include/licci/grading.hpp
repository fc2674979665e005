#pragma once
#include <string>
#include <vector>

#include "licci/diagram.hpp"
#include "licci/serialize.hpp"
#include "licci/weight.hpp"
#include "licci/weyl.hpp"

namespace licci {

// The six weight sequences that index the generators of the four modules and
// the extremal components of the three governing representations.  Each is a
// start weight followed by successive single reflections.  Lengths:
// f0, f1, f2, f1, f2, f3.
struct QSequences {
  std::vector<Weight> q0p, q1p, q2, q1, q2p, q3p;
};

QSequences q_sequences(const Diagram& d, const Format& f, const WeightAlgebra& wa);

// Generator multidegrees (root coordinates) of the length-three complex of a
// minimal double-coset word, one vector per generator, normalized so the top
// generator of F0 sits in degree 0.
struct BettiTable {
  Format format;
  std::vector<std::vector<RootVector>> modules;  // modules[p], p = 0..3
};

BettiTable resolution_grading(const Diagram& d, const Format& f, const WeightAlgebra& wa,
                              const WeylWord& sigma);

// Negated alpha_vertex coefficient of every multidegree.
std::vector<std::vector<Int>> coarse_grading(const BettiTable& t, int vertex);

// Grading of the exchanged dual complex in the original coordinates: apply
// sigma^{-1} to every multidegree and negate, keeping homological positions.
BettiTable exchange_grading(const BettiTable& t, const WeightAlgebra& wa, const WeylWord& sigma);

// The x/z-exchanged companion data: format (r3, r2, r1), the word with
// reversed letters and swapped arm names, and the coordinate permutation
// between the two diagrams' storage orders.
Format exchange_format(const Format& f);
Diagram exchange_diagram(const Diagram& d);
WeylWord exchange_word(const Diagram& d, const Diagram& dx, const WeylWord& sigma);
RootVector exchange_coords(const Diagram& d, const Diagram& dx, const RootVector& c);

// True when the tables agree modulo one constant shift applied to every
// multidegree of b; reports the shift if requested.
bool equal_up_to_shift(const BettiTable& a, const BettiTable& b, RootVector* delta = nullptr);

// One-line free-module rendering of the coarse grading, e.g.
// "0 -> R(-5)+R(-6) -> R^6(-4) -> R^2(-2)+R^3(-3) -> R".
std::string coarse_table_text(const BettiTable& t, int coarse_vertex);

// Full multidegree listing; components permuted by `order` (storage indices
// in display order).
std::string betti_text(const Diagram& d, const BettiTable& t, const std::vector<int>& order,
                       int coarse_vertex);

Json betti_to_json(const BettiTable& t, int coarse_vertex);

}  // namespace licci
