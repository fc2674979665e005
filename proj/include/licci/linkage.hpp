#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "licci/resolution.hpp"

namespace licci {

// First-order multiplication lifts on a complex with f0 = 1 and constant unit
// a1.  Writing beta = d1 / a1, w31 lifts the contraction
// e_i ^ e_j -> beta_i e_j - beta_j e_i through d2 (columns indexed by
// `pairs`, the 2-subsets of F1 slots in lexicographic order), and w21 lifts
// the difference map e ox g -> beta_e g - w31(e ^ d2 g) through d3 (column
// e * f2 + g).  Lift ambiguity inside ker d2 / ker d3 is resolved by the
// deterministic graded solve; both defining equations are replayed after
// solving.
struct StructureMaps {
  std::vector<std::vector<int>> pairs;
  PolyMatrix w31;  // f2 x C(f1, 2)
  PolyMatrix w21;  // f3 x (f1 * f2)
  MultiPoly a1;
};
StructureMaps structure_maps(const GradedComplex& c);

// (1, f1, f2, f3) -> (1, f3+3, f2, f1-3); involutive.  FormatError if the
// shape is wrong or f1 < 3.
Format link_format(const Format& f);

// Mapping-cone linkage by the regular sequence sitting in three columns of
// d1.  The column indices must be strictly increasing.  The sequence is
// certified heuristically (entries nonzero, pairwise common-factor probe
// along random lines, Jacobian rank 3 at random points); the evidence string
// records what was observed, and RegularSequenceSuspect reports a failed
// probe.  The linked complex lives over the same ring with
//   F1' = F3* (+) K,  F2' = F2*,  F3' = the non-selected part of F1*,
// all twisted by t = sum of the three selected column degrees; psi1..psi3
// form the comparison map from the Koszul complex of the sequence, and the
// ladder squares plus d'd' = 0 are verified symbolically before returning.
struct LinkResult {
  std::vector<int> cols;
  GradedComplex linked;
  PolyMatrix psi1, psi2, psi3;
  std::string evidence;
};
LinkResult link(const GradedComplex& c, const std::vector<int>& cols, std::uint64_t seed = 1);

// Rank deficits (f3 - rank([d3 | w31] at 0), f1 - 3 - rank([d2^T | w21'] at 0))
// where w21' reshapes w21 by (g, (e, k)) -> w21[k][e * f2 + g], both clamped
// at zero.  This counts only the degree <= 1 part of the structure maps, so
// it under-approximates the full invariants.
std::pair<int, int> rank_invariants(const GradedComplex& c, const StructureMaps& maps);

}  // namespace licci
