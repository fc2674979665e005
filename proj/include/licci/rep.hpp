#pragma once
#include <string>
#include <vector>

#include "licci/diagram.hpp"
#include "licci/weight.hpp"
#include "licci/weyl.hpp"

namespace licci {

// Finite-dimensional irreducible representation with a fixed weight basis.
// E[i] and F[i] are the raising and lowering operators of vertex i acting on
// column vectors; the h_i action is diagonal with entries weights[k][i].
// origin[k] records how basis vector k was constructed: the vertex whose
// lowering operator produced it and the parent index, or (-1,-1) for the
// highest weight vector.
struct Rep {
  Weight highest;
  std::vector<Weight> weights;
  std::vector<std::pair<int, int>> origin;
  std::vector<QMatrix> E, F;
  int dim() const { return static_cast<int>(weights.size()); }
};

// Build L(lambda) for dominant lambda over a finite-type diagram: expand
// lowering operators level by level and prune dependent images using the
// contravariant form, so all matrix entries stay exact rationals.
Rep build_irrep(const Diagram& d, const Weight& lambda);

// Memoized build_irrep; the returned reference stays valid for the process
// lifetime.
const Rep& get_irrep(const Diagram& d, const Weight& lambda);

// Operator lift of the simple reflection s_i: exp(F_i) exp(-E_i) exp(F_i),
// with inverse exp(-F_i) exp(E_i) exp(-F_i).
QMatrix simple_reflection_lift(const Rep& rep, int i);
QMatrix simple_reflection_lift_inverse(const Rep& rep, int i);

// Product of simple lifts; the rightmost letter of the word acts first.
QMatrix word_lift(const Rep& rep, const WeylWord& w);
QMatrix word_lift_inverse(const Rep& rep, const WeylWord& w);

// Raising/lowering operators attached to an arbitrary positive root, obtained
// by conjugating a simple pair along a fixed decomposition of the root.  The
// decomposition depends only on the diagram, so different representations get
// matching normalizations.
struct RootOperators {
  QMatrix E, F;
};
RootOperators root_operators(const Rep& rep, const WeightAlgebra& wa, const RootVector& beta);

// Basis indices whose weight sits at the given drop below the highest weight
// in the root coordinate of `vertex` (drop 0 is the top component).
std::vector<int> component_at_drop(const Rep& rep, const WeightAlgebra& wa, int vertex, int drop);

// Full partition of the basis by that drop, from 0 upwards.
std::vector<std::vector<int>> t_grading(const Rep& rep, const WeightAlgebra& wa, int vertex);

// Indices of basis vectors of exactly this weight, in basis order.
std::vector<int> weight_space(const Rep& rep, const Weight& mu);

// Dimensions of the Lie algebra graded by the z1-coordinate of roots, listed
// from most negative to most positive degree; the middle entry includes the
// Cartan subalgebra.
std::vector<int> z1_graded_dims(const Diagram& d);

// All roots (positive and negative) in root coordinates.
std::vector<RootVector> all_roots(const Diagram& d);

}  // namespace licci
