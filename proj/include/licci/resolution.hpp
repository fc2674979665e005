#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "licci/grading.hpp"
#include "licci/poly.hpp"
#include "licci/rep.hpp"
#include "licci/serialize.hpp"

namespace licci {

// Length-three graded complex 0 <- F0 <- F1 <- F2 <- F3 over the multigraded
// polynomial ring attached to a minimal double-coset word.  Differentials act
// on column vectors; entry (m, i) of d_k is homogeneous of multidegree
// table.modules[k][i] - table.modules[k-1][m].
struct GradedComplex {
  Diagram diagram;
  Format format;
  WeylWord sigma;
  PolyRing ring;
  BettiTable table;
  PolyMatrix d1, d2, d3;
};

// Coordinate ring of the cell: one variable y[k] per inversion root beta_k of
// sigma, in the partial-product order of the stored reduced word, graded by
// -beta_k in root coordinates.  The coarse coordinate is the z1 vertex;
// minimality of the word forces every inversion root to have z1-coefficient
// >= 1, which is re-checked here.
PolyRing ring_from_word(const Diagram& d, const WeightAlgebra& wa, const WeylWord& sigma);

// Matrix of exp(sum_k y_k E_{beta_k}) followed by the operator lift of sigma.
// Entry (b, c) is homogeneous of multidegree sigma(wt_c) - wt_b and vanishes
// unless that difference is a nonnegative combination of inversion roots.
PolyMatrix generic_matrix(const Rep& rep, const WeightAlgebra& wa, const PolyRing& ring,
                          const WeylWord& sigma);

// Slots of the top component in the z1 (or x1) direction, ordered to match a
// prescribed weight list; each listed weight must occur exactly once in the
// component and the component must be exhausted.
std::vector<int> ordered_component(const Rep& rep, const WeightAlgebra& wa, int vertex,
                                   const std::vector<Weight>& order);

// Assemble the complex for a minimal double-coset word over a finite-type
// diagram.  Throws NotFiniteTypeError or NotMinimalCosetError.
GradedComplex build_resolution(const Diagram& d, const Format& f, const WeylWord& sigma);

struct CheckReport {
  bool complex_identity = false;  // d1*d2 and d2*d3 vanish symbolically
  bool homogeneous = false;       // every entry matches the Betti-table degree
  bool ranks = false;             // ranks (r1, r2, r3) at sampled rational points
  std::vector<std::string> notes;
  bool ok() const { return complex_identity && homogeneous && ranks; }
  std::string to_string() const;
};

// Structural verification.  Findings are reported, not thrown: each failed
// probe appends a note.  Rank probing evaluates at five points with
// coordinates in {1..97} drawn from the seed, redrawing a point at most ten
// times before declaring failure.
CheckReport check_complex(const GradedComplex& c, std::uint64_t seed = 1);

// Entries of the generic matrix on L(omega_x1) pairing the top z1 component
// against the highest weight column.  `extremal` marks slots whose weight
// lies in the Levi-Weyl orbit of the component's top weight.
struct PluckerCoordinate {
  int slot;           // basis index inside L(omega_x1)
  Weight weight;      // weight of that basis vector
  RootVector degree;  // multidegree sigma(omega_x1) - weight
  bool extremal;
  MultiPoly p;
};
std::vector<PluckerCoordinate> plucker_coordinates(const GradedComplex& c);

// For each extremal Plucker coordinate p: an f2 x f2 minor of the generic
// action on the middle representation equal to unit * p^(r3+1), with columns
// drawn from the top z1 component and the next one down, and a minor on the
// third representation equal to unit * p^(r2-1).  Column sets are searched
// among those passing the multidegree filter; IdentityFailure reports the
// first p with no witness.
struct MinorWitness {
  Weight plucker_weight;
  int d2_exponent = 0;
  int d3_exponent = 0;
  std::vector<int> d2_columns;  // basis indices into the middle representation
  std::vector<int> d3_columns;  // basis indices into the third representation
};
struct WitnessReport {
  std::vector<MinorWitness> witnesses;
  std::string to_string() const;
};
WitnessReport verify_minor_identities(const GradedComplex& c);

// Buchsbaum-Eisenbud multipliers.  a3 lists the maximal minors of d3 over
// row subsets (idx3, lex order); a2 and a1 are solved from the factorization
// of the exterior powers of d2 and d1, with uniqueness certified by solving
// twice under permuted unknown order.  Throws NoSolutionError if the
// factorization fails or is not unique.
struct BEMultipliers {
  MultiPoly a1;
  std::vector<std::vector<int>> idx2;  // r2-subsets of F1 slots
  std::vector<MultiPoly> a2;
  std::vector<std::vector<int>> idx3;  // f3-subsets of F2 slots
  std::vector<MultiPoly> a3;
};
BEMultipliers be_multipliers(const GradedComplex& c);

// Build the exchanged complex (arms x and z swapped, word reversed and
// renamed) and compare its grading against the exchange of this complex's
// grading, up to one overall shift.
struct ExchangeResult {
  GradedComplex dual;
  bool grading_matches = false;
  RootVector shift;
};
ExchangeResult exchange_dual(const GradedComplex& c);

Json complex_to_json(const GradedComplex& c);
GradedComplex complex_from_json(const Json& j);
void complex_to_json_file(const GradedComplex& c, const std::string& path);
GradedComplex complex_from_json_file(const std::string& path);

}  // namespace licci
