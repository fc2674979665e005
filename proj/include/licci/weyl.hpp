#pragma once
#include <string>
#include <vector>

#include "licci/diagram.hpp"
#include "licci/weight.hpp"

namespace licci {

// A word in the simple reflections, stored as vertex indices.  Composition
// convention: the leftmost letter acts last, so apply() walks the word from
// the right.
using WeylWord = std::vector<int>;

WeylWord parse_word(const Diagram& d, const std::string& text);
std::string word_to_string(const Diagram& d, const WeylWord& w);

Weight apply_word(const WeightAlgebra& wa, const WeylWord& w, const Weight& v);
RootVector apply_word_root(const WeightAlgebra& wa, const WeylWord& w, const RootVector& c);

WeylWord inverse_word(const WeylWord& w);

// The weight w(rho): a faithful invariant of the group element, independent
// of the chosen word.
Weight canonical_form(const WeightAlgebra& wa, const WeylWord& w);

// Lexicographically-least reduced expression obtained by greedy descent on
// w(rho).
WeylWord reduced_word(const WeightAlgebra& wa, const WeylWord& w);
int weyl_length(const WeightAlgebra& wa, const WeylWord& w);
bool is_reduced(const WeightAlgebra& wa, const WeylWord& w);
bool words_equal(const WeightAlgebra& wa, const WeylWord& a, const WeylWord& b);

// Bruhat order test by a single greedy scan along a reduced word of w.
bool bruhat_leq(const WeightAlgebra& wa, const WeylWord& u, const WeylWord& w);

// Positive roots inverted by the word, in root coordinates: the k-th entry is
// s_{i1}...s_{i(k-1)} applied to alpha_{ik} for w = s_{i1}...s_{iN}.  The word
// must be reduced.
std::vector<RootVector> inversion_set(const WeightAlgebra& wa, const WeylWord& w);

// <omega_r - w^{-1} omega_r, omega_t> under the invariant pairing.
Rat weight_drop_pairing(const WeightAlgebra& wa, const WeylWord& w, int r, int t);

// Minimality for the double coset generated by all reflections except `left`
// on one side and all except `right` on the other.  Letters are checked
// rightmost-first against the orbit of the fundamental weight at `right`.
bool is_min_double_coset_rep(const WeightAlgebra& wa, const WeylWord& w, int left, int right);

// All minimal-length double coset representatives up to length max_length,
// found by breadth-first search over the orbit of the fundamental weight at
// `right`.  A negative max_length means unlimited and requires finite type
// (otherwise AffineTypeError); with a cap any diagram is accepted, with no
// completeness claim beyond the cap.  Results are sorted by length, then
// lexicographically.
std::vector<WeylWord> enumerate_double_cosets(const Diagram& d, const WeightAlgebra& wa,
                                              int max_length = -1,
                                              const std::string& left = "z1",
                                              const std::string& right = "x1");

}  // namespace licci
