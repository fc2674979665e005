#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "licci/errors.hpp"
#include "licci/rational.hpp"
#include "licci/weight.hpp"

namespace licci {

using Exponent = std::vector<int>;

// Graded lexicographic order; the map below keeps terms ascending, so the
// leading term is the last one.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Polynomial variables with multidegrees in root coordinates.  All degrees
// used by this library are componentwise <= 0.  `coarse` is the coordinate
// index whose negated value grades coarsely (the z1 vertex); when set, every
// variable must be strictly negative there, which bounds every monomial
// enumeration.
struct PolyRing {
  std::vector<std::string> names;
  std::vector<RootVector> degrees;
  int coarse = -1;
  int nvars() const { return static_cast<int>(names.size()); }
};

class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  static MultiPoly zero(int nvars);
  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int k);
  static MultiPoly term(int nvars, const Exponent& e, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless constant
  const std::map<Exponent, Rat, GrlexLess>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Exact quotient; throws if the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& g) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  void add_term(const Exponent& e, const Rat& c);

 private:
  int nvars_;
  std::map<Exponent, Rat, GrlexLess> terms_;
};

std::string poly_to_string(const PolyRing& ring, const MultiPoly& p);

RootVector monomial_multidegree(const PolyRing& ring, const Exponent& e);
bool is_homogeneous_of(const PolyRing& ring, const MultiPoly& p, const RootVector& deg);

// All monomials of the given multidegree, in lexicographic exponent order.
// Empty when the degree is unreachable; throws InfiniteMonomialBasisError if
// a variable fails the coarse-negativity requirement (or, with no coarse
// coordinate set, has degree zero).
std::vector<Exponent> monomials_of_multidegree(const PolyRing& ring, const RootVector& target);

class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PolyMatrix(int rows, int cols, int nvars);
  static PolyMatrix identity(int n, int nvars);
  static PolyMatrix from_rational(const QMatrix& m, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  MultiPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const MultiPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const MultiPoly& c) const;
  PolyMatrix transposed() const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_zero() const;

  QMatrix evaluate(const std::vector<Rat>& point) const;

  // Nilpotent matrix exponential, as for QMatrix.
  PolyMatrix exp_nilpotent() const;

  // Fraction-free elimination with exact polynomial division (direct
  // expansion below 4x4).
  MultiPoly det() const;
  // Skew-symmetric input required; expands along the first row.
  MultiPoly pfaffian() const;

 private:
  int rows_, cols_, nvars_;
  std::vector<MultiPoly> a_;
};

MultiPoly minor_of(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
// Sign of the shuffle permutation (S, complement of S) of 0..n-1.
int shuffle_sign(const std::vector<int>& s, int n);

// Solve A x = b where entry j of x is a polynomial of multidegree xdegs[j].
// The coefficient system is solved over Q with free variables set to zero; if
// `unique` is given it reports whether the solution was unique.
std::vector<MultiPoly> graded_solve(const PolyRing& ring, const PolyMatrix& A,
                                    const std::vector<RootVector>& xdegs,
                                    const std::vector<MultiPoly>& b, bool* unique = nullptr);

}  // namespace licci
