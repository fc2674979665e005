#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace licci {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Dense matrix over Q.  Sizes in this library stay below ~100x100, so a flat
// vector with exact entries is both simple and fast enough.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rat& c) const;
  QMatrix transposed() const;
  QMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_zero() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // exp of a nilpotent matrix; throws if powers do not vanish.
  QMatrix exp_nilpotent() const;

  int rank() const;
  // Basis of the right null space, deterministic (free variables in column order).
  std::vector<std::vector<Rat>> nullspace() const;
  // Solve A x = b; returns false if inconsistent.  Free variables are set to 0.
  bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace licci
