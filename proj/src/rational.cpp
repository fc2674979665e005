#include "licci/rational.hpp"

namespace licci {

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: size mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; j++) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] * c;
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r.at(j, i) = at(i, j);
  return r;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  QMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < cols.size(); j++) r.at((int)i, (int)j) = at(rows[i], cols[j]);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

QMatrix QMatrix::exp_nilpotent() const {
  if (rows_ != cols_) throw std::invalid_argument("exp_nilpotent: square matrix required");
  QMatrix result = identity(rows_);
  QMatrix power = identity(rows_);
  Rat fact(1);
  for (int k = 1; k <= rows_ + 1; k++) {
    power = power * (*this);
    if (power.is_zero()) return result;
    fact *= k;
    result = result + power.scaled(Rat(1) / fact);
  }
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

namespace {
// Row echelon with partial bookkeeping; returns pivot columns.
std::vector<int> echelon(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t nr = m.size(), nc = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; col++) {
    size_t sel = row;
    while (sel < nr && m[sel][col] == 0) sel++;
    if (sel == nr) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t j = col; j < nc; j++) m[row][j] *= inv;
    for (size_t i = 0; i < nr; i++) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < nc; j++) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    row++;
  }
  return pivots;
}
}  // namespace

int QMatrix::rank() const {
  std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) m[i][j] = at(i, j);
  return static_cast<int>(echelon(m).size());
}

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
  std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) m[i][j] = at(i, j);
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; free++) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool QMatrix::solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: rhs size mismatch");
  std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_ + 1));
  for (int i = 0; i < rows_; i++) {
    for (int j = 0; j < cols_; j++) m[i][j] = at(i, j);
    m[i][cols_] = b[i];
  }
  // Eliminate on the coefficient columns only.
  std::vector<int> pivots;
  size_t row = 0;
  for (int col = 0; col < cols_ && row < m.size(); col++) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) sel++;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (int j = col; j <= cols_; j++) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); i++) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j <= cols_; j++) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    row++;
  }
  for (size_t i = row; i < m.size(); i++)
    if (m[i][cols_] != 0) return false;
  x.assign(cols_, Rat(0));
  for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = m[r][cols_];
  return true;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

}  // namespace licci
