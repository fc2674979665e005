#include "licci/poly.hpp"

#include <algorithm>
#include <functional>

namespace licci {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long ta = 0, tb = 0;
  for (int v : a) ta += v;
  for (int v : b) tb += v;
  if (ta != tb) return ta < tb;
  return a < b;
}

MultiPoly MultiPoly::zero(int nvars) {
  MultiPoly p;
  p.nvars_ = nvars;
  return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p = zero(nvars);
  if (c != 0) p.terms_[Exponent(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int k) {
  Exponent e(nvars, 0);
  e[k] = 1;
  return term(nvars, e, 1);
}

MultiPoly MultiPoly::term(int nvars, const Exponent& e, const Rat& c) {
  MultiPoly p = zero(nvars);
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponent& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rat n = -c;
    r.add_term(e, n);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = zero(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly r = zero(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r = zero(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(nvars_);
      for (int k = 0; k < nvars_; k++) e[k] = e1[k] + e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r = constant(nvars_, 1);
  for (int i = 0; i < k; i++) r = r * (*this);
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& g) const {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  MultiPoly f = *this;
  MultiPoly q = zero(nvars_);
  auto glt = g.terms_.rbegin();
  while (!f.is_zero()) {
    auto flt = f.terms_.rbegin();
    Exponent e(nvars_);
    for (int k = 0; k < nvars_; k++) {
      e[k] = flt->first[k] - glt->first[k];
      if (e[k] < 0) throw std::logic_error("divide_exact: inexact division");
    }
    Rat c = flt->second / glt->second;
    q.add_term(e, c);
    f = f - g * term(nvars_, e, c);
  }
  return q;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int k = 0; k < nvars_; k++)
      for (int t = 0; t < e[k]; t++) m *= point[k];
    total += m;
  }
  return total;
}

std::string poly_to_string(const PolyRing& ring, const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rat c = it->second;
    c.canonicalize();
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    a.canonicalize();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int k = 0; k < p.nvars(); k++) {
      int ex = it->first[k];
      if (ex == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.names[k];
      if (ex > 1) mono += "^" + std::to_string(ex);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

RootVector monomial_multidegree(const PolyRing& ring, const Exponent& e) {
  size_t n = ring.degrees.empty() ? 0 : ring.degrees[0].size();
  RootVector d(n, 0);
  for (int k = 0; k < ring.nvars(); k++)
    if (e[k] != 0)
      for (size_t t = 0; t < n; t++) d[t] += Int(e[k]) * ring.degrees[k][t];
  return d;
}

bool is_homogeneous_of(const PolyRing& ring, const MultiPoly& p, const RootVector& deg) {
  for (const auto& [e, c] : p.terms()) {
    RootVector d = monomial_multidegree(ring, e);
    // A ring with no variables carries no ambient dimension; its monomials
    // have degree zero in whatever dimension deg uses.
    if (d.empty() && !deg.empty()) d.assign(deg.size(), Int(0));
    if (d != deg) return false;
  }
  return true;
}

std::vector<Exponent> monomials_of_multidegree(const PolyRing& ring, const RootVector& target) {
  int nv = ring.nvars();
  size_t n = target.size();
  for (int k = 0; k < nv; k++) {
    if (ring.coarse >= 0) {
      if (ring.degrees[k][ring.coarse] >= 0)
        throw InfiniteMonomialBasisError("variable " + ring.names[k] +
                                         " is not strictly negative in the coarse coordinate");
      continue;
    }
    bool all_zero = true;
    for (const Int& v : ring.degrees[k])
      if (v != 0) all_zero = false;
    if (all_zero)
      throw InfiniteMonomialBasisError("monomial enumeration with a degree-zero variable");
  }
  for (const Int& v : target)
    if (v > 0) return {};
  // Work with negated (componentwise >= 0) quantities.
  std::vector<Exponent> out;
  Exponent cur(nv, 0);
  RootVector rem(n);
  for (size_t t = 0; t < n; t++) rem[t] = -target[t];
  std::function<void(int)> dfs = [&](int k) {
    if (k == nv) {
      for (const Int& v : rem)
        if (v != 0) return;
      out.push_back(cur);
      return;
    }
    RootVector save = rem;
    for (int e = 0;; e++) {
      bool fits = true;
      for (size_t t = 0; t < n; t++)
        if (rem[t] < 0) {
          fits = false;
          break;
        }
      if (!fits) break;
      cur[k] = e;
      dfs(k + 1);
      for (size_t t = 0; t < n; t++) rem[t] -= -ring.degrees[k][t];
    }
    cur[k] = 0;
    rem = save;
  };
  dfs(0);
  return out;
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      a_(static_cast<size_t>(rows) * cols, MultiPoly::zero(nvars)) {}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; i++) m.at(i, i) = MultiPoly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const QMatrix& m, int nvars) {
  PolyMatrix r(m.rows(), m.cols(), nvars);
  for (int i = 0; i < m.rows(); i++)
    for (int j = 0; j < m.cols(); j++)
      if (m.at(i, j) != 0) r.at(i, j) = MultiPoly::constant(nvars, m.at(i, j));
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: size mismatch in product");
  PolyMatrix r(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const MultiPoly& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; j++) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + v * o.at(k, j);
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < a_.size(); i++) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& c) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < a_.size(); i++)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * c;
  return r;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()), nvars_);
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < cols.size(); j++) r.at((int)i, (int)j) = at(rows[i], cols[j]);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

QMatrix PolyMatrix::evaluate(const std::vector<Rat>& point) const {
  QMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r.at(i, j) = at(i, j).evaluate(point);
  return r;
}

PolyMatrix PolyMatrix::exp_nilpotent() const {
  if (rows_ != cols_) throw std::invalid_argument("exp_nilpotent: square matrix required");
  PolyMatrix result = identity(rows_, nvars_);
  PolyMatrix power = identity(rows_, nvars_);
  Rat fact(1);
  for (int k = 1; k <= rows_ + 1; k++) {
    power = power * (*this);
    if (power.is_zero()) return result;
    fact *= k;
    result = result + power.scaled(MultiPoly::constant(nvars_, Rat(1) / fact));
  }
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

namespace {
MultiPoly det_expand(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  int n = static_cast<int>(rows.size());
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  if (n == 1) return m.at(rows[0], cols[0]);
  MultiPoly acc = MultiPoly::zero(m.nvars());
  for (int j = 0; j < n; j++) {
    if (m.at(rows[0], cols[j]).is_zero()) continue;
    std::vector<int> rest;
    for (int t = 0; t < n; t++)
      if (t != j) rest.push_back(cols[t]);
    MultiPoly sub = det_expand(m, std::vector<int>(rows.begin() + 1, rows.end()), rest);
    MultiPoly piece = m.at(rows[0], cols[j]) * sub;
    acc = (j % 2 == 0) ? acc + piece : acc - piece;
  }
  return acc;
}
}  // namespace

MultiPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square matrix required");
  int n = rows_;
  if (n <= 3) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; i++) idx[i] = i;
    return det_expand(*this, idx, idx);
  }
  PolyMatrix m = *this;
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(nvars_, 1);
  for (int k = 0; k < n - 1; k++) {
    if (m.at(k, k).is_zero()) {
      int sel = -1;
      for (int i = k + 1; i < n; i++)
        if (!m.at(i, k).is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) return MultiPoly::zero(nvars_);
      for (int j = 0; j < n; j++) std::swap(m.at(k, j), m.at(sel, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        MultiPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.divide_exact(prev);
      }
    for (int i = k + 1; i < n; i++) m.at(i, k) = MultiPoly::zero(nvars_);
    prev = m.at(k, k);
  }
  MultiPoly d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {
MultiPoly pf_expand(const PolyMatrix& m, const std::vector<int>& idx) {
  int n = static_cast<int>(idx.size());
  if (n % 2 != 0) return MultiPoly::zero(m.nvars());
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  MultiPoly acc = MultiPoly::zero(m.nvars());
  for (int j = 1; j < n; j++) {
    const MultiPoly& a = m.at(idx[0], idx[j]);
    if (a.is_zero()) continue;
    std::vector<int> rest;
    for (int t = 1; t < n; t++)
      if (t != j) rest.push_back(idx[t]);
    MultiPoly piece = a * pf_expand(m, rest);
    acc = (j % 2 == 1) ? acc + piece : acc - piece;
  }
  return acc;
}
}  // namespace

MultiPoly PolyMatrix::pfaffian() const {
  if (rows_ != cols_) throw std::invalid_argument("pfaffian: square matrix required");
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j <= i; j++) {
      MultiPoly s = at(i, j) + at(j, i);
      if (!s.is_zero()) throw NotSkewError("pfaffian: matrix is not skew-symmetric");
    }
  std::vector<int> idx(rows_);
  for (int i = 0; i < rows_; i++) idx[i] = i;
  return pf_expand(*this, idx);
}

MultiPoly minor_of(const PolyMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  return m.submatrix(rows, cols).det();
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; i++) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) i--;
    if (i < 0) break;
    s[i]++;
    for (int j = i + 1; j < k; j++) s[j] = s[j - 1] + 1;
  }
  return out;
}

int shuffle_sign(const std::vector<int>& s, int n) {
  // Inversions of the concatenation (s, complement) against 0..n-1: element
  // s[i] has to jump over every smaller element not in s.
  std::vector<bool> in(n, false);
  for (int v : s) in[v] = true;
  long inv = 0;
  for (size_t i = 0; i < s.size(); i++) inv += s[i] - static_cast<long>(i);
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<MultiPoly> graded_solve(const PolyRing& ring, const PolyMatrix& A,
                                    const std::vector<RootVector>& xdegs,
                                    const std::vector<MultiPoly>& b, bool* unique) {
  int nv = ring.nvars();
  int nc = A.cols(), nr = A.rows();
  if (static_cast<int>(xdegs.size()) != nc || static_cast<int>(b.size()) != nr)
    throw std::invalid_argument("graded_solve: size mismatch");
  std::vector<std::vector<Exponent>> mons(nc);
  std::vector<int> offset(nc + 1, 0);
  for (int j = 0; j < nc; j++) {
    mons[j] = monomials_of_multidegree(ring, xdegs[j]);
    offset[j + 1] = offset[j] + static_cast<int>(mons[j].size());
  }
  int nunk = offset[nc];

  // One linear equation per (row, monomial) pair.
  std::vector<std::map<Exponent, std::pair<std::map<int, Rat>, Rat>, GrlexLess>> eqs(nr);
  for (int i = 0; i < nr; i++) {
    for (int j = 0; j < nc; j++) {
      const MultiPoly& a = A.at(i, j);
      if (a.is_zero()) continue;
      for (size_t t = 0; t < mons[j].size(); t++) {
        int unk = offset[j] + static_cast<int>(t);
        for (const auto& [e, c] : a.terms()) {
          Exponent prod(nv);
          for (int k = 0; k < nv; k++) prod[k] = e[k] + mons[j][t][k];
          eqs[i][prod].first[unk] += c;
        }
      }
    }
    for (const auto& [e, c] : b[i].terms()) eqs[i][e].second += c;
  }

  int neq = 0;
  for (const auto& m : eqs) neq += static_cast<int>(m.size());
  QMatrix M(neq, nunk);
  std::vector<Rat> rhs(neq);
  int row = 0;
  for (int i = 0; i < nr; i++)
    for (const auto& [e, data] : eqs[i]) {
      for (const auto& [unk, c] : data.first) M.at(row, unk) = c;
      rhs[row] = data.second;
      row++;
    }

  std::vector<Rat> x;
  if (!M.solve(rhs, x)) throw NoSolutionError("graded_solve: inconsistent system");
  if (unique) *unique = (M.rank() == nunk);

  std::vector<MultiPoly> out;
  for (int j = 0; j < nc; j++) {
    MultiPoly p = MultiPoly::zero(nv);
    for (size_t t = 0; t < mons[j].size(); t++)
      p.add_term(mons[j][t], x[offset[j] + static_cast<int>(t)]);
    out.push_back(p);
  }
  return out;
}

}  // namespace licci
