#include "licci/weight.hpp"

namespace licci {

Weight wadd(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

Weight wsub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}

Weight wneg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = -a[i];
  return r;
}

std::string wstr(const Weight& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); i++) {
    if (i) s += ",";
    s += a[i].get_str();
  }
  return s + ")";
}

WeightAlgebra::WeightAlgebra(const Diagram& d) : n_(d.size()), cartan_(d.cartan()) {
  // Gauss-Jordan inversion; a zero pivot column anywhere means the symmetric
  // form is degenerate (the affine case).
  QMatrix a = cartan_;
  QMatrix inv = QMatrix::identity(n_);
  invertible_ = true;
  for (int col = 0; col < n_ && invertible_; col++) {
    int sel = -1;
    for (int i = col; i < n_; i++)
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) {
      invertible_ = false;
      break;
    }
    if (sel != col)
      for (int j = 0; j < n_; j++) {
        std::swap(a.at(sel, j), a.at(col, j));
        std::swap(inv.at(sel, j), inv.at(col, j));
      }
    Rat piv = Rat(1) / a.at(col, col);
    for (int j = 0; j < n_; j++) {
      a.at(col, j) *= piv;
      inv.at(col, j) *= piv;
    }
    for (int i = 0; i < n_; i++) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n_; j++) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  if (invertible_) cartan_inv_ = inv;
}

Weight WeightAlgebra::fundamental(int i) const {
  Weight w(n_, 0);
  w[i] = 1;
  return w;
}

Weight WeightAlgebra::simple_root(int i) const {
  Weight w(n_);
  for (int j = 0; j < n_; j++) {
    Rat c = cartan_.at(i, j);
    c.canonicalize();
    w[j] = c.get_num();
  }
  return w;
}

Weight WeightAlgebra::reflect(int i, const Weight& w) const {
  Weight r = w;
  if (w[i] == 0) return r;
  Weight alpha = simple_root(i);
  for (int j = 0; j < n_; j++) r[j] -= w[i] * alpha[j];
  return r;
}

RootVector WeightAlgebra::reflect_root(int i, const RootVector& c) const {
  // s_i acts on root coordinates by subtracting <alpha_i^vee, beta> from the
  // i-th coordinate; the pairing is the i-th Cartan row dotted with c.
  Int pair = 0;
  for (int j = 0; j < n_; j++) {
    Rat a = cartan_.at(i, j);
    a.canonicalize();
    pair += a.get_num() * c[j];
  }
  RootVector r = c;
  r[i] -= pair;
  return r;
}

std::vector<Rat> WeightAlgebra::omega_to_alpha(const Weight& w) const {
  if (!invertible_) throw AffineTypeError("omega_to_alpha: singular Cartan matrix");
  std::vector<Rat> r(n_, Rat(0));
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++)
      if (w[j] != 0) r[i] += cartan_inv_.at(i, j) * Rat(w[j]);
  return r;
}

RootVector WeightAlgebra::omega_to_alpha_int(const Weight& w) const {
  std::vector<Rat> q = omega_to_alpha(w);
  RootVector r(n_);
  for (int i = 0; i < n_; i++) {
    Rat c = q[i];
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("omega_to_alpha_int: weight " + wstr(w) + " is not in the root lattice");
    r[i] = c.get_num();
  }
  return r;
}

Weight WeightAlgebra::alpha_to_omega(const RootVector& c) const {
  Weight w(n_, 0);
  for (int j = 0; j < n_; j++) {
    if (c[j] == 0) continue;
    Weight alpha = simple_root(j);
    for (int i = 0; i < n_; i++) w[i] += c[j] * alpha[i];
  }
  return w;
}

Rat WeightAlgebra::pairing(const Weight& a, const Weight& b) const {
  std::vector<Rat> ca = omega_to_alpha(a);
  Rat s(0);
  for (int i = 0; i < n_; i++)
    if (b[i] != 0) s += ca[i] * Rat(b[i]);
  return s;
}

bool WeightAlgebra::is_dominant(const Weight& w) const {
  for (const Int& c : w)
    if (c < 0) return false;
  return true;
}

}  // namespace licci
