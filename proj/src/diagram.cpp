#include "licci/diagram.hpp"

#include <algorithm>

namespace licci {

Format::Format(int a, int b, int c, int d) : f0(a), f1(b), f2(c), f3(d) {
  if (f0 < 1 || f3 < 0) throw FormatError("format " + to_string() + ": need f0 >= 1, f3 >= 0");
  int r2 = f1 - f0;
  if (r2 < 1) throw FormatError("format " + to_string() + ": need f1 > f0");
  if (f2 != r2 + f3)
    throw FormatError("format " + to_string() + ": need f2 = (f1 - f0) + f3");
}

Format Format::from_arms(int r1, int r2, int r3) {
  return Format(r1, r1 + r2, r2 + r3, r3);
}

std::string Format::to_string() const {
  return "(" + std::to_string(f0) + "," + std::to_string(f1) + "," + std::to_string(f2) + "," +
         std::to_string(f3) + ")";
}

Diagram::Diagram(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 1 || q < 1 || r < 1) throw FormatError("T(p,q,r) needs p,q,r >= 1");
  for (int i = 1; i < p; i++) names_.push_back("x" + std::to_string(i));
  names_.push_back("u");
  for (int i = 1; i < q; i++) names_.push_back("y" + std::to_string(i));
  for (int i = 1; i < r; i++) names_.push_back("z" + std::to_string(i));
  for (int i = 0; i < size(); i++) index_[names_[i]] = i;
  int u = index_["u"];
  auto link = [&](char arm, int n) {
    for (int i = 1; i < n; i++) {
      int a = index_[std::string(1, arm) + std::to_string(i)];
      int b = (i == 1) ? u : index_[std::string(1, arm) + std::to_string(i - 1)];
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
  };
  link('x', p);
  link('y', q);
  link('z', r);
}

Diagram Diagram::from_format(const Format& f) {
  // (r1, r2, r3) -> T_{r1+1, r2-1, r3+1}.  The middle arm needs r2 >= 2 so
  // there is a u vertex attached to at least the x side.
  int p = f.r1() + 1, q = f.r2() - 1, r = f.r3() + 1;
  if (q < 1) throw FormatError("format " + f.to_string() + " has no T-shaped diagram");
  return Diagram(p, q, r);
}

int Diagram::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("no vertex named " + name);
  return it->second;
}

bool Diagram::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges_.begin(), edges_.end(), std::make_pair(i, j)) != edges_.end();
}

QMatrix Diagram::cartan() const {
  int n = size();
  QMatrix a(n, n);
  for (int i = 0; i < n; i++) a.at(i, i) = 2;
  for (const auto& [i, j] : edges_) {
    a.at(i, j) = -1;
    a.at(j, i) = -1;
  }
  return a;
}

Int Diagram::cartan_det() const {
  QMatrix a = cartan();
  int n = a.rows();
  Rat det(1);
  for (int col = 0; col < n; col++) {
    int sel = -1;
    for (int i = col; i < n; i++)
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != col) {
      for (int j = 0; j < n; j++) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rat inv = Rat(1) / a.at(col, col);
    for (int i = col + 1; i < n; i++) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv;
      for (int j = col; j < n; j++) a.at(i, j) -= f * a.at(col, j);
    }
  }
  Rat d = det;
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("cartan_det: non-integral determinant");
  return d.get_num();
}

DiagramKind Diagram::kind() const {
  Rat s = Rat(1, p_) + Rat(1, q_) + Rat(1, r_);
  Rat v = s;
  v.canonicalize();
  if (v > 1) return DiagramKind::Finite;
  if (v == 1) return DiagramKind::Affine;
  return DiagramKind::Indefinite;
}

std::string Diagram::type_name() const {
  std::array<int, 3> s{p_, q_, r_};
  std::sort(s.begin(), s.end());
  int n = size();
  if (s[0] == 1) return "A" + std::to_string(n);  // an empty arm leaves a path
  if (kind() == DiagramKind::Finite) {
    if (s[0] == 2 && s[1] == 2) return "D" + std::to_string(n);
    if (s[0] == 2 && s[1] == 3) {
      if (s[2] == 3) return "E6";
      if (s[2] == 4) return "E7";
      if (s[2] == 5) return "E8";
    }
  }
  if (kind() == DiagramKind::Affine) {
    if (s == std::array<int, 3>{3, 3, 3}) return "E6^(1)";
    if (s == std::array<int, 3>{2, 4, 4}) return "E7^(1)";
    if (s == std::array<int, 3>{2, 3, 6}) return "E8^(1)";
  }
  return "T(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + ")";
}

}  // namespace licci
