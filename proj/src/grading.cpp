#include "licci/grading.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <sstream>

namespace licci {

namespace {

std::vector<Weight> chain(const WeightAlgebra& wa, const Weight& start,
                          const std::vector<int>& refl) {
  std::vector<Weight> out{start};
  for (int i : refl) out.push_back(wa.reflect(i, out.back()));
  return out;
}

std::string arm_swap_name(const std::string& name) {
  std::string s = name;
  if (s[0] == 'x')
    s[0] = 'z';
  else if (s[0] == 'z')
    s[0] = 'x';
  return s;
}

}  // namespace

QSequences q_sequences(const Diagram& d, const Format& f, const WeightAlgebra& wa) {
  int r1 = f.r1(), r2 = f.r2(), r3 = f.r3();
  if (r3 < 1) throw FormatError("format " + f.to_string() + ": the z arm is empty");
  auto X = [&](int i) { return d.index_of("x" + std::to_string(i)); };
  auto Y = [&](int i) { return d.index_of("y" + std::to_string(i)); };
  auto Z = [&](int i) { return d.index_of("z" + std::to_string(i)); };
  int u = d.index_of("u");

  std::vector<int> x_out, x_in, y_out, y_in, z_out, z_in;
  for (int i = r1; i >= 2; i--) x_out.push_back(X(i));
  for (int i = r1; i >= 1; i--) x_in.push_back(X(i));
  for (int i = r2 - 2; i >= 1; i--) y_in.push_back(Y(i));
  for (int i = 1; i <= r2 - 2; i++) y_out.push_back(Y(i));
  for (int i = r3; i >= 1; i--) z_in.push_back(Z(i));
  for (int i = r3; i >= 2; i--) z_out.push_back(Z(i));

  auto cat = [](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
  };

  Weight wx = wa.fundamental(X(r1));
  Weight wy = wa.fundamental(r2 == 2 ? u : Y(r2 - 2));
  Weight wz = wa.fundamental(Z(r3));
  std::vector<int> xs;
  for (int i = 1; i <= r1; i++) xs.push_back(X(i));
  std::vector<int> zs;
  for (int i = 1; i <= r3; i++) zs.push_back(Z(i));

  QSequences q;
  q.q0p = chain(wa, wx, x_out);
  q.q1p = chain(wa, wx, cat({x_in, {u}, y_out}));
  q.q2 = chain(wa, wy, cat({y_in, {u}, zs}));
  q.q1 = chain(wa, wy, cat({y_in, {u}, xs}));
  q.q2p = chain(wa, wz, cat({z_in, {u}, y_out}));
  q.q3p = chain(wa, wz, z_out);
  return q;
}

BettiTable resolution_grading(const Diagram& d, const Format& f, const WeightAlgebra& wa,
                              const WeylWord& sigma) {
  int zi = d.index_of("z1");
  int xi = d.index_of("x1");
  if (!is_reduced(wa, sigma) || !is_min_double_coset_rep(wa, sigma, zi, xi))
    throw NotMinimalCosetError("resolution_grading: word is not a minimal double coset representative");
  QSequences q = q_sequences(d, f, wa);
  int f0 = f.f0, f1 = f.f1, f2 = f.f2, f3 = f.f3;

  Weight sx = apply_word(wa, sigma, wa.fundamental(d.index_of("x" + std::to_string(f.r1()))));
  Weight sx1 = apply_word(wa, sigma, wa.fundamental(xi));
  Weight wz1 = wa.fundamental(zi);

  BettiTable t;
  t.format = f;
  t.modules.resize(4);
  for (int j = 0; j < f0; j++) {
    Weight m = wadd(wneg(apply_word(wa, sigma, q.q0p[f0 - 1 - j])), sx);
    t.modules[0].push_back(wa.omega_to_alpha_int(m));
  }
  for (int j = 0; j < f1; j++) {
    Weight m = wadd(wneg(q.q1p[f1 - 1 - j]), sx);
    t.modules[1].push_back(wa.omega_to_alpha_int(m));
  }
  for (int j = 0; j < f2; j++) {
    Weight m = wadd(wsub(apply_word(wa, sigma, q.q2[j]), wz1), sx);
    t.modules[2].push_back(wa.omega_to_alpha_int(m));
  }
  for (int j = 0; j < f3; j++) {
    Weight m = wadd(wadd(wneg(q.q3p[f3 - 1 - j]), wsub(sx1, wz1)), sx);
    t.modules[3].push_back(wa.omega_to_alpha_int(m));
  }
  return t;
}

std::vector<std::vector<Int>> coarse_grading(const BettiTable& t, int vertex) {
  std::vector<std::vector<Int>> out(4);
  for (int p = 0; p < 4; p++)
    for (const RootVector& v : t.modules[p]) out[p].push_back(-v[vertex]);
  return out;
}

BettiTable exchange_grading(const BettiTable& t, const WeightAlgebra& wa, const WeylWord& sigma) {
  WeylWord inv = inverse_word(sigma);
  BettiTable out;
  out.format = t.format;
  out.modules.resize(4);
  for (int p = 0; p < 4; p++)
    for (const RootVector& v : t.modules[p]) {
      RootVector w = apply_word_root(wa, inv, v);
      for (Int& c : w) c = -c;
      out.modules[p].push_back(w);
    }
  return out;
}

Format exchange_format(const Format& f) {
  return Format::from_arms(f.r3(), f.r2(), f.r1());
}

Diagram exchange_diagram(const Diagram& d) {
  return Diagram(d.r(), d.q(), d.p());
}

WeylWord exchange_word(const Diagram& d, const Diagram& dx, const WeylWord& sigma) {
  WeylWord out;
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it)
    out.push_back(dx.index_of(arm_swap_name(d.vertex_names()[*it])));
  return out;
}

RootVector exchange_coords(const Diagram& d, const Diagram& dx, const RootVector& c) {
  RootVector out(c.size(), 0);
  for (int i = 0; i < d.size(); i++)
    out[dx.index_of(arm_swap_name(d.vertex_names()[i]))] = c[i];
  return out;
}

bool equal_up_to_shift(const BettiTable& a, const BettiTable& b, RootVector* delta) {
  if (!(a.format == b.format)) return false;
  std::vector<std::vector<RootVector>> sa = a.modules, sb = b.modules;
  for (int p = 0; p < 4; p++) {
    std::sort(sa[p].begin(), sa[p].end());
    std::sort(sb[p].begin(), sb[p].end());
    if (sa[p].size() != sb[p].size()) return false;
  }
  RootVector shift;
  for (int p = 0; p < 4 && shift.empty(); p++)
    if (!sa[p].empty()) shift = wsub(sb[p][0], sa[p][0]);
  if (shift.empty()) return true;
  for (int p = 0; p < 4; p++)
    for (size_t k = 0; k < sa[p].size(); k++)
      if (wadd(sa[p][k], shift) != sb[p][k]) return false;
  if (delta) *delta = shift;
  return true;
}

std::string coarse_table_text(const BettiTable& t, int coarse_vertex) {
  std::vector<std::vector<Int>> cg = coarse_grading(t, coarse_vertex);
  std::ostringstream os;
  os << "0";
  for (int p = 3; p >= 0; p--) {
    os << " -> ";
    if (cg[p].empty()) {
      os << "0";
      continue;
    }
    std::map<Int, int> counts;
    for (const Int& c : cg[p]) counts[c]++;
    bool first = true;
    for (const auto& [c, m] : counts) {
      if (!first) os << "+";
      first = false;
      os << "R";
      if (m > 1) os << "^" << m;
      if (c != 0) {
        Int tw = -c;
        os << "(" << tw.get_str() << ")";
      }
    }
  }
  return os.str();
}

std::string betti_text(const Diagram& d, const BettiTable& t, const std::vector<int>& order,
                       int coarse_vertex) {
  std::ostringstream os;
  os << coarse_table_text(t, coarse_vertex) << "\n";
  for (int p = 3; p >= 0; p--) {
    os << "F" << p << ":";
    if (t.modules[p].empty()) os << " (rank 0)";
    os << "\n";
    for (const RootVector& v : t.modules[p]) {
      os << "  (";
      for (size_t k = 0; k < order.size(); k++) {
        if (k) os << ",";
        os << v[order[k]].get_str();
      }
      os << ")  coarse " << Int(-v[coarse_vertex]).get_str() << "\n";
    }
  }
  return os.str();
}

Json betti_to_json(const BettiTable& t, int coarse_vertex) {
  std::vector<std::vector<Int>> cg = coarse_grading(t, coarse_vertex);
  Json modules = Json::array();
  for (int p = 0; p < 4; p++) {
    Json degs = Json::array();
    for (const RootVector& v : t.modules[p]) degs.push_back(weight_to_json(v));
    Json coarse = Json::array();
    for (const Int& c : cg[p]) coarse.push_back(c.get_si());
    modules.push_back(Json{{"rank", static_cast<int>(t.modules[p].size())},
                           {"multidegrees", degs},
                           {"coarse", coarse}});
  }
  return Json{{"modules", modules}};
}

}  // namespace licci
