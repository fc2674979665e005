#include "licci/linkage.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "licci/errors.hpp"

namespace licci {
namespace {

MultiPoly derivative(const MultiPoly& p, int k) {
  MultiPoly out = MultiPoly::zero(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponent f = e;
    f[k] -= 1;
    out.add_term(f, c * e[k]);
  }
  return out;
}

int uni_degree(const std::vector<Rat>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; i--)
    if (f[i] != 0) return i;
  return -1;
}

std::vector<Rat> uni_mul(const std::vector<Rat>& f, const std::vector<Rat>& g) {
  std::vector<Rat> out(f.size() + g.size() - 1, Rat(0));
  for (size_t i = 0; i < f.size(); i++)
    for (size_t j = 0; j < g.size(); j++) out[i + j] += f[i] * g[j];
  return out;
}

// Coefficients of p(a + t b) as a univariate polynomial in t.
std::vector<Rat> line_restrict(const MultiPoly& p, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    std::vector<Rat> u(1, c);
    for (size_t k = 0; k < e.size(); k++)
      for (int i = 0; i < e[k]; i++) u = uni_mul(u, {a[k], b[k]});
    if (u.size() > out.size()) out.resize(u.size(), Rat(0));
    for (size_t i = 0; i < u.size(); i++) out[i] += u[i];
  }
  return out;
}

int uni_gcd_degree(std::vector<Rat> f, std::vector<Rat> g) {
  int df = uni_degree(f), dg = uni_degree(g);
  if (df < dg) {
    std::swap(f, g);
    std::swap(df, dg);
  }
  while (dg >= 0) {
    while (df >= dg) {
      Rat q = f[df] / g[dg];
      for (int i = 0; i <= dg; i++) f[df - dg + i] -= q * g[i];
      f[df] = 0;
      df = uni_degree(f);
    }
    std::swap(f, g);
    std::swap(df, dg);
  }
  return df;
}

std::vector<Rat> rand_point(std::mt19937_64& rng, int n, int mod) {
  std::vector<Rat> p(n);
  for (int i = 0; i < n; i++) p[i] = Rat(1 + static_cast<long>(rng() % mod));
  return p;
}

// Desk-scale evidence that three ring elements form a regular sequence:
// nonzero entries, no shared factor visible on random lines, and a rank-3
// Jacobian at a random point.  This is a probe, not a proof.
std::string certify_regular_sequence(const PolyRing& ring, const std::vector<MultiPoly>& alpha,
                                     std::uint64_t seed) {
  int nv = ring.nvars();
  for (size_t i = 0; i < alpha.size(); i++)
    if (alpha[i].is_zero())
      throw RegularSequenceSuspect("selected d1 entry " + std::to_string(i) + " is zero");
  std::mt19937_64 rng(seed);
  // A shared factor stays a shared factor after restriction to any line, so a
  // constant univariate gcd on some probed line certifies pairwise
  // coprimality; only repeated failure is suspicious.
  for (size_t i = 0; i < alpha.size(); i++) {
    for (size_t j = i + 1; j < alpha.size(); j++) {
      bool coprime = alpha[i].is_constant() || alpha[j].is_constant();
      for (int attempt = 0; attempt < 4 && !coprime; attempt++) {
        std::vector<Rat> a = rand_point(rng, nv, 19);
        std::vector<Rat> b = rand_point(rng, nv, 7);
        std::vector<Rat> f = line_restrict(alpha[i], a, b);
        std::vector<Rat> g = line_restrict(alpha[j], a, b);
        if (uni_degree(f) < 1 || uni_degree(g) < 1) continue;
        if (uni_gcd_degree(f, g) == 0) coprime = true;
      }
      if (!coprime)
        throw RegularSequenceSuspect("entries " + std::to_string(i) + " and " + std::to_string(j) +
                                     " share a factor on every probed line");
    }
  }
  bool rank3 = false;
  for (int attempt = 0; attempt < 4 && !rank3; attempt++) {
    std::vector<Rat> point = rand_point(rng, nv, 97);
    QMatrix jac(3, nv);
    for (int i = 0; i < 3; i++)
      for (int k = 0; k < nv; k++) jac.at(i, k) = derivative(alpha[i], k).evaluate(point);
    if (jac.rank() == 3) rank3 = true;
  }
  if (!rank3) throw RegularSequenceSuspect("Jacobian rank stayed below 3 at probed points");
  std::ostringstream ev;
  ev << "entries nonzero; pairwise line-restricted gcds trivial; Jacobian rank 3 at a random point"
     << " (heuristic evidence, not a proof of regularity)";
  return ev.str();
}

}  // namespace

StructureMaps structure_maps(const GradedComplex& c) {
  const Format& f = c.format;
  if (f.f0 != 1) throw FormatError("structure maps need a format (1, f1, f2, f3)");
  BEMultipliers be = be_multipliers(c);
  if (!be.a1.is_constant() || be.a1.constant_value() == 0)
    throw NoSolutionError("lowest multiplier is not a constant unit");
  const int f1 = f.f1, f2 = f.f2, f3 = f.f3, nv = c.ring.nvars();
  Rat inv = Rat(1) / be.a1.constant_value();
  std::vector<MultiPoly> beta(f1);
  for (int m = 0; m < f1; m++) beta[m] = c.d1.at(0, m).scaled(inv);
  const auto& l1 = c.table.modules[1];
  const auto& l2 = c.table.modules[2];
  const auto& l3 = c.table.modules[3];

  std::vector<std::vector<int>> pairs = subsets(f1, 2);
  const int np = static_cast<int>(pairs.size());
  PolyMatrix target31(f1, np, nv);
  for (int t = 0; t < np; t++) {
    int i = pairs[t][0], j = pairs[t][1];
    target31.at(j, t) = target31.at(j, t) + beta[i];
    target31.at(i, t) = target31.at(i, t) - beta[j];
  }
  PolyMatrix w31(f2, np, nv);
  for (int t = 0; t < np; t++) {
    RootVector top = wadd(l1[pairs[t][0]], l1[pairs[t][1]]);
    std::vector<RootVector> xdegs(f2);
    for (int g = 0; g < f2; g++) xdegs[g] = wsub(top, l2[g]);
    std::vector<MultiPoly> rhs(f1);
    for (int m = 0; m < f1; m++) rhs[m] = target31.at(m, t);
    std::vector<MultiPoly> x = graded_solve(c.ring, c.d2, xdegs, rhs);
    for (int g = 0; g < f2; g++) w31.at(g, t) = x[g];
  }
  if (!(c.d2 * w31 - target31).is_zero())
    throw std::logic_error("w31 does not replay its defining contraction");

  std::map<std::pair<int, int>, int> pair_index;
  for (int t = 0; t < np; t++) pair_index[{pairs[t][0], pairs[t][1]}] = t;
  PolyMatrix target21(f2, f1 * f2, nv);
  for (int e = 0; e < f1; e++) {
    for (int g = 0; g < f2; g++) {
      int col = e * f2 + g;
      target21.at(g, col) = target21.at(g, col) + beta[e];
      for (int m = 0; m < f1; m++) {
        if (m == e) continue;
        const MultiPoly& dmg = c.d2.at(m, g);
        if (dmg.is_zero()) continue;
        int t = (m > e) ? pair_index[{e, m}] : pair_index[{m, e}];
        Rat sgn = (m > e) ? Rat(1) : Rat(-1);
        for (int h = 0; h < f2; h++)
          target21.at(h, col) = target21.at(h, col) - (dmg * w31.at(h, t)).scaled(sgn);
      }
    }
  }
  PolyMatrix w21(f3, f1 * f2, nv);
  for (int e = 0; e < f1; e++) {
    for (int g = 0; g < f2; g++) {
      int col = e * f2 + g;
      RootVector top = wadd(l1[e], l2[g]);
      std::vector<RootVector> xdegs(f3);
      for (int k = 0; k < f3; k++) xdegs[k] = wsub(top, l3[k]);
      std::vector<MultiPoly> rhs(f2);
      for (int h = 0; h < f2; h++) rhs[h] = target21.at(h, col);
      std::vector<MultiPoly> x = graded_solve(c.ring, c.d3, xdegs, rhs);
      for (int k = 0; k < f3; k++) w21.at(k, col) = x[k];
    }
  }
  if (!(c.d3 * w21 - target21).is_zero())
    throw std::logic_error("w21 does not replay its defining difference map");

  return {pairs, w31, w21, be.a1};
}

Format link_format(const Format& f) {
  if (f.f0 != 1) throw FormatError("linkage needs a format (1, f1, f2, f3)");
  if (f.f1 < 3) throw FormatError("linkage needs f1 >= 3");
  return Format{1, f.f3 + 3, f.f2, f.f1 - 3};
}

LinkResult link(const GradedComplex& c, const std::vector<int>& cols, std::uint64_t seed) {
  Format lf = link_format(c.format);
  const int f1 = c.format.f1, f2 = c.format.f2, f3 = c.format.f3, nv = c.ring.nvars();
  if (static_cast<int>(cols.size()) != 3) throw FormatError("linkage selects exactly three d1 columns");
  for (int i = 0; i < 3; i++) {
    if (cols[i] < 0 || cols[i] >= f1) throw FormatError("d1 column index out of range");
    if (i > 0 && cols[i] <= cols[i - 1])
      throw FormatError("d1 column indices must be strictly increasing");
  }
  std::vector<MultiPoly> alpha(3);
  for (int i = 0; i < 3; i++) alpha[i] = c.d1.at(0, cols[i]);
  std::string evidence = certify_regular_sequence(c.ring, alpha, seed);

  StructureMaps maps = structure_maps(c);
  const auto& l1 = c.table.modules[1];
  const auto& l2 = c.table.modules[2];
  const auto& l3 = c.table.modules[3];

  // Comparison map from the Koszul complex of alpha into the resolution.
  PolyMatrix psi1(f1, 3, nv);
  for (int i = 0; i < 3; i++) psi1.at(cols[i], i) = MultiPoly::constant(nv, Rat(1));
  std::map<std::pair<int, int>, int> pair_index;
  for (size_t t = 0; t < maps.pairs.size(); t++)
    pair_index[{maps.pairs[t][0], maps.pairs[t][1]}] = static_cast<int>(t);
  int psel[3] = {pair_index[{cols[0], cols[1]}], pair_index[{cols[0], cols[2]}],
                 pair_index[{cols[1], cols[2]}]};
  PolyMatrix psi2(f2, 3, nv);
  for (int g = 0; g < f2; g++)
    for (int t = 0; t < 3; t++) psi2.at(g, t) = maps.w31.at(g, psel[t]) * maps.a1;

  RootVector tdeg = wadd(wadd(l1[cols[0]], l1[cols[1]]), l1[cols[2]]);
  std::vector<MultiPoly> rhs(f2);
  for (int g = 0; g < f2; g++)
    rhs[g] = psi2.at(g, 2) * alpha[0] - psi2.at(g, 1) * alpha[1] + psi2.at(g, 0) * alpha[2];
  std::vector<RootVector> xdegs(f3);
  for (int k = 0; k < f3; k++) xdegs[k] = wsub(tdeg, l3[k]);
  std::vector<MultiPoly> p3 = graded_solve(c.ring, c.d3, xdegs, rhs);
  PolyMatrix psi3(f3, 1, nv);
  for (int k = 0; k < f3; k++) psi3.at(k, 0) = p3[k];

  // Ladder squares against the Koszul differentials, checked exactly.
  PolyMatrix k1(1, 3, nv), k2(3, 3, nv), k3(3, 1, nv);
  for (int i = 0; i < 3; i++) k1.at(0, i) = alpha[i];
  k2.at(1, 0) = alpha[0];
  k2.at(0, 0) = -alpha[1];
  k2.at(2, 1) = alpha[0];
  k2.at(0, 1) = -alpha[2];
  k2.at(2, 2) = alpha[1];
  k2.at(1, 2) = -alpha[2];
  k3.at(2, 0) = alpha[0];
  k3.at(1, 0) = -alpha[1];
  k3.at(0, 0) = alpha[2];
  if (!(c.d1 * psi1 - k1).is_zero()) throw std::logic_error("comparison ladder fails at degree 1");
  if (!(c.d2 * psi2 - psi1 * k2).is_zero())
    throw std::logic_error("comparison ladder fails at degree 2");
  if (!(c.d3 * psi3 - psi2 * k3).is_zero())
    throw std::logic_error("comparison ladder fails at degree 3");

  std::vector<int> rest;
  for (int m = 0; m < f1; m++)
    if (m != cols[0] && m != cols[1] && m != cols[2]) rest.push_back(m);

  BettiTable table;
  table.format = lf;
  table.modules.assign(4, {});
  table.modules[0].push_back(c.table.modules[0][0]);
  for (int k = 0; k < f3; k++) table.modules[1].push_back(wsub(tdeg, l3[k]));
  for (int i = 0; i < 3; i++) table.modules[1].push_back(l1[cols[i]]);
  for (int g = 0; g < f2; g++) table.modules[2].push_back(wsub(tdeg, l2[g]));
  for (int m : rest) table.modules[3].push_back(wsub(tdeg, l1[m]));

  PolyMatrix d1p(1, f3 + 3, nv), d2p(f3 + 3, f2, nv), d3p(f2, f1 - 3, nv);
  for (int k = 0; k < f3; k++) d1p.at(0, k) = psi3.at(k, 0);
  for (int i = 0; i < 3; i++) d1p.at(0, f3 + i) = alpha[i];
  for (int k = 0; k < f3; k++)
    for (int g = 0; g < f2; g++) d2p.at(k, g) = c.d3.at(g, k);
  for (int g = 0; g < f2; g++) {
    d2p.at(f3 + 0, g) = -psi2.at(g, 2);
    d2p.at(f3 + 1, g) = psi2.at(g, 1);
    d2p.at(f3 + 2, g) = -psi2.at(g, 0);
  }
  for (int g = 0; g < f2; g++)
    for (size_t m = 0; m < rest.size(); m++) d3p.at(g, static_cast<int>(m)) = c.d2.at(rest[m], g);
  if (!(d1p * d2p).is_zero() || !(d2p * d3p).is_zero())
    throw std::logic_error("linked differentials do not compose to zero");

  GradedComplex linked{c.diagram, lf, c.sigma, c.ring, table, d1p, d2p, d3p};
  return {cols, linked, psi1, psi2, psi3, evidence};
}

std::pair<int, int> rank_invariants(const GradedComplex& c, const StructureMaps& maps) {
  const int f1 = c.format.f1, f2 = c.format.f2, f3 = c.format.f3;
  const int np = static_cast<int>(maps.pairs.size());
  std::vector<Rat> origin(c.ring.nvars(), Rat(0));
  QMatrix d3k = c.d3.evaluate(origin);
  QMatrix w31k = maps.w31.evaluate(origin);
  QMatrix a(f2, f3 + np);
  for (int g = 0; g < f2; g++) {
    for (int k = 0; k < f3; k++) a.at(g, k) = d3k.at(g, k);
    for (int t = 0; t < np; t++) a.at(g, f3 + t) = w31k.at(g, t);
  }
  QMatrix d2k = c.d2.evaluate(origin);
  QMatrix w21k = maps.w21.evaluate(origin);
  QMatrix b(f2, f1 + f1 * f3);
  for (int g = 0; g < f2; g++) {
    for (int m = 0; m < f1; m++) b.at(g, m) = d2k.at(m, g);
    for (int e = 0; e < f1; e++)
      for (int k = 0; k < f3; k++) b.at(g, f1 + e * f3 + k) = w21k.at(k, e * f2 + g);
  }
  int da = f3 - std::min(a.rank(), f3);
  int db = (f1 - 3) - std::min(b.rank(), f1 - 3);
  return {da, db};
}

}  // namespace licci
