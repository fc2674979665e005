#include "licci/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace licci {

namespace {

Weight weight_sum(const Rep& rep, const std::vector<int>& slots, int n) {
  Weight s(n, 0);
  for (int b : slots) s = wadd(s, rep.weights[b]);
  return s;
}

Weight weight_scale(const Weight& w, int k) {
  Weight s = w;
  for (Int& c : s) c *= k;
  return s;
}

RootVector degree_sum(const std::vector<RootVector>& degs, int n) {
  RootVector s(n, 0);
  for (const RootVector& d : degs) s = wadd(s, d);
  return s;
}

// Restriction of an operator to a slot list, with a leak check: the listed
// slots must be closed under the operator.
QMatrix restrict_op(const QMatrix& op, const std::vector<int>& slots) {
  int n = static_cast<int>(slots.size());
  std::vector<char> in(op.rows(), 0);
  for (int s : slots) in[s] = 1;
  QMatrix r(n, n);
  for (int a = 0; a < n; a++) {
    for (int row = 0; row < op.rows(); row++) {
      if (op.at(row, slots[a]) == 0) continue;
      if (!in[row]) throw std::logic_error("restrict_op: component is not closed under the operator");
    }
    for (int c = 0; c < n; c++) r.at(c, a) = op.at(slots[c], slots[a]);
  }
  return r;
}

// Levi-invariant pairing between the listed components of two representations.
// P[a][b] pairs slot sa[a] with slot sb[b]; opposite slots sum to `target`, so
// P is supported on the antidiagonal.  Returns the antidiagonal values
// u_a = P[a][n-1-a], normalized so u_0 = 1.
std::vector<Rat> invariant_pairing(const Rep& ra, const std::vector<int>& sa, const Rep& rb,
                                   const std::vector<int>& sb, int excluded, const Weight& target) {
  int n = static_cast<int>(sa.size());
  if (static_cast<int>(sb.size()) != n) throw std::logic_error("invariant_pairing: size mismatch");
  for (int a = 0; a < n; a++)
    if (wadd(ra.weights[sa[a]], rb.weights[sb[n - 1 - a]]) != target)
      throw std::logic_error("invariant_pairing: opposite slots do not sum to the target weight");

  int nv = static_cast<int>(ra.E.size());
  std::vector<std::pair<QMatrix, QMatrix>> ops;
  for (int i = 0; i < nv; i++) {
    if (i == excluded) continue;
    ops.emplace_back(restrict_op(ra.E[i], sa), restrict_op(rb.E[i], sb));
    ops.emplace_back(restrict_op(ra.F[i], sa), restrict_op(rb.F[i], sb));
  }

  // <X e_a, e_b> + <e_a, X e_b> = 0 expands to one equation per (op, a, b).
  std::vector<std::vector<Rat>> eqs;
  for (const auto& [Xa, Xb] : ops)
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++) {
        Rat ca = Xa.at(n - 1 - b, a);
        Rat cb = Xb.at(n - 1 - a, b);
        if (ca == 0 && cb == 0) continue;
        std::vector<Rat> row(n, Rat(0));
        row[n - 1 - b] += ca;
        row[a] += cb;
        eqs.push_back(row);
      }

  QMatrix M(static_cast<int>(eqs.size()), n);
  for (size_t r = 0; r < eqs.size(); r++)
    for (int c = 0; c < n; c++) M.at(static_cast<int>(r), c) = eqs[r][c];
  std::vector<std::vector<Rat>> null = M.nullspace();
  if (null.size() != 1)
    throw std::logic_error("invariant_pairing: pairing space has dimension " +
                           std::to_string(null.size()));
  std::vector<Rat> u = null[0];
  if (u[0] == 0) throw std::logic_error("invariant_pairing: degenerate normalization slot");
  Rat lead = u[0];
  for (Rat& c : u) {
    c /= lead;
    if (c == 0) throw std::logic_error("invariant_pairing: pairing is degenerate");
  }
  return u;
}

void check_entry_degrees(const PolyRing& ring, const BettiTable& t, int k, const PolyMatrix& dk) {
  for (int m = 0; m < dk.rows(); m++)
    for (int i = 0; i < dk.cols(); i++) {
      RootVector deg = wsub(t.modules[k][i], t.modules[k - 1][m]);
      if (!is_homogeneous_of(ring, dk.at(m, i), deg))
        throw std::logic_error("differential d" + std::to_string(k) + " entry (" +
                               std::to_string(m) + "," + std::to_string(i) +
                               ") is not homogeneous of the table degree");
    }
}

Weight middle_weight(const Diagram& d, const Format& f, const WeightAlgebra& wa) {
  int r2 = f.r2();
  return wa.fundamental(r2 == 2 ? d.index_of("u") : d.index_of("y" + std::to_string(r2 - 2)));
}

std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); i++) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

PolyRing ring_from_word(const Diagram& d, const WeightAlgebra& wa, const WeylWord& sigma) {
  std::vector<RootVector> inv = inversion_set(wa, sigma);
  int zi = d.index_of("z1");
  PolyRing ring;
  ring.coarse = zi;
  for (size_t k = 0; k < inv.size(); k++) {
    if (inv[k][zi] < 1)
      throw NotMinimalCosetError("inversion root " + wstr(inv[k]) +
                                 " has no z1 component; the word is not minimal in its coset");
    ring.names.push_back("y" + std::to_string(k + 1));
    ring.degrees.push_back(wneg(inv[k]));
  }
  return ring;
}

PolyMatrix generic_matrix(const Rep& rep, const WeightAlgebra& wa, const PolyRing& ring,
                          const WeylWord& sigma) {
  int n = rep.dim(), nv = ring.nvars();
  PolyMatrix Y(n, n, nv);
  for (int k = 0; k < nv; k++) {
    RootVector beta = wneg(ring.degrees[k]);
    QMatrix E = root_operators(rep, wa, beta).E;
    Exponent e(nv, 0);
    e[k] = 1;
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        if (E.at(i, j) != 0) Y.at(i, j).add_term(e, E.at(i, j));
  }
  return Y.exp_nilpotent() * PolyMatrix::from_rational(word_lift(rep, sigma), nv);
}

std::vector<int> ordered_component(const Rep& rep, const WeightAlgebra& wa, int vertex,
                                   const std::vector<Weight>& order) {
  std::vector<int> comp = component_at_drop(rep, wa, vertex, 0);
  if (comp.size() != order.size())
    throw std::logic_error("top component has dimension " + std::to_string(comp.size()) +
                           ", expected " + std::to_string(order.size()));
  std::vector<char> used(comp.size(), 0);
  std::vector<int> out;
  for (const Weight& w : order) {
    int found = -1;
    for (size_t t = 0; t < comp.size(); t++) {
      if (used[t] || rep.weights[comp[t]] != w) continue;
      if (found >= 0) throw std::logic_error("weight " + wstr(w) + " repeats in the top component");
      found = static_cast<int>(t);
    }
    if (found < 0)
      throw std::logic_error("weight " + wstr(w) + " is missing from the top component");
    used[found] = 1;
    out.push_back(comp[found]);
  }
  return out;
}

GradedComplex build_resolution(const Diagram& d, const Format& f, const WeylWord& sigma) {
  if (d.kind() != DiagramKind::Finite)
    throw NotFiniteTypeError("build_resolution: diagram " + d.type_name() + " is not finite type");
  {
    Diagram expect = Diagram::from_format(f);
    if (expect.p() != d.p() || expect.q() != d.q() || expect.r() != d.r())
      throw FormatError("format " + f.to_string() + " belongs to " + expect.type_name() +
                        ", not " + d.type_name());
  }
  WeightAlgebra wa(d);
  BettiTable table = resolution_grading(d, f, wa, sigma);
  PolyRing ring = ring_from_word(d, wa, sigma);
  QSequences q = q_sequences(d, f, wa);
  int zi = d.index_of("z1"), xi = d.index_of("x1");

  const Rep& V1 = get_irrep(d, wa.fundamental(d.index_of("x" + std::to_string(f.r1()))));
  const Rep& V2 = get_irrep(d, middle_weight(d, f, wa));
  const Rep& V3 = get_irrep(d, wa.fundamental(d.index_of("z" + std::to_string(f.r3()))));

  PolyMatrix M1 = generic_matrix(V1, wa, ring, sigma);
  PolyMatrix M2 = generic_matrix(V2, wa, ring, sigma);
  PolyMatrix M3 = generic_matrix(V3, wa, ring, sigma);

  std::vector<int> z1top = ordered_component(V1, wa, zi, q.q1p);
  std::vector<int> x1top = ordered_component(V1, wa, xi, q.q0p);
  std::vector<int> z2top = ordered_component(V2, wa, zi, q.q1);
  std::vector<int> x2top = ordered_component(V2, wa, xi, q.q2);
  std::vector<int> z3top = ordered_component(V3, wa, zi, q.q3p);
  std::vector<int> x3top = ordered_component(V3, wa, xi, q.q2p);

  std::vector<Rat> u1 = invariant_pairing(V2, z2top, V1, z1top, zi, wa.fundamental(zi));
  std::vector<Rat> u2 = invariant_pairing(V2, x2top, V3, x3top, xi, wa.fundamental(xi));

  int f0 = f.f0, f1 = f.f1, f2 = f.f2, f3 = f.f3, nv = ring.nvars();
  PolyMatrix d1(f0, f1, nv), d2(f1, f2, nv), d3(f2, f3, nv);
  for (int j = 0; j < f0; j++)
    for (int m = 0; m < f1; m++)
      d1.at(j, m) = M1.at(z1top[f1 - 1 - m], x1top[f0 - 1 - j]).scaled(u1[m]);
  for (int m = 0; m < f1; m++)
    for (int i = 0; i < f2; i++) d2.at(m, i) = M2.at(z2top[m], x2top[i]);
  for (int i = 0; i < f2; i++)
    for (int k = 0; k < f3; k++)
      d3.at(i, k) = M3.at(z3top[f3 - 1 - k], x3top[f2 - 1 - i]).scaled(u2[i]);

  GradedComplex c{d, f, sigma, ring, table, d1, d2, d3};
  check_entry_degrees(ring, table, 1, c.d1);
  check_entry_degrees(ring, table, 2, c.d2);
  check_entry_degrees(ring, table, 3, c.d3);
  return c;
}

std::string CheckReport::to_string() const {
  std::ostringstream os;
  os << "complex identity: " << (complex_identity ? "ok" : "FAIL") << "\n";
  os << "homogeneity:      " << (homogeneous ? "ok" : "FAIL") << "\n";
  os << "generic ranks:    " << (ranks ? "ok" : "FAIL") << "\n";
  for (const std::string& n : notes) os << "  " << n << "\n";
  return os.str();
}

CheckReport check_complex(const GradedComplex& c, std::uint64_t seed) {
  CheckReport rep;

  PolyMatrix p12 = c.d1 * c.d2;
  PolyMatrix p23 = c.d2 * c.d3;
  rep.complex_identity = p12.is_zero() && p23.is_zero();
  if (!p12.is_zero()) rep.notes.push_back("d1*d2 has a nonzero entry");
  if (!p23.is_zero()) rep.notes.push_back("d2*d3 has a nonzero entry");

  rep.homogeneous = true;
  const PolyMatrix* ds[3] = {&c.d1, &c.d2, &c.d3};
  for (int k = 1; k <= 3; k++) {
    const PolyMatrix& dk = *ds[k - 1];
    for (int m = 0; m < dk.rows() && rep.homogeneous; m++)
      for (int i = 0; i < dk.cols() && rep.homogeneous; i++) {
        RootVector deg = wsub(c.table.modules[k][i], c.table.modules[k - 1][m]);
        if (!is_homogeneous_of(c.ring, dk.at(m, i), deg)) {
          rep.homogeneous = false;
          rep.notes.push_back("d" + std::to_string(k) + " entry (" + std::to_string(m) + "," +
                              std::to_string(i) + ") is not homogeneous of the table degree");
        }
      }
  }

  int want[3] = {c.format.r1(), c.format.r2(), c.format.r3()};
  std::mt19937_64 rng(seed);
  int nv = c.ring.nvars();
  rep.ranks = true;
  for (int t = 0; t < 5 && rep.ranks; t++) {
    bool good = false;
    int got[3] = {-1, -1, -1};
    for (int attempt = 0; attempt < 10 && !good; attempt++) {
      std::vector<Rat> pt(nv);
      for (Rat& x : pt) x = Rat(1 + static_cast<long>(rng() % 97));
      good = true;
      for (int k = 0; k < 3; k++) {
        got[k] = ds[k]->evaluate(pt).rank();
        if (got[k] != want[k]) good = false;
      }
    }
    if (!good) {
      rep.ranks = false;
      rep.notes.push_back("rank probe " + std::to_string(t) + ": got (" + std::to_string(got[0]) +
                          "," + std::to_string(got[1]) + "," + std::to_string(got[2]) +
                          "), expected (" + std::to_string(want[0]) + "," +
                          std::to_string(want[1]) + "," + std::to_string(want[2]) + ")");
    }
  }
  return rep;
}

std::vector<PluckerCoordinate> plucker_coordinates(const GradedComplex& c) {
  WeightAlgebra wa(c.diagram);
  int zi = c.diagram.index_of("z1"), xi = c.diagram.index_of("x1");
  const Rep& X = get_irrep(c.diagram, wa.fundamental(xi));
  if (X.weights[0] != X.highest) throw std::logic_error("highest weight vector is not slot 0");
  PolyMatrix M = generic_matrix(X, wa, c.ring, c.sigma);

  // Extreme weights of the top component: the orbit of the highest weight
  // under the reflections away from z1.
  std::set<Weight> orbit;
  std::vector<Weight> frontier{X.highest};
  orbit.insert(X.highest);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier)
      for (int i = 0; i < c.diagram.size(); i++) {
        if (i == zi) continue;
        Weight r = wa.reflect(i, w);
        if (orbit.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }

  Weight shw = apply_word(wa, c.sigma, wa.fundamental(xi));
  std::vector<PluckerCoordinate> out;
  for (int b : component_at_drop(X, wa, zi, 0)) {
    PluckerCoordinate pc;
    pc.slot = b;
    pc.weight = X.weights[b];
    pc.degree = wa.omega_to_alpha_int(wsub(shw, pc.weight));
    pc.extremal = orbit.count(pc.weight) > 0;
    pc.p = M.at(b, 0);
    out.push_back(pc);
  }
  return out;
}

namespace {

// Search for a column set whose f2 x f2 minor of the composite on V equals a
// unit times `power`.  Columns are `fixed` plus a ka-subset of poolA and a
// kb-subset of poolB, filtered by the weight sum before any determinant is
// expanded.  Returns the column set, or empty if none works.
std::vector<int> witness_search(const PolyMatrix& M, const Rep& V, const std::vector<int>& rows,
                                const std::vector<int>& fixed, const std::vector<int>& poolA,
                                int ka, const std::vector<int>& poolB, int kb,
                                const Weight& target, const MultiPoly& power, int nverts) {
  int n = static_cast<int>(rows.size());
  auto subsA = subsets(static_cast<int>(poolA.size()), ka);
  auto subsB = subsets(static_cast<int>(poolB.size()), kb);
  Weight base = weight_sum(V, fixed, nverts);
  for (const auto& A : subsA) {
    Weight wa = base;
    for (int t : A) wa = wadd(wa, V.weights[poolA[t]]);
    for (const auto& B : subsB) {
      Weight wb = wa;
      for (int t : B) wb = wadd(wb, V.weights[poolB[t]]);
      if (wb != target) continue;
      std::vector<int> cols = fixed;
      for (int t : A) cols.push_back(poolA[t]);
      for (int t : B) cols.push_back(poolB[t]);
      PolyMatrix W(n, n, M.nvars());
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) W.at(a, b) = M.at(cols[b], rows[a]);
      MultiPoly det = W.det();
      if (det.is_zero()) continue;
      try {
        MultiPoly q = det.divide_exact(power);
        if (q.is_constant() && q.constant_value() != 0) return cols;
      } catch (const std::exception&) {
      }
    }
  }
  return {};
}

}  // namespace

std::string WitnessReport::to_string() const {
  std::ostringstream os;
  for (const MinorWitness& w : witnesses) {
    os << "plucker at " << wstr(w.plucker_weight);
    if (w.d2_columns.empty() && w.d3_columns.empty()) {
      os << ": zero coordinate, vacuous\n";
      continue;
    }
    os << ": d2 minor cols " << subset_str(w.d2_columns) << " = unit * p^" << w.d2_exponent
       << ", d3 minor cols " << subset_str(w.d3_columns) << " = unit * p^" << w.d3_exponent
       << "\n";
  }
  return os.str();
}

WitnessReport verify_minor_identities(const GradedComplex& c) {
  WeightAlgebra wa(c.diagram);
  const Format& f = c.format;
  int r2 = f.r2(), r3 = f.r3();
  int zi = c.diagram.index_of("z1"), xi = c.diagram.index_of("x1");
  int nverts = c.diagram.size();
  QSequences q = q_sequences(c.diagram, f, wa);

  const Rep& V2 = get_irrep(c.diagram, middle_weight(c.diagram, f, wa));
  const Rep& V3 = get_irrep(c.diagram, wa.fundamental(c.diagram.index_of("z" + std::to_string(r3))));
  PolyMatrix M2 = generic_matrix(V2, wa, c.ring, c.sigma);
  PolyMatrix M3 = generic_matrix(V3, wa, c.ring, c.sigma);

  std::vector<int> x2top = ordered_component(V2, wa, xi, q.q2);
  std::vector<int> z2top = ordered_component(V2, wa, zi, q.q1);
  std::vector<int> drop2 = component_at_drop(V2, wa, zi, 1);
  std::vector<int> x3top = ordered_component(V3, wa, xi, q.q2p);
  std::vector<int> z3top = ordered_component(V3, wa, zi, q.q3p);
  std::vector<int> drop3 = component_at_drop(V3, wa, zi, 1);

  Weight shw = apply_word(wa, c.sigma, wa.fundamental(xi));
  Weight x2sum(nverts, 0), x3sum(nverts, 0);
  for (int g : x2top) x2sum = wadd(x2sum, apply_word(wa, c.sigma, V2.weights[g]));
  for (int g : x3top) x3sum = wadd(x3sum, apply_word(wa, c.sigma, V3.weights[g]));

  WitnessReport report;
  for (const PluckerCoordinate& pc : plucker_coordinates(c)) {
    if (!pc.extremal) continue;
    MinorWitness w;
    w.plucker_weight = pc.weight;
    w.d2_exponent = r3 + 1;
    w.d3_exponent = r2 - 1;
    if (pc.p.is_zero()) {
      report.witnesses.push_back(w);
      continue;
    }
    Weight t2 = wadd(wsub(x2sum, weight_scale(shw, r3 + 1)), weight_scale(pc.weight, r3 + 1));
    w.d2_columns = witness_search(M2, V2, x2top, {}, z2top, r2, drop2, r3, t2,
                                  pc.p.pow(r3 + 1), nverts);
    if (w.d2_columns.empty())
      throw IdentityFailure("no d2 witness minor for the Plucker coordinate at weight " +
                            wstr(pc.weight));
    Weight t3 = wadd(wsub(x3sum, weight_scale(shw, r2 - 1)), weight_scale(pc.weight, r2 - 1));
    w.d3_columns = witness_search(M3, V3, x3top, z3top, drop3, r2, {}, 0, t3,
                                  pc.p.pow(r2 - 1), nverts);
    if (w.d3_columns.empty())
      throw IdentityFailure("no d3 witness minor for the Plucker coordinate at weight " +
                            wstr(pc.weight));
    report.witnesses.push_back(w);
  }
  return report;
}

BEMultipliers be_multipliers(const GradedComplex& c) {
  const Format& f = c.format;
  int f0 = f.f0, f1 = f.f1, f2 = f.f2, f3 = f.f3;
  int r1 = f.r1(), r2 = f.r2();
  int n = c.diagram.size();
  BEMultipliers out;

  std::vector<int> allcols3(f3);
  std::iota(allcols3.begin(), allcols3.end(), 0);
  out.idx3 = subsets(f2, f3);
  std::map<std::vector<int>, int> pos3;
  for (size_t t = 0; t < out.idx3.size(); t++) {
    out.a3.push_back(minor_of(c.d3, out.idx3[t], allcols3));
    pos3[out.idx3[t]] = static_cast<int>(t);
  }

  RootVector S0 = degree_sum(c.table.modules[0], n);
  RootVector S1 = degree_sum(c.table.modules[1], n);
  RootVector S2 = degree_sum(c.table.modules[2], n);
  RootVector S3 = degree_sum(c.table.modules[3], n);

  auto complement = [](const std::vector<int>& s, int m) {
    std::vector<char> in(m, 0);
    for (int v : s) in[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < m; v++)
      if (!in[v]) out.push_back(v);
    return out;
  };

  // Joint system for all a2[S]: minor_{S,U}(d2) = a2[S] * sgn(U) * a3[U^c].
  out.idx2 = subsets(f1, r2);
  auto Us = subsets(f2, r2);
  int ns = static_cast<int>(out.idx2.size());
  int rows = ns * static_cast<int>(Us.size());
  PolyMatrix A(rows, ns, c.ring.nvars());
  std::vector<MultiPoly> b;
  std::vector<RootVector> xdegs(ns);
  for (int si = 0; si < ns; si++) {
    std::vector<RootVector> picked;
    for (int m : out.idx2[si]) picked.push_back(c.table.modules[1][m]);
    xdegs[si] = wsub(wsub(S2, degree_sum(picked, n)), S3);
  }
  for (int si = 0; si < ns; si++)
    for (size_t ui = 0; ui < Us.size(); ui++) {
      int row = si * static_cast<int>(Us.size()) + static_cast<int>(ui);
      Rat sgn(shuffle_sign(Us[ui], f2));
      A.at(row, si) = out.a3[pos3.at(complement(Us[ui], f2))].scaled(sgn);
      b.push_back(minor_of(c.d2, out.idx2[si], Us[ui]));
    }

  auto solve_both = [&](const PolyMatrix& Am, const std::vector<RootVector>& degs,
                        const std::vector<MultiPoly>& rhs) {
    bool uniq = false;
    std::vector<MultiPoly> first = graded_solve(c.ring, Am, degs, rhs, &uniq);
    if (!uniq) throw NoSolutionError("multiplier solve is not unique");
    int nc = Am.cols();
    PolyMatrix Ar(Am.rows(), nc, Am.nvars());
    std::vector<RootVector> dr(nc);
    for (int j = 0; j < nc; j++) {
      dr[j] = degs[nc - 1 - j];
      for (int i = 0; i < Am.rows(); i++) Ar.at(i, j) = Am.at(i, nc - 1 - j);
    }
    std::vector<MultiPoly> second = graded_solve(c.ring, Ar, dr, rhs);
    for (int j = 0; j < nc; j++)
      if (second[nc - 1 - j] != first[j])
        throw NoSolutionError("multiplier solve changed under unknown reordering");
    return first;
  };

  out.a2 = solve_both(A, xdegs, b);

  // a1: minor_{all,V}(d1) = a1 * sgn(V) * a2[V^c].
  std::vector<int> allrows0(f0);
  std::iota(allrows0.begin(), allrows0.end(), 0);
  std::map<std::vector<int>, int> pos2;
  for (size_t t = 0; t < out.idx2.size(); t++) pos2[out.idx2[t]] = static_cast<int>(t);
  auto Vs = subsets(f1, r1);
  PolyMatrix A1(static_cast<int>(Vs.size()), 1, c.ring.nvars());
  std::vector<MultiPoly> b1;
  for (size_t vi = 0; vi < Vs.size(); vi++) {
    Rat sgn(shuffle_sign(Vs[vi], f1));
    A1.at(static_cast<int>(vi), 0) = out.a2[pos2.at(complement(Vs[vi], f1))].scaled(sgn);
    b1.push_back(minor_of(c.d1, allrows0, Vs[vi]));
  }
  RootVector d1deg = wsub(wsub(wadd(S1, S3), S0), S2);
  out.a1 = solve_both(A1, {d1deg}, b1)[0];
  return out;
}

ExchangeResult exchange_dual(const GradedComplex& c) {
  WeightAlgebra wa(c.diagram);
  Diagram dx = exchange_diagram(c.diagram);
  Format fx = exchange_format(c.format);
  WeylWord sx = exchange_word(c.diagram, dx, c.sigma);
  ExchangeResult res{build_resolution(dx, fx, sx), false, {}};

  BettiTable eg = exchange_grading(c.table, wa, c.sigma);
  BettiTable pred;
  pred.format = fx;
  pred.modules.resize(4);
  for (int p = 0; p < 4; p++)
    for (const RootVector& v : eg.modules[3 - p])
      pred.modules[p].push_back(exchange_coords(c.diagram, dx, wneg(v)));
  res.grading_matches = equal_up_to_shift(pred, res.dual.table, &res.shift);
  return res;
}

Json complex_to_json(const GradedComplex& c) {
  Json j;
  j["format"] = {c.format.f0, c.format.f1, c.format.f2, c.format.f3};
  j["diagram"] = Json{{"p", c.diagram.p()}, {"q", c.diagram.q()}, {"r", c.diagram.r()}};
  j["sigma"] = word_to_string(c.diagram, c.sigma);
  j["ring"] = polyring_to_json(c.ring);
  j["betti"] = betti_to_json(c.table, c.diagram.index_of("z1"));
  j["d1"] = polymatrix_to_json(c.d1);
  j["d2"] = polymatrix_to_json(c.d2);
  j["d3"] = polymatrix_to_json(c.d3);
  return j;
}

GradedComplex complex_from_json(const Json& j) {
  Format f(j["format"][0].get<int>(), j["format"][1].get<int>(), j["format"][2].get<int>(),
           j["format"][3].get<int>());
  Diagram d(j["diagram"]["p"].get<int>(), j["diagram"]["q"].get<int>(),
            j["diagram"]["r"].get<int>());
  WeylWord sigma = parse_word(d, j["sigma"].get<std::string>());
  PolyRing ring = polyring_from_json(j["ring"]);
  BettiTable t;
  t.format = f;
  t.modules.resize(4);
  for (int p = 0; p < 4; p++)
    for (const Json& deg : j["betti"]["modules"][p]["multidegrees"])
      t.modules[p].push_back(weight_from_json(deg));
  return GradedComplex{d,
                       f,
                       sigma,
                       ring,
                       t,
                       polymatrix_from_json(j["d1"]),
                       polymatrix_from_json(j["d2"]),
                       polymatrix_from_json(j["d3"])};
}

void complex_to_json_file(const GradedComplex& c, const std::string& path) {
  json_write_file(path, complex_to_json(c));
}

GradedComplex complex_from_json_file(const std::string& path) {
  return complex_from_json(json_read_file(path));
}

}  // namespace licci
