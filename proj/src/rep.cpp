#include "licci/rep.hpp"

#include <map>
#include <mutex>
#include <set>

namespace licci {

namespace {
using SparseCol = std::vector<std::pair<int, Rat>>;

void accumulate(std::map<int, Rat>& acc, int idx, const Rat& v) {
  if (v == 0) return;
  acc[idx] += v;
}

SparseCol to_sparse(const std::map<int, Rat>& acc) {
  SparseCol c;
  for (const auto& [i, v] : acc)
    if (v != 0) c.emplace_back(i, v);
  return c;
}
}  // namespace

Rep build_irrep(const Diagram& d, const Weight& lambda) {
  WeightAlgebra wa(d);
  if (static_cast<int>(lambda.size()) != wa.n())
    throw std::invalid_argument("build_irrep: weight size mismatch");
  if (!wa.is_dominant(lambda)) throw NotDominantError("build_irrep: weight not dominant");
  if (d.kind() != DiagramKind::Finite)
    throw NotFiniteTypeError("build_irrep: representation is infinite-dimensional");
  int n = wa.n();

  std::vector<Weight> weights{lambda};
  std::vector<std::pair<int, int>> origin{{-1, -1}};
  // Per-vertex sparse action columns, indexed by source basis vector.
  std::vector<std::vector<SparseCol>> fcol(n), ecol(n);
  for (int i = 0; i < n; i++) {
    fcol[i].resize(1);
    ecol[i].resize(1);
  }

  std::vector<int> level{0};
  std::map<int, int> loc;  // global index -> position within current level
  loc[0] = 0;
  QMatrix gram(1, 1);
  gram.at(0, 0) = 1;

  while (!level.empty()) {
    struct Cand {
      int i;      // vertex applied
      int bglob;  // source basis vector
    };
    std::map<Weight, std::vector<Cand>> batches;
    for (int bglob : level)
      for (int i = 0; i < n; i++)
        batches[wsub(weights[bglob], wa.simple_root(i))].push_back({i, bglob});

    std::vector<int> next_level;
    std::map<int, int> next_loc;
    std::vector<QMatrix> next_blocks;

    for (auto& [mu, cands] : batches) {
      int m = static_cast<int>(cands.size());
      // Contravariant form between candidate images:
      //   <f_i b, f_j c> = <b, f_j(e_i c)> + [i==j] wt(c)[i] <b, c>,
      // which only needs inner products on the current level.
      QMatrix C(m, m);
      for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) {
          Rat val(0);
          int la = loc.at(cands[a].bglob);
          for (const auto& [pg, pc] : ecol[cands[a].i][cands[b].bglob])
            for (const auto& [cg, cc] : fcol[cands[b].i][pg]) {
              const Rat& g = gram.at(la, loc.at(cg));
              if (g != 0) val += pc * cc * g;
            }
          if (cands[a].i == cands[b].i) {
            const Rat& g = gram.at(la, loc.at(cands[b].bglob));
            if (g != 0) val += Rat(weights[cands[b].bglob][cands[a].i]) * g;
          }
          C.at(a, b) = val;
        }

      std::vector<int> sel;
      for (int k = 0; k < m; k++) {
        std::vector<int> trial = sel;
        trial.push_back(k);
        if (C.submatrix(trial, trial).rank() == static_cast<int>(trial.size())) sel = trial;
      }

      int base = static_cast<int>(weights.size());
      for (size_t t = 0; t < sel.size(); t++) {
        weights.push_back(mu);
        origin.emplace_back(cands[sel[t]].i, cands[sel[t]].bglob);
        for (int i = 0; i < n; i++) {
          fcol[i].emplace_back();
          ecol[i].emplace_back();
        }
      }

      QMatrix GS = C.submatrix(sel, sel);
      for (int k = 0; k < m; k++) {
        std::vector<Rat> rhs(sel.size());
        for (size_t t = 0; t < sel.size(); t++) rhs[t] = C.at(sel[t], k);
        std::vector<Rat> x;
        if (!GS.solve(rhs, x)) throw std::logic_error("build_irrep: Gram solve failed");
        SparseCol col;
        for (size_t t = 0; t < x.size(); t++)
          if (x[t] != 0) col.emplace_back(base + static_cast<int>(t), x[t]);
        fcol[cands[k].i][cands[k].bglob] = std::move(col);
      }

      for (size_t t = 0; t < sel.size(); t++) {
        int g = base + static_cast<int>(t);
        int i0 = cands[sel[t]].i;
        int b0 = cands[sel[t]].bglob;
        for (int j = 0; j < n; j++) {
          // e_j (f_i0 b0) = f_i0 (e_j b0) + [j==i0] wt(b0)[i0] b0
          std::map<int, Rat> acc;
          for (const auto& [pg, pc] : ecol[j][b0])
            for (const auto& [cg, cc] : fcol[i0][pg]) accumulate(acc, cg, pc * cc);
          if (j == i0) accumulate(acc, b0, Rat(weights[b0][i0]));
          ecol[j][g] = to_sparse(acc);
        }
        next_loc[g] = static_cast<int>(next_level.size());
        next_level.push_back(g);
      }
      if (!sel.empty()) next_blocks.push_back(GS);
    }

    // Distinct weights are orthogonal, so the new level Gram is block diagonal.
    QMatrix ng(static_cast<int>(next_level.size()), static_cast<int>(next_level.size()));
    int off = 0;
    for (const QMatrix& blk : next_blocks) {
      for (int a = 0; a < blk.rows(); a++)
        for (int b = 0; b < blk.cols(); b++) ng.at(off + a, off + b) = blk.at(a, b);
      off += blk.rows();
    }
    level = std::move(next_level);
    loc = std::move(next_loc);
    gram = std::move(ng);
  }

  Rep rep;
  rep.highest = lambda;
  rep.weights = weights;
  rep.origin = origin;
  int dim = static_cast<int>(weights.size());
  rep.E.assign(n, QMatrix(dim, dim));
  rep.F.assign(n, QMatrix(dim, dim));
  for (int i = 0; i < n; i++)
    for (int g = 0; g < dim; g++) {
      for (const auto& [row, v] : fcol[i][g]) rep.F[i].at(row, g) = v;
      for (const auto& [row, v] : ecol[i][g]) rep.E[i].at(row, g) = v;
    }
  return rep;
}

const Rep& get_irrep(const Diagram& d, const Weight& lambda) {
  static std::map<std::string, Rep> cache;
  static std::mutex mtx;
  std::string key =
      std::to_string(d.p()) + "," + std::to_string(d.q()) + "," + std::to_string(d.r()) + "|" + wstr(lambda);
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build_irrep(d, lambda)).first->second;
}

QMatrix simple_reflection_lift(const Rep& rep, int i) {
  return rep.F[i].exp_nilpotent() * rep.E[i].scaled(Rat(-1)).exp_nilpotent() *
         rep.F[i].exp_nilpotent();
}

QMatrix simple_reflection_lift_inverse(const Rep& rep, int i) {
  return rep.F[i].scaled(Rat(-1)).exp_nilpotent() * rep.E[i].exp_nilpotent() *
         rep.F[i].scaled(Rat(-1)).exp_nilpotent();
}

QMatrix word_lift(const Rep& rep, const WeylWord& w) {
  QMatrix m = QMatrix::identity(rep.dim());
  for (int i : w) m = m * simple_reflection_lift(rep, i);
  return m;
}

QMatrix word_lift_inverse(const Rep& rep, const WeylWord& w) {
  QMatrix m = QMatrix::identity(rep.dim());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    m = m * simple_reflection_lift_inverse(rep, *it);
  return m;
}

RootOperators root_operators(const Rep& rep, const WeightAlgebra& wa, const RootVector& beta) {
  int n = wa.n();
  int nz = 0, idx = -1;
  for (int i = 0; i < n; i++) {
    if (beta[i] < 0) throw NotPositiveRootError("root_operators: need a positive root");
    if (beta[i] != 0) {
      nz++;
      idx = i;
    }
  }
  if (nz == 1 && beta[idx] == 1) return {rep.E[idx], rep.F[idx]};
  for (int i = 0; i < n; i++) {
    Int pair = 0;
    for (int j = 0; j < n; j++) {
      Rat a = wa.cartan().at(i, j);
      a.canonicalize();
      pair += a.get_num() * beta[j];
    }
    if (pair > 0) {
      RootOperators sub = root_operators(rep, wa, wa.reflect_root(i, beta));
      QMatrix s = simple_reflection_lift(rep, i);
      QMatrix sinv = simple_reflection_lift_inverse(rep, i);
      return {s * sub.E * sinv, s * sub.F * sinv};
    }
  }
  throw NotPositiveRootError("root_operators: no descent found; not a root");
}

std::vector<int> component_at_drop(const Rep& rep, const WeightAlgebra& wa, int vertex, int drop) {
  std::vector<int> out;
  for (int k = 0; k < rep.dim(); k++) {
    RootVector diff = wa.omega_to_alpha_int(wsub(rep.highest, rep.weights[k]));
    if (diff[vertex] == drop) out.push_back(k);
  }
  return out;
}

std::vector<std::vector<int>> t_grading(const Rep& rep, const WeightAlgebra& wa, int vertex) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k < rep.dim(); k++) {
    RootVector diff = wa.omega_to_alpha_int(wsub(rep.highest, rep.weights[k]));
    int drop = static_cast<int>(diff[vertex].get_si());
    if (drop >= static_cast<int>(out.size())) out.resize(drop + 1);
    out[drop].push_back(k);
  }
  return out;
}

std::vector<int> weight_space(const Rep& rep, const Weight& mu) {
  std::vector<int> out;
  for (int k = 0; k < rep.dim(); k++)
    if (rep.weights[k] == mu) out.push_back(k);
  return out;
}

std::vector<RootVector> all_roots(const Diagram& d) {
  WeightAlgebra wa(d);
  if (d.kind() != DiagramKind::Finite)
    throw NotFiniteTypeError("all_roots: infinitely many roots");
  int n = wa.n();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < n; i++) {
    RootVector a(n, 0);
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> nxt;
    for (const RootVector& b : frontier)
      for (int i = 0; i < n; i++) {
        RootVector c = wa.reflect_root(i, b);
        if (seen.insert(c).second) nxt.push_back(c);
      }
    frontier = std::move(nxt);
  }
  return std::vector<RootVector>(seen.begin(), seen.end());
}

std::vector<int> z1_graded_dims(const Diagram& d) {
  int z = d.index_of("z1");
  std::vector<RootVector> roots = all_roots(d);
  Int lo = 0, hi = 0;
  for (const auto& r : roots) {
    if (r[z] < lo) lo = r[z];
    if (r[z] > hi) hi = r[z];
  }
  int width = static_cast<int>(hi.get_si() - lo.get_si()) + 1;
  std::vector<int> dims(width, 0);
  for (const auto& r : roots) {
    Int off = r[z] - lo;
    dims[static_cast<int>(off.get_si())]++;
  }
  Int mid = -lo;
  dims[static_cast<int>(mid.get_si())] += d.size();
  return dims;
}

}  // namespace licci
