#pragma once
// Independent cross-checks for the test suite.  Everything here is computed
// from first principles (Cartan matrix arithmetic, permutation groups,
// cofactor expansion) without calling the code paths under test.
#include <array>
#include <map>
#include <set>
#include <vector>

#include "licci/diagram.hpp"
#include "licci/poly.hpp"
#include "licci/rational.hpp"

namespace oracle {

using licci::Diagram;
using licci::MultiPoly;
using licci::PolyMatrix;
using licci::QMatrix;
using licci::Rat;

// All positive roots, as simple-root coefficient vectors, by reflection
// closure of the simple roots.
inline std::vector<std::vector<long>> positive_roots(const Diagram& d) {
  QMatrix cartan = d.cartan();
  int n = d.size();
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < n; i++) {
    std::vector<long> alpha(n, 0);
    alpha[i] = 1;
    seen.insert(alpha);
    queue.push_back(alpha);
  }
  for (size_t head = 0; head < queue.size(); head++) {
    std::vector<long> beta = queue[head];
    for (int i = 0; i < n; i++) {
      long pairing = 0;
      for (int j = 0; j < n; j++) pairing += beta[j] * cartan.at(i, j).get_num().get_si();
      std::vector<long> next = beta;
      next[i] -= pairing;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::vector<long>> out;
  for (const auto& beta : seen) {
    bool nonneg = true;
    for (long c : beta) nonneg = nonneg && c >= 0;
    if (nonneg) out.push_back(beta);
  }
  return out;
}

// Weyl dimension formula for a dominant weight in fundamental-weight
// coordinates, valid for the simply-laced diagrams used here.
inline long weyl_dim(const Diagram& d, const std::vector<long>& lambda) {
  Rat dim(1);
  for (const auto& beta : positive_roots(d)) {
    long num = 0, den = 0;
    for (size_t i = 0; i < beta.size(); i++) {
      num += (lambda[i] + 1) * beta[i];
      den += beta[i];
    }
    dim *= Rat(num, den);
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("weyl_dim: non-integral value");
  return dim.get_num().get_si();
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 0; i < k; i++) out = out * (n - i) / (i + 1);
  return out;
}

// Brute-force S4 model of the A3 Weyl group: generators are the adjacent
// transpositions in the path order x1, u, z1.
using Perm = std::array<int, 4>;

inline Perm perm_identity() { return {0, 1, 2, 3}; }

inline Perm perm_apply_gen(const Perm& p, int k) {
  Perm out = p;
  std::swap(out[k], out[k + 1]);
  return out;
}

struct S4Table {
  std::map<Perm, int> length;
  std::map<Perm, std::vector<int>> reduced;
  std::vector<Perm> elements;
};

inline S4Table s4_table() {
  S4Table t;
  Perm e = perm_identity();
  t.length[e] = 0;
  t.reduced[e] = {};
  t.elements.push_back(e);
  for (size_t head = 0; head < t.elements.size(); head++) {
    Perm p = t.elements[head];
    for (int k = 0; k < 3; k++) {
      Perm q = perm_apply_gen(p, k);
      if (t.length.count(q)) continue;
      t.length[q] = t.length[p] + 1;
      std::vector<int> word = t.reduced[p];
      word.push_back(k);
      t.reduced[q] = word;
      t.elements.push_back(q);
    }
  }
  return t;
}

inline Perm perm_of_word(const std::vector<int>& word) {
  // Leftmost letter acts last: multiply from the right.
  Perm p = perm_identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Perm gen = perm_apply_gen(perm_identity(), *it);
    Perm out;
    for (int i = 0; i < 4; i++) out[i] = gen[p[i]];
    p = out;
  }
  return p;
}

// Subword characterization of Bruhat order: u <= w iff u is the product of
// some subword of a reduced word of w.
inline bool bruhat_leq(const S4Table& t, const Perm& u, const Perm& w) {
  const std::vector<int>& word = t.reduced.at(w);
  int n = static_cast<int>(word.size());
  std::set<Perm> reachable;
  for (int mask = 0; mask < (1 << n); mask++) {
    std::vector<int> sub;
    for (int i = 0; i < n; i++)
      if (mask & (1 << i)) sub.push_back(word[i]);
    reachable.insert(perm_of_word(sub));
  }
  return reachable.count(u) > 0;
}

inline MultiPoly det_cofactor(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 0) return MultiPoly::constant(m.nvars(), Rat(1));
  if (n == 1) return m.at(0, 0);
  MultiPoly out = MultiPoly::zero(m.nvars());
  std::vector<int> rows, cols;
  for (int i = 1; i < n; i++) rows.push_back(i);
  for (int j = 0; j < n; j++) {
    cols.clear();
    for (int k = 0; k < n; k++)
      if (k != j) cols.push_back(k);
    MultiPoly term = m.at(0, j) * det_cofactor(m.submatrix(rows, cols));
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace oracle
