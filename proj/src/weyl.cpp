#include "licci/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace licci {

WeylWord parse_word(const Diagram& d, const std::string& text) {
  WeylWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e" && w.empty()) continue;
    w.push_back(d.index_of(tok));
  }
  return w;
}

std::string word_to_string(const Diagram& d, const WeylWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) s += " ";
    s += d.vertex_names()[w[i]];
  }
  return s;
}

Weight apply_word(const WeightAlgebra& wa, const WeylWord& w, const Weight& v) {
  Weight r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = wa.reflect(*it, r);
  return r;
}

RootVector apply_word_root(const WeightAlgebra& wa, const WeylWord& w, const RootVector& c) {
  RootVector r = c;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = wa.reflect_root(*it, r);
  return r;
}

WeylWord inverse_word(const WeylWord& w) {
  return WeylWord(w.rbegin(), w.rend());
}

Weight canonical_form(const WeightAlgebra& wa, const WeylWord& w) {
  return apply_word(wa, w, wa.rho());
}

WeylWord reduced_word(const WeightAlgebra& wa, const WeylWord& w) {
  Weight lam = apply_word(wa, w, wa.rho());
  WeylWord out;
  for (;;) {
    int desc = -1;
    for (int i = 0; i < wa.n(); i++)
      if (lam[i] < 0) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    out.push_back(desc);
    lam = wa.reflect(desc, lam);
  }
  return out;
}

int weyl_length(const WeightAlgebra& wa, const WeylWord& w) {
  return static_cast<int>(reduced_word(wa, w).size());
}

bool is_reduced(const WeightAlgebra& wa, const WeylWord& w) {
  return reduced_word(wa, w).size() == w.size();
}

bool words_equal(const WeightAlgebra& wa, const WeylWord& a, const WeylWord& b) {
  return apply_word(wa, a, wa.rho()) == apply_word(wa, b, wa.rho());
}

bool bruhat_leq(const WeightAlgebra& wa, const WeylWord& u, const WeylWord& w) {
  // Scan the letters of a reduced word for w from the left, greedily folding
  // each one into the remainder v of u whenever it shortens v.  The standard
  // lifting-property argument shows v ends at the identity exactly when
  // u <= w.  Only v(rho) is needed: its s-coordinate is negative exactly when
  // s shortens v, and v = e exactly when v(rho) = rho.
  Weight lam = apply_word(wa, u, wa.rho());
  for (int s : reduced_word(wa, w)) {
    if (lam[s] < 0) lam = wa.reflect(s, lam);
  }
  return lam == wa.rho();
}

std::vector<RootVector> inversion_set(const WeightAlgebra& wa, const WeylWord& w) {
  if (!is_reduced(wa, w)) throw NotReducedError("inversion_set: word is not reduced");
  std::vector<RootVector> out;
  for (size_t k = 0; k < w.size(); k++) {
    RootVector beta(wa.n(), 0);
    beta[w[k]] = 1;
    for (size_t j = k; j-- > 0;) beta = wa.reflect_root(w[j], beta);
    out.push_back(beta);
  }
  return out;
}

Rat weight_drop_pairing(const WeightAlgebra& wa, const WeylWord& w, int r, int t) {
  Weight wr = wa.fundamental(r);
  Weight moved = apply_word(wa, inverse_word(w), wr);
  return wa.pairing(wsub(wr, moved), wa.fundamental(t));
}

bool is_min_double_coset_rep(const WeightAlgebra& wa, const WeylWord& w, int left, int right) {
  Weight mu = wa.fundamental(right);
  for (size_t k = w.size(); k-- > 0;) {
    int i = w[k];
    if (mu[i] <= 0) return false;
    mu = wa.reflect(i, mu);
  }
  for (int i = 0; i < wa.n(); i++)
    if (i != left && mu[i] < 0) return false;
  return true;
}

std::vector<WeylWord> enumerate_double_cosets(const Diagram& d, const WeightAlgebra& wa,
                                              int max_length, const std::string& left,
                                              const std::string& right) {
  if (max_length < 0 && d.kind() != DiagramKind::Finite)
    throw AffineTypeError("enumerate_double_cosets: Weyl group is infinite; pass max_length");
  int li = d.index_of(left), ri = d.index_of(right);
  std::map<Weight, WeylWord> seen;
  Weight start = wa.fundamental(ri);
  seen[start] = {};
  std::vector<Weight> frontier{start};
  while (!frontier.empty()) {
    // Collect and sort the level's candidate words so each new weight records
    // the lexicographically least shortest word reaching it.
    std::vector<std::pair<WeylWord, Weight>> cand;
    for (const Weight& mu : frontier) {
      const WeylWord& word = seen.at(mu);
      if (max_length >= 0 && static_cast<int>(word.size()) >= max_length) continue;
      for (int i = 0; i < wa.n(); i++) {
        if (mu[i] == 0) continue;
        Weight nu = wa.reflect(i, mu);
        if (seen.count(nu)) continue;
        WeylWord nw;
        nw.reserve(word.size() + 1);
        nw.push_back(i);
        nw.insert(nw.end(), word.begin(), word.end());
        cand.emplace_back(std::move(nw), std::move(nu));
      }
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    frontier.clear();
    for (auto& [word, nu] : cand) {
      if (seen.count(nu)) continue;
      seen[nu] = word;
      frontier.push_back(nu);
    }
  }
  std::vector<WeylWord> out;
  for (const auto& [mu, word] : seen)
    if (is_min_double_coset_rep(wa, word, li, ri)) out.push_back(word);
  std::sort(out.begin(), out.end(), [](const WeylWord& a, const WeylWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace licci
