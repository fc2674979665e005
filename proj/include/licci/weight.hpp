#pragma once
#include <string>
#include <vector>

#include "licci/diagram.hpp"
#include "licci/rational.hpp"

namespace licci {

// Integer vectors in the two standard bases.  Weight holds fundamental-weight
// coordinates, RootVector holds simple-root coordinates; both follow the
// diagram's vertex storage order.
using Weight = std::vector<Int>;
using RootVector = std::vector<Int>;

Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wneg(const Weight& a);
std::string wstr(const Weight& a);

// Per-diagram linear algebra on the weight lattice: simple reflections in both
// bases, base change, and the W-invariant pairing.  The Cartan inverse is
// computed once; operations needing it throw AffineTypeError when the form is
// singular.
class WeightAlgebra {
 public:
  explicit WeightAlgebra(const Diagram& d);

  int n() const { return n_; }
  const QMatrix& cartan() const { return cartan_; }
  bool invertible() const { return invertible_; }

  Weight fundamental(int i) const;
  Weight zero() const { return Weight(n_, 0); }
  Weight rho() const { return Weight(n_, 1); }

  // alpha_i expressed in fundamental-weight coordinates (row i of the Cartan
  // matrix).
  Weight simple_root(int i) const;

  Weight reflect(int i, const Weight& w) const;
  RootVector reflect_root(int i, const RootVector& c) const;

  std::vector<Rat> omega_to_alpha(const Weight& w) const;
  // Same, asserting the result lies in the root lattice.
  RootVector omega_to_alpha_int(const Weight& w) const;
  Weight alpha_to_omega(const RootVector& c) const;

  Rat pairing(const Weight& a, const Weight& b) const;

  bool is_dominant(const Weight& w) const;

 private:
  int n_;
  QMatrix cartan_;
  QMatrix cartan_inv_;
  bool invertible_;
};

}  // namespace licci
