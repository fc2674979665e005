#pragma once
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "licci/errors.hpp"
#include "licci/rational.hpp"

namespace licci {

// Resolution format (f0, f1, f2, f3) with f1 = f0 + r2, f2 = r2 + f3 for some
// r2 >= 1.  Encodes the arm lengths (r1, r2, r3) = (f0, f1 - f0, f3).
struct Format {
  int f0 = 0, f1 = 0, f2 = 0, f3 = 0;

  Format() = default;
  Format(int a, int b, int c, int d);
  static Format from_arms(int r1, int r2, int r3);

  int r1() const { return f0; }
  int r2() const { return f1 - f0; }
  int r3() const { return f3; }

  bool operator==(const Format& o) const {
    return f0 == o.f0 && f1 == o.f1 && f2 == o.f2 && f3 == o.f3;
  }
  std::string to_string() const;
};

enum class DiagramKind { Finite, Affine, Indefinite };

// T-shaped graph T_{p,q,r}: three arms of p-1, q-1, r-1 vertices glued to a
// central vertex u.  Vertices carry stable string names x1..x_{p-1},
// y1..y_{q-1}, z1..z_{r-1}, each arm indexed with 1 adjacent to u.  Storage
// order: x-arm ascending, u, y-arm ascending, z-arm ascending.
class Diagram {
 public:
  Diagram(int p, int q, int r);
  static Diagram from_format(const Format& f);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(names_.size()); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  int index_of(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }
  bool adjacent(int i, int j) const;

  // Symmetric generalized Cartan matrix: 2 on the diagonal, -1 on edges.
  QMatrix cartan() const;
  Int cartan_det() const;

  DiagramKind kind() const;
  // Human-readable type: A_n, D_n, E6, E7, E8 for finite; E6^(1), E7^(1),
  // E8^(1) for the affine shapes; T_{p,q,r} otherwise.
  std::string type_name() const;

 private:
  int p_, q_, r_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace licci
