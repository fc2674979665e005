#pragma once
#include <string>

#include "json.hpp"
#include "licci/poly.hpp"
#include "licci/rational.hpp"
#include "licci/rep.hpp"
#include "licci/weight.hpp"

namespace licci {

// Insertion-ordered JSON so that serialize / parse / serialize round trips
// byte-identically.
using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// Sparse triplet form; rationals as "p/q" strings.
Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json rep_to_json(const Rep& r);
Rep rep_from_json(const Json& j);
Rep rep_from_json_file(const std::string& path);
void rep_to_json_file(const Rep& r, const std::string& path);

// Term list [{"c": "p/q", "e": [exponents]}] in ascending monomial order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int nvars);

Json polymatrix_to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const Json& j);

Json polyring_to_json(const PolyRing& ring);
PolyRing polyring_from_json(const Json& j);

std::string json_dump(const Json& j);
Json json_read_file(const std::string& path);
void json_write_file(const std::string& path, const Json& j);

}  // namespace licci
