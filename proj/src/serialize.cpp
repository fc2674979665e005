#include "licci/serialize.hpp"

#include <fstream>

namespace licci {

Json weight_to_json(const Weight& w) {
  Json j = Json::array();
  for (const Int& v : w) j.push_back(v.get_si());
  return j;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& v : j) w.push_back(Int(v.get<long>()));
  return w;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); i++)
    for (int j = 0; j < m.cols(); j++)
      if (m.at(i, j) != 0) entries.push_back(Json::array({i, j, rat_to_string(m.at(i, j))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix qmatrix_from_json(const Json& j) {
  QMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.at(e.at(0).get<int>(), e.at(1).get<int>()) = rat_from_string(e.at(2).get<std::string>());
  return m;
}

Json rep_to_json(const Rep& r) {
  Json weights = Json::array();
  for (const Weight& w : r.weights) weights.push_back(weight_to_json(w));
  Json origin = Json::array();
  for (const auto& [v, p] : r.origin) origin.push_back(Json::array({v, p}));
  Json E = Json::array(), F = Json::array();
  for (const QMatrix& m : r.E) E.push_back(qmatrix_to_json(m));
  for (const QMatrix& m : r.F) F.push_back(qmatrix_to_json(m));
  return Json{{"highest", weight_to_json(r.highest)},
              {"weights", weights},
              {"origin", origin},
              {"E", E},
              {"F", F}};
}

Rep rep_from_json(const Json& j) {
  Rep r;
  r.highest = weight_from_json(j.at("highest"));
  for (const auto& w : j.at("weights")) r.weights.push_back(weight_from_json(w));
  for (const auto& o : j.at("origin")) r.origin.emplace_back(o.at(0).get<int>(), o.at(1).get<int>());
  for (const auto& m : j.at("E")) r.E.push_back(qmatrix_from_json(m));
  for (const auto& m : j.at("F")) r.F.push_back(qmatrix_from_json(m));
  return r;
}

Rep rep_from_json_file(const std::string& path) {
  return rep_from_json(json_read_file(path));
}

void rep_to_json_file(const Rep& r, const std::string& path) {
  json_write_file(path, rep_to_json(r));
}

Json poly_to_json(const MultiPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (int v : e) exps.push_back(v);
    j.push_back(Json{{"c", rat_to_string(c)}, {"e", exps}});
  }
  return j;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
  MultiPoly p = MultiPoly::zero(nvars);
  for (const auto& t : j) {
    Exponent e;
    for (const auto& v : t.at("e")) e.push_back(v.get<int>());
    p.add_term(e, rat_from_string(t.at("c").get<std::string>()));
  }
  return p;
}

Json polymatrix_to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); i++)
    for (int j = 0; j < m.cols(); j++)
      if (!m.at(i, j).is_zero()) entries.push_back(Json::array({i, j, poly_to_json(m.at(i, j))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"nvars", m.nvars()}, {"entries", entries}};
}

PolyMatrix polymatrix_from_json(const Json& j) {
  int nvars = j.at("nvars").get<int>();
  PolyMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), nvars);
  for (const auto& e : j.at("entries"))
    m.at(e.at(0).get<int>(), e.at(1).get<int>()) = poly_from_json(e.at(2), nvars);
  return m;
}

Json polyring_to_json(const PolyRing& ring) {
  Json vars = Json::array();
  for (int k = 0; k < ring.nvars(); k++) {
    Json deg = Json::array();
    for (const Int& v : ring.degrees[k]) deg.push_back(v.get_si());
    vars.push_back(Json{{"name", ring.names[k]}, {"degree", deg}});
  }
  return Json{{"vars", vars}, {"coarse", ring.coarse}};
}

PolyRing polyring_from_json(const Json& j) {
  PolyRing ring;
  for (const auto& v : j.at("vars")) {
    ring.names.push_back(v.at("name").get<std::string>());
    RootVector deg;
    for (const auto& c : v.at("degree")) deg.push_back(Int(c.get<long>()));
    ring.degrees.push_back(deg);
  }
  ring.coarse = j.at("coarse").get<int>();
  return ring;
}

std::string json_dump(const Json& j) {
  return j.dump(2) + "\n";
}

Json json_read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void json_write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << json_dump(j);
}

}  // namespace licci
