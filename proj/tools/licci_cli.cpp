#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "licci/diagram.hpp"
#include "licci/errors.hpp"
#include "licci/grading.hpp"
#include "licci/linkage.hpp"
#include "licci/poly.hpp"
#include "licci/rep.hpp"
#include "licci/resolution.hpp"
#include "licci/serialize.hpp"
#include "licci/weight.hpp"
#include "licci/weyl.hpp"

namespace {

using namespace licci;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

Format parse_format(const std::string& s) {
  std::vector<int> v;
  try {
    v = parse_int_list(s);
  } catch (const std::exception&) {
    throw UsageError("--format expects four comma-separated integers");
  }
  if (v.size() != 4) throw UsageError("--format expects four comma-separated integers");
  return Format{v[0], v[1], v[2], v[3]};
}

// "bourbaki:1=z2,2=x1,..." -> numeral-to-vertex-name map.
std::map<std::string, std::string> parse_labels(const std::string& s) {
  const std::string prefix = "bourbaki:";
  if (s.rfind(prefix, 0) != 0) throw UsageError("--labels expects bourbaki:<n>=<vertex>,...");
  std::map<std::string, std::string> out;
  std::string body = s.substr(prefix.size()), item;
  std::stringstream ss(body);
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("--labels expects bourbaki:<n>=<vertex>,...");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  if (out.empty()) throw UsageError("--labels expects bourbaki:<n>=<vertex>,...");
  return out;
}

WeylWord parse_sigma(const Diagram& d, const std::string& sigma, const std::string& labels) {
  if (labels.empty()) return parse_word(d, sigma);
  std::map<std::string, std::string> names = parse_labels(labels);
  std::string translated, tok;
  std::stringstream ss(sigma);
  while (ss >> tok) {
    while (!tok.empty() && tok.back() == ',') tok.pop_back();
    if (tok.empty()) continue;
    auto it = names.find(tok);
    if (it == names.end()) throw UsageError("sigma letter '" + tok + "' missing from --labels map");
    if (!translated.empty()) translated += ' ';
    translated += it->second;
  }
  return parse_word(d, translated);
}

// Storage indices in display order: Bourbaki numerals ascending when a label
// map is given, storage order otherwise.
std::vector<int> display_order(const Diagram& d, const std::string& labels) {
  std::vector<int> order;
  if (labels.empty()) {
    for (int i = 0; i < d.size(); i++) order.push_back(i);
    return order;
  }
  std::map<std::string, std::string> names = parse_labels(labels);
  std::map<int, std::string> by_number;
  for (const auto& [num, name] : names) by_number[std::stoi(num)] = name;
  for (const auto& [num, name] : by_number) order.push_back(d.index_of(name));
  return order;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GradedComplex load_complex(const std::string& file, const std::string& format_str,
                           const std::string& sigma, const std::string& labels) {
  if (!file.empty()) return complex_from_json_file(file);
  if (format_str.empty() || sigma.empty())
    throw UsageError("provide a complex JSON file or both --format and --sigma");
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  return build_resolution(d, f, parse_sigma(d, sigma, labels));
}

std::string diagram_headline(const Diagram& d) {
  std::ostringstream os;
  std::string shape =
      "T_{" + std::to_string(d.p()) + "," + std::to_string(d.q()) + "," + std::to_string(d.r()) + "}";
  std::string type = d.type_name();
  os << shape;
  if (type.rfind("T(", 0) != 0) os << " = " << type;
  switch (d.kind()) {
    case DiagramKind::Finite: os << ", finite"; break;
    case DiagramKind::Affine: os << ", affine"; break;
    case DiagramKind::Indefinite: os << ", indefinite"; break;
  }
  return os.str();
}

int run_diagram(const std::string& format_str, bool json) {
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  if (json) {
    Json j;
    j["format"] = {f.f0, f.f1, f.f2, f.f3};
    j["p"] = d.p();
    j["q"] = d.q();
    j["r"] = d.r();
    j["type"] = d.type_name();
    j["kind"] = d.kind() == DiagramKind::Finite   ? "finite"
                : d.kind() == DiagramKind::Affine ? "affine"
                                                  : "indefinite";
    j["cartan_det"] = d.cartan_det().get_str();
    j["vertices"] = d.vertex_names();
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << "format " << f.to_string() << " -> " << diagram_headline(d) << "\n";
  std::cout << "vertices:";
  for (const auto& n : d.vertex_names()) std::cout << " " << n;
  std::cout << "\ncartan determinant: " << d.cartan_det().get_str() << "\n";
  if (d.kind() != DiagramKind::Finite) {
    std::cout << "not finite type: resolutions and uncapped coset enumeration are unavailable;"
              << " enlarge an arm to reach a finite diagram or cap searches with --max-length\n";
  }
  return 0;
}

int run_cosets(const std::string& format_str, int max_length, bool json) {
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  WeightAlgebra wa(d);
  std::vector<WeylWord> words = enumerate_double_cosets(d, wa, max_length);
  if (json) {
    Json j;
    j["format"] = {f.f0, f.f1, f.f2, f.f3};
    j["diagram"] = diagram_headline(d);
    j["count"] = words.size();
    j["words"] = Json::array();
    for (const auto& w : words)
      j["words"].push_back({{"length", w.size()}, {"word", word_to_string(d, w)}});
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << diagram_headline(d) << ": " << words.size()
            << " minimal double coset representatives";
  if (max_length >= 0) std::cout << " up to length " << max_length;
  std::cout << "\n";
  for (const auto& w : words)
    std::cout << "l=" << w.size() << "  " << word_to_string(d, w) << "\n";
  return 0;
}

int run_betti(const std::string& format_str, const std::string& sigma, const std::string& labels,
              bool exchange, bool json, const std::string& out) {
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  WeightAlgebra wa(d);
  WeylWord word = parse_sigma(d, sigma, labels);
  BettiTable table = resolution_grading(d, f, wa, word);
  int coarse = d.index_of("z1");
  if (exchange) {
    table = exchange_grading(table, wa, word);
    coarse = d.index_of("x1");
  }
  std::ostringstream os;
  if (json) {
    Json j = betti_to_json(table, coarse);
    j["format"] = {f.f0, f.f1, f.f2, f.f3};
    j["sigma"] = word_to_string(d, word);
    j["exchanged"] = exchange;
    j["coarse_table"] = coarse_table_text(table, coarse);
    os << json_dump(j);
  } else {
    os << diagram_headline(d) << ", sigma = " << word_to_string(d, word)
       << (exchange ? " (exchanged dual)" : "") << "\n";
    os << betti_text(d, table, display_order(d, labels), coarse);
    os << "coarse: " << coarse_table_text(table, coarse) << "\n";
  }
  emit(out, os.str());
  return 0;
}

int run_resolve(const std::string& format_str, const std::string& sigma, const std::string& labels,
                const std::string& out) {
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  GradedComplex c = build_resolution(d, f, parse_sigma(d, sigma, labels));
  if (out.empty()) {
    std::cout << json_dump(complex_to_json(c));
    return 0;
  }
  complex_to_json_file(c, out);
  std::cout << "wrote " << out << ": format " << f.to_string() << ", "
            << c.ring.nvars() << " variables, sigma = " << word_to_string(d, c.sigma) << "\n";
  return 0;
}

int run_check(const std::string& file, std::uint64_t seed) {
  std::string raw = read_file_bytes(file);
  GradedComplex c = complex_from_json_file(file);
  CheckReport report = check_complex(c, seed);
  bool identical = json_dump(complex_to_json(c)) == raw;
  std::cout << report.to_string();
  std::cout << "serialization: " << (identical ? "byte-identical round trip" : "round trip DIFFERS")
            << "\n";
  return (report.ok() && identical) ? 0 : 1;
}

int run_pluecker(const std::string& file, const std::string& format_str, const std::string& sigma,
                 const std::string& labels, bool json) {
  GradedComplex c = load_complex(file, format_str, sigma, labels);
  std::vector<PluckerCoordinate> pcs = plucker_coordinates(c);
  if (json) {
    Json j = Json::array();
    for (const auto& pc : pcs) {
      j.push_back({{"slot", pc.slot},
                   {"weight", weight_to_json(pc.weight)},
                   {"degree", weight_to_json(pc.degree)},
                   {"extremal", pc.extremal},
                   {"p", poly_to_json(pc.p)}});
    }
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << pcs.size() << " plucker coordinates\n";
  for (const auto& pc : pcs) {
    std::cout << "[" << pc.slot << "] weight " << wstr(pc.weight) << " degree " << wstr(pc.degree)
              << (pc.extremal ? " extremal" : "") << "  p = " << poly_to_string(c.ring, pc.p)
              << "\n";
  }
  return 0;
}

std::string subset_text(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); i++) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

int run_bemult(const std::string& file, const std::string& format_str, const std::string& sigma,
               const std::string& labels, bool json) {
  GradedComplex c = load_complex(file, format_str, sigma, labels);
  BEMultipliers be = be_multipliers(c);
  if (json) {
    Json j;
    j["a1"] = poly_to_json(be.a1);
    j["a2"] = Json::array();
    for (size_t i = 0; i < be.a2.size(); i++)
      j["a2"].push_back({{"rows", be.idx2[i]}, {"value", poly_to_json(be.a2[i])}});
    j["a3"] = Json::array();
    for (size_t i = 0; i < be.a3.size(); i++)
      j["a3"].push_back({{"rows", be.idx3[i]}, {"value", poly_to_json(be.a3[i])}});
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << "a1 = " << poly_to_string(c.ring, be.a1) << "\n";
  std::cout << "a2 (by F1 slot subset):\n";
  for (size_t i = 0; i < be.a2.size(); i++)
    std::cout << "  " << subset_text(be.idx2[i]) << " : " << poly_to_string(c.ring, be.a2[i])
              << "\n";
  std::cout << "a3 (by F2 slot subset):\n";
  for (size_t i = 0; i < be.a3.size(); i++)
    std::cout << "  " << subset_text(be.idx3[i]) << " : " << poly_to_string(c.ring, be.a3[i])
              << "\n";
  return 0;
}

int run_hsm(const std::string& file, const std::string& format_str, const std::string& sigma,
            const std::string& labels, bool text, const std::string& out) {
  GradedComplex c = load_complex(file, format_str, sigma, labels);
  StructureMaps maps = structure_maps(c);
  std::ostringstream os;
  if (text) {
    os << "a1 = " << poly_to_string(c.ring, maps.a1) << "\n";
    os << "w31 (" << maps.w31.rows() << "x" << maps.w31.cols() << "), column = F1 wedge pair:\n";
    for (int t = 0; t < maps.w31.cols(); t++) {
      os << "  " << subset_text(maps.pairs[t]) << ":";
      for (int g = 0; g < maps.w31.rows(); g++)
        os << " [" << g << "] " << poly_to_string(c.ring, maps.w31.at(g, t));
      os << "\n";
    }
    os << "w21 (" << maps.w21.rows() << "x" << maps.w21.cols()
       << "), column = (F1 slot e, F2 slot g):\n";
    int f2 = c.format.f2;
    for (int col = 0; col < maps.w21.cols(); col++) {
      os << "  (" << col / f2 << "," << col % f2 << "):";
      for (int k = 0; k < maps.w21.rows(); k++)
        os << " [" << k << "] " << poly_to_string(c.ring, maps.w21.at(k, col));
      os << "\n";
    }
  } else {
    Json j;
    j["format"] = {c.format.f0, c.format.f1, c.format.f2, c.format.f3};
    j["pairs"] = maps.pairs;
    j["a1"] = poly_to_json(maps.a1);
    j["w31"] = polymatrix_to_json(maps.w31);
    j["w21"] = polymatrix_to_json(maps.w21);
    os << json_dump(j);
  }
  emit(out, os.str());
  return 0;
}

int run_link(const std::string& file, const std::string& format_str, const std::string& sigma,
             const std::string& labels, const std::string& cols_str, std::uint64_t seed,
             const std::string& out) {
  GradedComplex c = load_complex(file, format_str, sigma, labels);
  std::vector<int> cols;
  try {
    cols = parse_int_list(cols_str);
  } catch (const std::exception&) {
    throw UsageError("--cols expects three comma-separated column indices");
  }
  LinkResult res = link(c, cols, seed);
  if (out.empty()) {
    std::cerr << "evidence: " << res.evidence << "\n";
    std::cout << json_dump(complex_to_json(res.linked));
    return 0;
  }
  complex_to_json_file(res.linked, out);
  std::cout << "wrote " << out << ": linked format " << res.linked.format.to_string() << "\n";
  std::cout << "evidence: " << res.evidence << "\n";
  return 0;
}

int run_invariants(const std::string& file, const std::string& format_str, const std::string& sigma,
                   const std::string& labels, bool json) {
  GradedComplex c = load_complex(file, format_str, sigma, labels);
  StructureMaps maps = structure_maps(c);
  std::pair<int, int> deficits = rank_invariants(c, maps);
  const char* note = "degree <= 1 structure maps only; an under-approximation of the full ranks";
  if (json) {
    Json j;
    j["deficits"] = {deficits.first, deficits.second};
    j["note"] = note;
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << "rank deficits at the residue field: (" << deficits.first << ", " << deficits.second
            << ")\n";
  std::cout << "note: " << note << "\n";
  return 0;
}

int run_dims(const std::string& format_str, const std::string& weight_vertex, bool json) {
  Format f = parse_format(format_str);
  Diagram d = Diagram::from_format(f);
  WeightAlgebra wa(d);
  std::vector<int> zdims = z1_graded_dims(d);
  auto rep_dim = [&](const Weight& w) { return get_irrep(d, w).dim(); };
  Weight middle = f.r2() == 2 ? wa.fundamental(d.index_of("u"))
                              : wa.fundamental(d.index_of("y" + std::to_string(f.r2() - 2)));
  std::string xtop = "x" + std::to_string(f.r1());
  std::string ztop = "z" + std::to_string(f.r3());
  if (json) {
    Json j;
    j["diagram"] = diagram_headline(d);
    j["z1_graded_dims"] = zdims;
    j["rep_dims"] = {{"L(omega_" + xtop + ")", rep_dim(wa.fundamental(d.index_of(xtop)))},
                     {"middle", rep_dim(middle)},
                     {"L(omega_" + ztop + ")", rep_dim(wa.fundamental(d.index_of(ztop)))}};
    if (!weight_vertex.empty())
      j["L(omega_" + weight_vertex + ")"] = rep_dim(wa.fundamental(d.index_of(weight_vertex)));
    std::cout << json_dump(j);
    return 0;
  }
  std::cout << diagram_headline(d) << "\n";
  std::cout << "z1 graded dims:";
  int total = 0;
  for (int v : zdims) {
    std::cout << " " << v;
    total += v;
  }
  std::cout << " (total " << total << ")\n";
  std::cout << "dim L(omega_" << xtop << ") = " << rep_dim(wa.fundamental(d.index_of(xtop)))
            << "\n";
  std::cout << "dim middle rep = " << rep_dim(middle) << "\n";
  std::cout << "dim L(omega_" << ztop << ") = " << rep_dim(wa.fundamental(d.index_of(ztop)))
            << "\n";
  if (!weight_vertex.empty())
    std::cout << "dim L(omega_" << weight_vertex
              << ") = " << rep_dim(wa.fundamental(d.index_of(weight_vertex))) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("THREADS")) {
    char* end = nullptr;
    long v = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || v < 1) {
      std::cerr << "THREADS must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"exact graded length-three resolutions from Weyl group words"};
  app.require_subcommand(1);

  std::string format_str, sigma, labels, out, file, cols_str, weight_vertex;
  int max_length = -1;
  std::uint64_t seed = 1;
  bool json = false, text = false, exchange = false;

  auto add_io = [&](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--text", text, "human-readable output")->excludes(j);
  };
  auto add_build = [&](CLI::App* cmd, bool required) {
    auto* fo = cmd->add_option("--format", format_str, "f0,f1,f2,f3");
    auto* so = cmd->add_option("--sigma", sigma, "Weyl word (vertex names, or numerals with --labels)");
    cmd->add_option("--labels", labels, "bourbaki:<n>=<vertex>,... numeral map for --sigma");
    if (required) {
      fo->required();
      so->required();
    }
  };

  CLI::App* c_diagram = app.add_subcommand("diagram", "identify the T-shaped diagram of a format");
  c_diagram->add_option("--format", format_str, "f0,f1,f2,f3")->required();
  add_io(c_diagram);

  CLI::App* c_cosets = app.add_subcommand("cosets", "minimal double coset representatives");
  c_cosets->add_option("--format", format_str, "f0,f1,f2,f3")->required();
  c_cosets->add_option("--max-length", max_length, "cap on word length (-1 = all, finite type only)");
  add_io(c_cosets);

  CLI::App* c_betti = app.add_subcommand("betti", "generator multidegrees of the resolution");
  add_build(c_betti, true);
  c_betti->add_flag("--exchange", exchange, "display the exchanged dual grading");
  c_betti->add_option("--out", out, "write output to file");
  add_io(c_betti);

  CLI::App* c_resolve = app.add_subcommand("resolve", "build the resolution and serialize it");
  add_build(c_resolve, true);
  c_resolve->add_option("--out", out, "write complex JSON to file");

  CLI::App* c_check = app.add_subcommand("check", "verify a serialized complex");
  c_check->add_option("complex", file, "complex JSON file")->required();
  c_check->add_option("--seed", seed, "seed for rank probes");

  CLI::App* c_pluecker = app.add_subcommand("pluecker", "plucker coordinates of the cell");
  c_pluecker->add_option("complex", file, "complex JSON file");
  add_build(c_pluecker, false);
  add_io(c_pluecker);

  CLI::App* c_bemult = app.add_subcommand("bemult", "Buchsbaum-Eisenbud multipliers");
  c_bemult->add_option("complex", file, "complex JSON file");
  add_build(c_bemult, false);
  add_io(c_bemult);

  CLI::App* c_hsm = app.add_subcommand("hsm", "first-order structure map lifts w31, w21");
  c_hsm->add_option("complex", file, "complex JSON file");
  add_build(c_hsm, false);
  c_hsm->add_option("--out", out, "write output to file");
  add_io(c_hsm);

  CLI::App* c_link = app.add_subcommand("link", "mapping-cone linkage by three d1 columns");
  c_link->add_option("complex", file, "complex JSON file");
  add_build(c_link, false);
  c_link->add_option("--cols", cols_str, "three strictly increasing d1 column indices")->required();
  c_link->add_option("--seed", seed, "seed for the regular-sequence probe");
  c_link->add_option("--out", out, "write linked complex JSON to file");

  CLI::App* c_inv = app.add_subcommand("invariants", "residue-field rank deficits of w31/w21");
  c_inv->add_option("complex", file, "complex JSON file");
  add_build(c_inv, false);
  add_io(c_inv);

  CLI::App* c_dims = app.add_subcommand("dims", "dimensions of the governing representations");
  c_dims->add_option("--format", format_str, "f0,f1,f2,f3")->required();
  c_dims->add_option("--weight", weight_vertex, "also report dim L(omega_vertex)");
  add_io(c_dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_diagram) return run_diagram(format_str, json);
    if (*c_cosets) return run_cosets(format_str, max_length, json);
    if (*c_betti) return run_betti(format_str, sigma, labels, exchange, json, out);
    if (*c_resolve) return run_resolve(format_str, sigma, labels, out);
    if (*c_check) return run_check(file, seed);
    if (*c_pluecker) return run_pluecker(file, format_str, sigma, labels, json);
    if (*c_bemult) return run_bemult(file, format_str, sigma, labels, json);
    if (*c_hsm) return run_hsm(file, format_str, sigma, labels, text, out);
    if (*c_link) return run_link(file, format_str, sigma, labels, cols_str, seed, out);
    if (*c_inv) return run_invariants(file, format_str, sigma, labels, json);
    if (*c_dims) return run_dims(format_str, weight_vertex, json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
