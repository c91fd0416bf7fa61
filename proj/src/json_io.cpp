#include "avk/json_io.hpp"

#include <fstream>
#include <sstream>

namespace avk {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

std::vector<std::string> split(const std::string& key) {
  std::vector<std::string> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

const Json& field(const Json& j, const std::string& key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + ": missing field '" + key + "'");
  return *it;
}

std::string text(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string");
  return j.get<std::string>();
}

long integer(const Json& j, const std::string& what) {
  const Rational r = rational_from_json(j, what);
  if (!is_integer(r) || !r.get_num().fits_slong_p()) throw InputError(what + ": expected an integer");
  return r.get_num().get_si();
}

int sign_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+") return 1;
    if (s == "-") return -1;
  } else if (j.is_number_integer()) {
    const auto v = j.get<long>();
    if (v == 1 || v == -1) return static_cast<int>(v);
  }
  throw InputError(what + ": sign must be \"+\" or \"-\"");
}

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

std::map<std::string, std::string> string_map(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected an object");
  std::map<std::string, std::string> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = text(it.value(), what + "." + it.key());
  return m;
}

std::map<std::string, int> side_map(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected an object");
  std::map<std::string, int> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = sign_from_json(it.value(), what + "." + it.key());
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json regions_to_json(const std::vector<Region>& rs) {
  Json a = Json::array();
  for (const auto& r : rs)
    a.push_back({{"label", r.label}, {"sign", sign_text(r.sign)}, {"chi_minus_RS", rational_to_json(r.chi_minus_rs)}});
  return a;
}

std::vector<Region> regions_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  std::vector<Region> out;
  for (const auto& r : j)
    out.push_back({text(field(r, "label", what), what + ".label"), sign_from_json(field(r, "sign", what), what + ".sign"),
                   rational_from_json(field(r, "chi_minus_RS", what), what + ".chi_minus_RS")});
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void check_schema(const Json& j, const std::string& what) {
  if (!j.is_object()) return;
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema))
    throw InputError(what + ": unsupported schema " + it->dump() + ", expected \"" + kSchema + "\"");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  throw InputError(what + ": expected an integer or a \"p/q\" string");
}

Json form_to_json(const SquareForm& f) { return {{"basis", f.basis()}, {"gram", matrix_to_json(f.gram())}}; }

SymmetricForm form_from_json(const Json& j) {
  const std::string what = "form";
  const auto& b = field(j, "basis", what);
  const auto& g = field(j, "gram", what);
  if (!b.is_array() || !g.is_array()) throw InputError("form: basis and gram must be arrays");
  Labels labels;
  for (const auto& x : b) labels.push_back(text(x, "form.basis"));
  if (g.size() != labels.size()) throw InputError("form: gram needs one row per basis label");
  Matrix m(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!g[i].is_array() || g[i].size() != labels.size()) throw InputError("form: gram row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < labels.size(); ++k) m(i, k) = rational_from_json(g[i][k], "form.gram");
  }
  return SymmetricForm(labels, m);
}

Json inertia_to_json(const InertiaTriple& t) { return {{"plus", t.plus}, {"minus", t.minus}, {"zero", t.zero}}; }

Json diagram_to_json(const AGDiagram& d) {
  Json saddles = Json::object(), same = Json::object();
  for (const auto& [k, n] : d.saddles) saddles[k.first + "," + k.second] = n;
  for (const auto& [k, n] : d.same_sign_boundary) same[k] = n;
  return {{"rho", d.rho},
          {"inner", regions_to_json(d.inner)},
          {"outer", regions_to_json(d.outer)},
          {"saddles", saddles},
          {"same_sign_boundary", same}};
}

AGDiagram diagram_from_json(const Json& j) {
  AGDiagram d;
  d.rho = integer(field(j, "rho", "diagram"), "diagram.rho");
  d.inner = regions_from_json(field(j, "inner", "diagram"), "diagram.inner");
  d.outer = regions_from_json(field(j, "outer", "diagram"), "diagram.outer");
  if (j.contains("saddles"))
    for (auto it = j["saddles"].begin(); it != j["saddles"].end(); ++it) {
      const auto ends = split(it.key());
      if (ends.size() != 2) throw InputError("diagram.saddles: key '" + it.key() + "' must name two regions");
      d.set_saddles(ends[0], ends[1], integer(it.value(), "diagram.saddles"));
    }
  if (j.contains("same_sign_boundary"))
    for (auto it = j["same_sign_boundary"].begin(); it != j["same_sign_boundary"].end(); ++it)
      d.same_sign_boundary[it.key()] = integer(it.value(), "diagram.same_sign_boundary");
  validate(d);
  return d;
}

Json sectors_to_json(const SectorSystem& s) {
  Json sec = Json::array(), pairs = Json::object();
  for (const auto& x : s.sectors) sec.push_back({{"label", x.label}, {"sign", sign_text(x.sign)}, {"chi", rational_to_json(x.chi)}});
  for (const auto& [k, v] : s.chi_pair) pairs[k.first + "," + k.second] = rational_to_json(v);
  return {{"d", s.ambient_d}, {"sectors", sec}, {"chi_pair", pairs}};
}

SectorSystem sectors_from_json(const Json& j) {
  SectorSystem s;
  s.ambient_d = static_cast<int>(integer(field(j, "d", "sectors"), "sectors.d"));
  for (const auto& x : field(j, "sectors", "sectors"))
    s.sectors.push_back({text(field(x, "label", "sector"), "sector.label"), sign_from_json(field(x, "sign", "sector"), "sector.sign"),
                         rational_from_json(field(x, "chi", "sector"), "sector.chi")});
  if (j.contains("chi_pair"))
    for (auto it = j["chi_pair"].begin(); it != j["chi_pair"].end(); ++it) {
      const auto ends = split(it.key());
      if (ends.size() != 2) throw InputError("chi_pair: key '" + it.key() + "' must name two sectors");
      s.chi_pair[{ends[0], ends[1]}] = rational_from_json(it.value(), "chi_pair");
    }
  return s;
}

Json complex_to_json(const SimplicialComplex& k, const ConstructibleFunction& f) {
  Json simplices = Json::array(), values = Json::object();
  for (const auto& s : k.simplices()) simplices.push_back(s);
  for (const auto& [s, v] : f) values[join(s)] = rational_to_json(v);
  return {{"simplices", simplices}, {"values", values}};
}

std::pair<SimplicialComplex, ConstructibleFunction> complex_from_json(const Json& j) {
  std::vector<Simplex> simplices;
  for (const auto& s : field(j, "simplices", "complex")) {
    std::vector<std::string> v;
    for (const auto& x : s) v.push_back(text(x, "complex.simplices"));
    simplices.push_back(make_simplex(v));
  }
  auto k = SimplicialComplex::from_simplices(simplices);
  ConstructibleFunction f;
  if (j.contains("values"))
    for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
      const Simplex s = make_simplex(split(it.key()));
      if (!k.contains(s)) throw InputError("complex.values: '" + it.key() + "' is not a simplex");
      f[s] = rational_from_json(it.value(), "complex.values");
    }
  return {k, f};
}

Json graph_to_json(const WeightedGraph& g) {
  Json v = Json::array(), e = Json::array();
  for (const auto& x : g.vertices) v.push_back({{"label", x.label}, {"weight", rational_to_json(x.weight)}, {"real", x.real}});
  for (const auto& x : g.edges) e.push_back({{"a", x.a}, {"b", x.b}, {"number", rational_to_json(x.number)}});
  return {{"vertices", v}, {"edges", e}};
}

WeightedGraph graph_from_json(const Json& j) {
  WeightedGraph g;
  for (const auto& x : field(j, "vertices", "graph"))
    g.vertices.push_back({text(field(x, "label", "vertex"), "vertex.label"),
                          rational_from_json(field(x, "weight", "vertex"), "vertex.weight"), x.value("real", true)});
  if (j.contains("edges"))
    for (const auto& x : j["edges"])
      g.edges.push_back({text(field(x, "a", "edge"), "edge.a"), text(field(x, "b", "edge"), "edge.b"),
                         x.contains("number") ? rational_from_json(x["number"], "edge.number") : Rational(1)});
  return g;
}

Json surface_data_to_json(const BoundarySurfaceData& b) {
  Json p = Json::array(), w = Json::array();
  for (const auto& x : b.pieces) p.push_back({{"label", x.label}, {"chi", rational_to_json(x.chi)}});
  for (const auto& x : b.walls)
    w.push_back({{"alpha", rational_to_json(x.alpha)}, {"epsilon", x.epsilon}, {"left", x.left}, {"right", x.right}});
  return {{"pieces", p}, {"walls", w}};
}

BoundarySurfaceData surface_data_from_json(const Json& j) {
  BoundarySurfaceData b;
  for (const auto& x : field(j, "pieces", "surface data"))
    b.pieces.push_back({text(field(x, "label", "piece"), "piece.label"), rational_from_json(field(x, "chi", "piece"), "piece.chi")});
  for (const auto& x : field(j, "walls", "surface data")) {
    Wall w;
    w.alpha = rational_from_json(field(x, "alpha", "wall"), "wall.alpha");
    w.epsilon = sign_from_json(field(x, "epsilon", "wall"), "wall.epsilon");
    w.left = text(field(x, "left", "wall"), "wall.left");
    w.right = x.contains("right") ? text(x["right"], "wall.right") : w.left;
    b.walls.push_back(w);
  }
  validate(b);
  return b;
}

Json arrangement_to_json(const Arrangement& a) {
  Json h = Json::array();
  for (const auto& row : a.hyperplanes) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(is_integer(x) ? Json(x.get_num().get_si()) : rational_to_json(x));
    h.push_back(r);
  }
  return {{"d", a.d}, {"hyperplanes", h}};
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement a;
  a.d = static_cast<int>(integer(field(j, "d", "arrangement"), "arrangement.d"));
  const auto& h = field(j, "hyperplanes", "arrangement");
  if (!h.is_array()) throw InputError("arrangement.hyperplanes: expected an array");
  for (const auto& row : h) {
    if (!row.is_array()) throw InputError("arrangement.hyperplanes: each hyperplane is an array of coefficients");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x, "arrangement.hyperplanes"));
    a.hyperplanes.push_back(r);
  }
  return a;
}

Json phi_to_json(const PhiResult& p) {
  Json j = {{"route", p.route}, {"form", form_to_json(p.form)}, {"signs", p.signs}};
  j["plus"] = form_to_json(p.plus);
  j["minus"] = form_to_json(p.minus);
  j["omega"] = p.omega ? Json(*p.omega) : Json(nullptr);
  return j;
}

Json curve_model_to_json(const CurveModel& m) {
  Json regions = Json::array(), points = Json::array();
  for (const auto& r : m.regions)
    regions.push_back({{"label", r.label}, {"sign", sign_text(r.sign)}, {"chi_c", rational_to_json(r.chi_c_open)},
                       {"omega_nonzero", r.omega_nonzero}});
  for (const auto& p : m.points) {
    Json x = {{"point", p.point}};
    if (!p.source.empty()) x["catalog"] = p.source;
    x["kind"] = p.kind == ResidueKind::Q ? "q" : "q-bar";
    x["residue"] = form_to_json(p.residue);
    Json signs = Json::object();
    for (const auto& [s, v] : p.sector_sign) signs[s] = sign_text(v);
    x["sector_signs"] = signs;
    x["sectors"] = p.sector_to_region;
    if (!p.side.empty()) {
      Json side = Json::object();
      for (const auto& [s, v] : p.side) side[s] = sign_text(v);
      x["side"] = side;
    }
    points.push_back(x);
  }
  Json j = {{"k", m.k}, {"omega_empty", m.omega_empty}, {"regions", regions}, {"points", points}};
  if (m.chi_curve) j["chi_curve"] = rational_to_json(*m.chi_curve);
  return j;
}

/* A point either names a catalog germ ("catalog" plus "sectors") or carries
   an explicit "residue" with "sector_signs". */
CurveModel curve_model_from_json(const Json& j) {
  CurveModel m;
  m.k = integer(field(j, "k", "curve model"), "curve model.k");
  m.omega_empty = j.value("omega_empty", true);
  for (const auto& r : field(j, "regions", "curve model"))
    m.regions.push_back({text(field(r, "label", "region"), "region.label"), sign_from_json(field(r, "sign", "region"), "region.sign"),
                         rational_from_json(field(r, "chi_c", "region"), "region.chi_c"), r.value("omega_nonzero", false)});
  if (j.contains("chi_curve")) m.chi_curve = rational_from_json(j["chi_curve"], "curve model.chi_curve");
  if (j.contains("points"))
    for (const auto& p : j["points"]) {
      const std::string name = text(field(p, "point", "point"), "point.point");
      const std::string what = "point '" + name + "'";
      const auto sectors = string_map(field(p, "sectors", what), what + ".sectors");
      const auto side = p.contains("side") ? side_map(p["side"], what + ".side") : std::map<std::string, int>{};
      if (p.contains("residue")) {
        SingularPointBinding b;
        b.point = name;
        b.source = p.value("catalog", "");
        const std::string kind = p.value("kind", "q");
        if (kind != "q" && kind != "q-bar") throw InputError(what + ": kind is \"q\" or \"q-bar\"");
        b.kind = kind == "q" ? ResidueKind::Q : ResidueKind::QBar;
        b.residue = form_from_json(p["residue"]);
        b.sector_sign = side_map(field(p, "sector_signs", what), what + ".sector_signs");
        b.sector_to_region = sectors;
        b.side = side;
        m.points.push_back(std::move(b));
      } else {
        m.points.push_back(bind_catalog(name, text(field(p, "catalog", what), what + ".catalog"), sectors, side));
      }
    }
  validate(m);
  return m;
}

Json bundle_to_json(const InvariantBundle& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b.values()) j[k] = rational_to_json(v);
  for (const auto& [k, t] : b.tables()) {
    Json a = Json::array();
    for (const auto& x : t) a.push_back(rational_to_json(x));
    j[k] = a;
  }
  return j;
}

InvariantBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("invariants: expected an object");
  InvariantBundle b;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema" || it.key() == "points") continue;
    if (it.value().is_array()) {
      std::vector<Rational> t;
      for (const auto& x : it.value()) t.push_back(rational_from_json(x, "invariants." + it.key()));
      b.set_table(it.key(), t);
    } else {
      b.set(it.key(), rational_from_json(it.value(), "invariants." + it.key()));
    }
  }
  return b;
}

Json invariants_to_json(const CurveInvariants& ci) {
  Json j = bundle_to_json(ci.values);
  Json pts = Json::array();
  for (const auto& p : ci.points)
    pts.push_back({{"label", p.label}, {"mu", p.mu}, {"r", p.r}, {"rho", p.rho}, {"delta", p.delta}, {"real", p.real}});
  j["points"] = pts;
  return j;
}

CurveInvariants invariants_from_json(const Json& j) {
  CurveInvariants ci;
  ci.values = bundle_from_json(j);
  if (j.contains("points"))
    for (const auto& p : j["points"]) {
      SingularityData d;
      d.label = p.value("label", "");
      const std::string what = "singular point '" + d.label + "'";
      d.mu = integer(field(p, "mu", what), what + ".mu");
      d.r = integer(field(p, "r", what), what + ".r");
      d.rho = integer(field(p, "rho", what), what + ".rho");
      d.delta = integer(field(p, "delta", what), what + ".delta");
      d.real = p.value("real", true);
      ci.points.push_back(d);
    }
  return ci;
}

Json report_to_json(const BoundsReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x = {{"id", row.id}, {"statement", row.statement}};
    x["lhs"] = row.lhs ? rational_to_json(*row.lhs) : Json(nullptr);
    x["rhs"] = rational_to_json(row.rhs);
    const auto s = row.slack();
    x["slack"] = s ? rational_to_json(*s) : Json(nullptr);
    x["verdict"] = row.verdict();
    rows.push_back(x);
  }
  return {{"family", r.family}, {"rows", rows}, {"notes", r.notes}};
}

}  // namespace avk
