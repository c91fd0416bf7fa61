#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "avk/json_io.hpp"

using namespace avk;

namespace {

struct Output {
  bool json = false;
  Json doc = {{"schema", kSchema}};
  std::ostringstream table;
  bool ok = true;

  void fail(const std::string& what) {
    ok = false;
    table << "FAILED: " << what << "\n";
    doc["failures"].push_back(what);
  }
  int emit() {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << table.str();
    return ok ? 0 : 1;
  }
};

std::string triple(const InertiaTriple& t) {
  return "(" + std::to_string(t.plus) + "," + std::to_string(t.minus) + "," + std::to_string(t.zero) + ")";
}

void render_form(std::ostream& os, const std::string& title, const SquareForm& f) {
  os << title << " [" << f.dim() << "]\n";
  if (f.dim() == 0) return;
  std::vector<std::size_t> width(f.dim() + 1, 0);
  for (const auto& l : f.basis()) width[0] = std::max(width[0], l.size());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    width[j + 1] = f.basis()[j].size();
    for (std::size_t i = 0; i < f.dim(); ++i) width[j + 1] = std::max(width[j + 1], to_string(f.gram()(i, j)).size());
  }
  auto cell = [&](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  os << "  " << std::string(width[0], ' ');
  for (std::size_t j = 0; j < f.dim(); ++j) os << "  " << cell(f.basis()[j], width[j + 1]);
  os << "\n";
  for (std::size_t i = 0; i < f.dim(); ++i) {
    os << "  " << cell(f.basis()[i], width[0]);
    for (std::size_t j = 0; j < f.dim(); ++j) os << "  " << cell(to_string(f.gram()(i, j)), width[j + 1]);
    os << "\n";
  }
}

void render_report(std::ostream& os, const BoundsReport& r) {
  os << "== " << r.family << "\n";
  for (const auto& row : r.rows) {
    os << "  " << row.id << ": " << row.statement << "\n    rhs " << to_string(row.rhs);
    if (row.lhs) os << "  lhs " << to_string(*row.lhs) << "  slack " << to_string(*row.slack());
    os << "  [" << row.verdict() << "]\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

void cmd_form_inertia(Output& out, const std::string& input) {
  const Json j = read_json_file(input);
  check_schema(j, input);
  const auto f = form_from_json(j.contains("form") ? j["form"] : j);
  const auto t = inertia(f);
  out.doc["dim"] = f.dim();
  out.doc["inertia"] = inertia_to_json(t);
  out.table << triple(t) << "\n";
}

void cmd_singularity(Output& out, const std::string& diagram_path, const std::string& name) {
  if (diagram_path.empty() == name.empty()) throw InputError("give exactly one of --diagram and --catalog");
  AGDiagram d;
  std::optional<SingularityDescriptor> desc;
  if (!name.empty()) {
    desc = catalog(name);
    d = desc->diagram;
  } else {
    const Json j = read_json_file(diagram_path);
    check_schema(j, diagram_path);
    d = diagram_from_json(j.contains("diagram") ? j["diagram"] : j);
  }
  const auto counts = diagram_counts(d);
  const auto r = boundary_residue(d);
  out.doc["mu"] = counts.mu;
  out.doc["q"] = form_to_json(r.q);
  out.doc["q_plus"] = form_to_json(r.q_plus);
  out.doc["q_minus"] = form_to_json(r.q_minus);
  out.table << "mu = " << counts.mu << "\n";
  render_form(out.table, "q", r.q);
  render_form(out.table, "q+", r.q_plus);
  render_form(out.table, "q-", r.q_minus);
  if (!counts.disc_ok) out.fail("Euler characteristics of the diagram do not fill the Milnor disc");
  if (desc) {
    const bool match = signed_perm_congruent(r.q_plus, desc->expected_m).has_value();
    out.doc["expected"] = form_to_json(desc->expected_m);
    out.doc["matches_expected"] = match;
    out.table << "expected residue " << (match ? "matches" : "DIFFERS") << "\n";
    if (!match) out.fail(name + ": positive residue differs from the tabulated matrix");
  }
}

void cmd_resolution(Output& out, const std::string& graph_path, const std::string& surface_path) {
  if (graph_path.empty() == surface_path.empty()) throw InputError("give exactly one of --graph and --surface");
  if (!graph_path.empty()) {
    const Json j = read_json_file(graph_path);
    check_schema(j, graph_path);
    const auto g = graph_from_json(j);
    const auto gram = g.gram();
    out.doc["gram"] = form_to_json(gram);
    render_form(out.table, "plumbing form", gram);
    if (j.contains("contract")) {
      Labels sub;
      for (const auto& x : j["contract"]) sub.push_back(x.get<std::string>());
      const auto c = contract(gram, sub);
      out.doc["contracted"] = form_to_json(c);
      render_form(out.table, "after contraction", c);
    }
    return;
  }
  const Json j = read_json_file(surface_path);
  check_schema(j, surface_path);
  const auto b = surface_data_from_json(j);
  const auto lambda = lambda_from_resolution(b);
  const auto q = residue_from_lambda(lambda);
  out.doc["lambda"] = form_to_json(lambda);
  out.doc["q"] = form_to_json(q);
  render_form(out.table, "lambda", lambda);
  render_form(out.table, "q", q);
}

void cmd_arrangement(Output& out, const std::string& input, const std::string& route, bool check_inertia) {
  const Json j = read_json_file(input);
  check_schema(j, input);
  const auto a = arrangement_from_json(j.contains("arrangement") ? j["arrangement"] : j);
  validate_generic(a);
  std::vector<PhiResult> results;
  if (route == "face" || route == "all") results.push_back(phi_face_route(a));
  if (route == "integral" || route == "all") results.push_back(phi_integral_route(a));
  if (route == "residue" || route == "all") results.push_back(phi_residue_route(a));
  out.doc["routes"] = Json::array();
  for (const auto& r : results) {
    out.doc["routes"].push_back(phi_to_json(r));
    render_form(out.table, "phi (" + r.route + " route)", r.form);
  }
  for (std::size_t i = 1; i < results.size(); ++i)
    if (!(results[i].form == results[0].form)) out.fail(results[i].route + " route disagrees with " + results[0].route + " route");
  if (results.size() > 1) out.table << "routes agree: " << (out.ok ? "yes" : "no") << "\n";
  if (!check_inertia) return;
  const auto cx = enumerate_cells(a);
  Json blocks = Json::array();
  for (int eps : {1, -1}) {
    const auto& block = eps > 0 ? results[0].plus : results[0].minus;
    const auto got = inertia(block);
    const long chi = chi_double_cover(cx, eps);
    const auto want = predict_arrangement_inertia(static_cast<long>(a.m()), chi);
    blocks.push_back({{"sign", eps > 0 ? "+" : "-"}, {"chi_double_cover", chi}, {"inertia", inertia_to_json(got)},
                      {"predicted", inertia_to_json(want)}});
    out.table << (eps > 0 ? "plus" : "minus") << " block: inertia " << triple(got) << ", predicted " << triple(want) << "\n";
    if (!(got == want)) out.fail(std::string(eps > 0 ? "plus" : "minus") + " block inertia differs from the prediction");
  }
  out.doc["inertia_check"] = blocks;
}

CurveModel load_model(const std::string& path) {
  const Json j = read_json_file(path);
  check_schema(j, path);
  return curve_model_from_json(j.contains("model") ? j["model"] : j);
}

void cmd_curve_phi(Output& out, const std::string& model_path, bool bar) {
  const auto m = load_model(model_path);
  const auto phi = assemble_phi(m);
  out.doc["phi"] = phi_to_json(phi);
  render_form(out.table, "phi", phi.form);
  const auto tp = inertia(phi.plus), tm = inertia(phi.minus);
  out.doc["inertia_plus"] = inertia_to_json(tp);
  out.doc["inertia_minus"] = inertia_to_json(tm);
  out.table << "plus block " << triple(tp) << ", minus block " << triple(tm) << "\n";
  if (bar) {
    const auto pb = assemble_phi_bar(m);
    out.doc["phi_bar"] = form_to_json(pb);
    render_form(out.table, "phi-bar", pb);
  }
}

void cmd_curve_sharpness(Output& out, const std::string& model_path, const std::string& inv_path) {
  const auto m = load_model(model_path);
  const Json j = read_json_file(inv_path);
  check_schema(j, inv_path);
  const auto ci = invariants_from_json(j);
  const long r = ci.values.get("r", "sharpness check").get_num().get_si();
  const auto rep = sharpness_check(m, r);
  Json blocks = Json::array();
  for (const auto& [sign, rank] : rep.radical_rank) {
    blocks.push_back({{"sign", sign > 0 ? "+" : "-"}, {"radical_rank", rank}});
    out.table << (sign > 0 ? "plus" : "minus") << " block radical rank " << rank << " (expected " << rep.expected << ")\n";
  }
  out.doc["radical"] = blocks;
  out.doc["expected"] = rep.expected;
  if (!rep.matches()) out.fail("radical rank differs from r - 1");

  Json rows = Json::array();
  for (const auto& row : milnor_pluecker_validate(ci)) {
    rows.push_back({{"id", row.id}, {"lhs", rational_to_json(row.lhs)}, {"rhs", rational_to_json(row.rhs)}, {"pass", row.pass()}});
    out.table << "  " << row.id << ": " << to_string(row.lhs) << " = " << to_string(row.rhs) << (row.pass() ? "" : "  [fails]") << "\n";
    if (!row.pass()) out.fail("relation " + row.id + " fails");
  }
  out.doc["relations"] = rows;

  const auto phi = assemble_phi(m);
  Json gaps = Json::array();
  for (int eps : {1, -1}) {
    const std::string sfx = eps > 0 ? "_plus" : "_minus";
    if (!ci.values.has("b1_int" + sfx) || !ci.values.has("chi_rx" + sfx)) continue;
    const auto g = gap_delta(ci, eps);
    const auto s = gap_from_inertia(ci, eps, inertia(eps > 0 ? phi.plus : phi.minus));
    gaps.push_back({{"sign", eps > 0 ? "+" : "-"}, {"gap", rational_to_json(g.delta)}, {"summed_slacks", rational_to_json(s)},
                    {"notes", g.notes}});
    out.table << (eps > 0 ? "plus" : "minus") << " side gap " << to_string(g.delta) << ", summed slacks " << to_string(s) << "\n";
    if (g.delta != s) out.fail("gap formula disagrees with the summed slacks on the " + std::string(eps > 0 ? "plus" : "minus") + " side");
  }
  out.doc["gaps"] = gaps;
}

void cmd_curve_pentic(Output& out) {
  const auto rep = pentic_line_analysis();
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    const std::string verdict = c.nullity() == 0 ? "excluded" : "consistent";
    cases.push_back({{"name", c.name}, {"plus", inertia_to_json(c.plus)}, {"minus", inertia_to_json(c.minus)}, {"verdict", verdict}});
    out.table << c.name << ": plus " << triple(c.plus) << ", minus " << triple(c.minus) << " -> " << verdict << "\n";
  }
  out.doc["cases"] = cases;
  out.doc["same_side_excluded"] = rep.same_side_excluded;
  out.doc["opposite_side_consistent"] = rep.opposite_consistent;
  out.table << "same side excluded: " << (rep.same_side_excluded ? "yes" : "no")
            << "; opposite side consistent: " << (rep.opposite_consistent ? "yes" : "no") << "\n";
  if (!rep.same_side_excluded || !rep.opposite_consistent) out.fail("pentic verdicts");
}

void cmd_bounds(Output& out, const std::string& inv_path, const std::string& which, const std::string& lhs_path,
                const std::string& block) {
  const Json j = read_json_file(inv_path);
  check_schema(j, inv_path);
  InvariantBundle iv = bundle_from_json(j);
  if (block == "plus" || block == "minus")
    for (const char* key : {"chi_rx"})
      if (!iv.has(key) && iv.has(std::string(key) + "_" + block)) iv.set(key, iv.get(std::string(key) + "_" + block, "--block"));
  if (!lhs_path.empty()) {
    const Json p = read_json_file(lhs_path);
    check_schema(p, lhs_path);
    SymmetricForm f;
    if (p.contains("basis"))
      f = form_from_json(p);
    else if (block == "plus" || block == "minus")
      f = form_from_json(p.contains("phi") ? p.at("phi").at(block) : p.at(block));
    else
      throw InputError("--block must be plus or minus when --lhs-from holds a partition form result");
    const auto t = inertia(f);
    iv.set("sigma_plus", t.plus);
    iv.set("sigma_minus", t.minus);
    iv.set("sigma_zero", t.zero);
  }
  std::vector<BoundsReport> reports;
  std::stringstream ss(which);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.rfind("arnold-viro:", 0) == 0)
      reports.push_back(arnold_viro_rhs(item.substr(12), iv));
    else if (item == "petrovskii")
      reports.push_back(petrovskii_general(iv));
    else if (item == "smith")
      reports.push_back(smith_rhs(iv));
    else if (item == "hodge")
      reports.push_back(hodge_identities(iv));
    else if (item == "cuspidal")
      reports.push_back(cuspidal_bounds(iv));
    else
      throw InputError("unknown bounds family '" + item + "'");
  }
  out.doc["reports"] = Json::array();
  for (const auto& r : reports) {
    out.doc["reports"].push_back(report_to_json(r));
    render_report(out.table, r);
    for (const auto& row : r.rows)
      if (row.verdict() == "violated") out.fail(r.family + ": " + row.id + " violated");
  }
}

void cmd_selftest_catalog(Output& out) {
  Json rows = Json::array();
  for (const auto& name : catalog_names()) {
    const auto d = catalog(name);
    const auto r = boundary_residue(d.diagram);
    const bool match = signed_perm_congruent(d.block_sign > 0 ? r.q_plus : r.q_minus, d.expected_m).has_value();
    rows.push_back({{"name", name}, {"match", match}});
    out.table << (match ? "PASS " : "FAIL ") << name << "\n";
    if (!match) out.fail(name + ": residue differs from the tabulated matrix");
  }
  out.doc["catalog"] = rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"avk: partition forms of real singular curves and line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow a subcommand
  std::string format;
  if (const char* env = std::getenv("AVK_OUTPUT")) format = env;
  app.add_option("--format", format, "json or table (default from AVK_OUTPUT, else table)");

  std::string input, diagram, name, graph, surface, route = "all", model, invariants, which, lhs_from, block;
  bool check_inertia = false, bar = false;

  auto* form = app.add_subcommand("form", "quadratic forms");
  auto* form_inertia = form->add_subcommand("inertia", "inertia of a symmetric form");
  form_inertia->add_option("--input", input, "form JSON")->required();
  form->require_subcommand(1);

  auto* sing = app.add_subcommand("singularity", "local residue forms");
  auto* sing_res = sing->add_subcommand("residue", "boundary residue of a morsification diagram");
  sing_res->add_option("--diagram", diagram, "diagram JSON");
  sing_res->add_option("--catalog", name, "catalog entry, e.g. A4-");
  sing->require_subcommand(1);

  auto* res = app.add_subcommand("resolution", "resolution-side forms");
  auto* res_lambda = res->add_subcommand("lambda", "plumbing form or the canonical form from resolution data");
  res_lambda->add_option("--graph", graph, "weighted graph JSON");
  res_lambda->add_option("--surface", surface, "boundary surface JSON");
  res->require_subcommand(1);

  auto* arr = app.add_subcommand("arrangement", "line arrangements");
  auto* arr_phi = arr->add_subcommand("phi", "partition form of a generic arrangement");
  arr_phi->add_option("--input", input, "arrangement JSON")->required();
  arr_phi->add_option("--route", route, "face, integral, residue or all")
      ->check(CLI::IsMember({"face", "integral", "residue", "all"}));
  arr_phi->add_flag("--check-inertia", check_inertia, "compare block inertia with the prediction for generic lines");
  arr->require_subcommand(1);

  auto* curve = app.add_subcommand("curve", "curve models");
  auto* curve_phi = curve->add_subcommand("phi", "assemble the partition form of a curve model");
  curve_phi->add_option("--model", model, "curve model JSON")->required();
  curve_phi->add_flag("--bar", bar, "also assemble the form on positive regions from the q-bar residues");
  auto* curve_sharp = curve->add_subcommand("sharpness", "radical rank, gap and Milnor-Pluecker checks");
  curve_sharp->add_option("--model", model, "curve model JSON")->required();
  curve_sharp->add_option("--invariants", invariants, "curve invariants JSON")->required();
  auto* curve_pentic = curve->add_subcommand("pentic-line", "placements of a three-cusped pentic and a line");
  curve->require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "evaluate inequality right-hand sides");
  bounds->add_option("--invariants", invariants, "invariant bundle JSON")->required();
  bounds->add_option("--which", which,
                     "comma list: arnold-viro:<variant>, petrovskii, smith, hodge, cuspidal")->required();
  bounds->add_option("--lhs-from", lhs_from, "form or partition form JSON whose inertia gives the left-hand sides");
  bounds->add_option("--block", block, "plus or minus block of a partition form result");

  auto* self = app.add_subcommand("selftest", "built-in golden comparisons");
  auto* self_catalog = self->add_subcommand("catalog", "boundary residues of every catalog germ");
  self->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  if (format.empty() || format == "table")
    out.json = false;
  else if (format == "json")
    out.json = true;
  else {
    std::cerr << "error: output format must be json or table\n";
    return 2;
  }

  try {
    if (*form_inertia)
      cmd_form_inertia(out, input);
    else if (*sing_res)
      cmd_singularity(out, diagram, name);
    else if (*res_lambda)
      cmd_resolution(out, graph, surface);
    else if (*arr_phi)
      cmd_arrangement(out, input, route, check_inertia);
    else if (*curve_phi)
      cmd_curve_phi(out, model, bar);
    else if (*curve_sharp)
      cmd_curve_sharpness(out, model, invariants);
    else if (*curve_pentic)
      cmd_curve_pentic(out);
    else if (*bounds)
      cmd_bounds(out, invariants, which, lhs_from, block);
    else if (*self_catalog)
      cmd_selftest_catalog(out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.emit();
}
