#include "avk/curves.hpp"

#include <algorithm>
#include <set>

#include "avk/localforms.hpp"
#include "avk/morsify.hpp"

namespace avk {

namespace {

using Q = Rational;

std::size_t region_index(const CurveModel& m, const std::string& label) {
  for (std::size_t i = 0; i < m.regions.size(); ++i)
    if (m.regions[i].label == label) return i;
  throw InputError("unknown region '" + label + "'");
}

// Positions of the regions that enter the forms, in model order.
std::vector<std::size_t> included(const CurveModel& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.regions.size(); ++i)
    if (!m.regions[i].omega_nonzero) idx.push_back(i);
  return idx;
}

Covector canon(Covector c) {
  Covector n(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) n[k] = -c[k];
  return std::max(c, n);
}

}  // namespace

void validate(const CurveModel& m) {
  if (m.k < 1) throw InputError("k must be at least 1");
  std::set<std::string> seen;
  for (const auto& r : m.regions) {
    if (!seen.insert(r.label).second) throw InputError("duplicate region '" + r.label + "'");
    if (r.sign != 1 && r.sign != -1) throw InputError("region '" + r.label + "' needs sign +1 or -1");
    if (r.omega_nonzero && m.k % 2) throw InputError("omega vanishes for odd k; region '" + r.label + "' cannot carry it");
  }
  if (m.k % 2 && !m.omega_empty) throw InputError("odd k: the Omega wall must be empty");
  for (const auto& p : m.points) {
    const std::string where = "point '" + p.point + "'";
    for (const auto& s : p.residue.basis()) {
      auto sg = p.sector_sign.find(s);
      if (sg == p.sector_sign.end()) throw InputError(where + ": no sign for sector '" + s + "'");
      auto rg = p.sector_to_region.find(s);
      if (rg == p.sector_to_region.end()) throw InputError(where + ": sector '" + s + "' is not mapped to a region");
      const auto& reg = m.regions[region_index(m, rg->second)];
      if (reg.sign != sg->second)
        throw InputError(where + ": sector/region sign mismatch, sector '" + s + "' in region '" + reg.label + "'");
      if (p.kind == ResidueKind::QBar && sg->second < 0) throw InputError(where + ": a q-bar residue lives on positive sectors");
    }
    if (p.sector_to_region.size() != p.residue.dim()) throw InputError(where + ": sector map names sectors outside the residue basis");
    const auto& b = p.residue.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (p.sector_sign.at(b[i]) != p.sector_sign.at(b[j]) && p.residue.gram()(i, j) != 0)
          throw InputError(where + ": residue couples sectors of opposite sign");
    if (!p.side.empty()) {
      if (m.omega_empty) throw InputError(where + ": side bits given but the Omega wall is empty");
      for (const auto& s : b) {
        auto it = p.side.find(s);
        if (it == p.side.end()) throw InputError(where + ": side bits must cover every sector");
        if (it->second != 1 && it->second != -1) throw InputError(where + ": side bits are +1 or -1");
      }
    }
  }
  if (m.chi_curve) {
    Q total = *m.chi_curve;
    for (const auto& r : m.regions) total += r.chi_c_open;
    if (total != 1)
      throw InputError("Euler characteristics add up to " + to_string(total) + " instead of chi(RP^2) = 1");
  }
}

SingularPointBinding bind_catalog(const std::string& point, const std::string& name,
                                  const std::map<std::string, std::string>& sector_to_region,
                                  const std::map<std::string, int>& side) {
  const auto desc = catalog(name);
  SingularPointBinding b;
  b.point = point;
  b.source = name;
  b.residue = boundary_residue(desc.diagram).q;
  for (const auto& o : desc.diagram.outer) {
    b.sector_sign[o.label] = o.sign;
    if (!sector_to_region.count(o.label))
      throw InputError("point '" + point + "': sector '" + o.label + "' of " + name + " is not mapped");
  }
  b.sector_to_region = sector_to_region;
  b.side = side;
  return b;
}

PhiResult assemble_phi(const CurveModel& m) {
  validate(m);
  const auto idx = included(m);
  std::vector<long> pos(m.regions.size(), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<long>(i);
  Matrix g(idx.size(), idx.size());
  for (const auto& p : m.points) {
    if (p.kind != ResidueKind::Q) throw InputError("point '" + p.point + "': the full form needs a q residue");
    const auto& b = p.residue.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const long ri = pos[region_index(m, p.sector_to_region.at(b[i]))];
      if (ri < 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        const long rj = pos[region_index(m, p.sector_to_region.at(b[j]))];
        if (rj < 0) continue;
        const int twist = !p.side.empty() && p.side.at(b[i]) != p.side.at(b[j]) ? -1 : 1;
        g(ri, rj) += twist * p.residue.gram()(i, j);
      }
    }
  }
  Labels labels;
  PhiResult r;
  r.route = "curve";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& reg = m.regions[idx[i]];
    g(i, i) -= 2 * reg.chi_c_open;
    labels.push_back(reg.label);
    r.signs.push_back(reg.sign);
  }
  r.form = SymmetricForm(labels, g);
  Labels plus, minus;
  for (std::size_t i = 0; i < labels.size(); ++i) (r.signs[i] > 0 ? plus : minus).push_back(labels[i]);
  r.plus = restrict_form(r.form, plus);
  r.minus = restrict_form(r.form, minus);
  return r;
}

SymmetricForm assemble_phi_bar(const CurveModel& m) {
  validate(m);
  std::vector<long> pos(m.regions.size(), -1);
  Labels labels;
  for (std::size_t i = 0; i < m.regions.size(); ++i)
    if (!m.regions[i].omega_nonzero && m.regions[i].sign > 0) {
      pos[i] = static_cast<long>(labels.size());
      labels.push_back(m.regions[i].label);
    }
  Matrix g(labels.size(), labels.size());
  for (const auto& p : m.points) {
    const Q scale = p.kind == ResidueKind::Q ? 2 : 1;
    const auto& b = p.residue.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (p.sector_sign.at(b[i]) < 0) continue;
      const long ri = pos[region_index(m, p.sector_to_region.at(b[i]))];
      if (ri < 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (p.sector_sign.at(b[j]) < 0) continue;
        const long rj = pos[region_index(m, p.sector_to_region.at(b[j]))];
        if (rj < 0) continue;
        const int twist = !p.side.empty() && p.side.at(b[i]) != p.side.at(b[j]) ? -1 : 1;
        g(ri, rj) += twist * scale * p.residue.gram()(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < m.regions.size(); ++i)
    if (pos[i] >= 0) g(pos[i], pos[i]) -= 4 * m.regions[i].chi_c_open;
  return SymmetricForm(labels, g);
}

CurveModel curve_model_from_arrangement(const Arrangement& a) {
  if (a.d != 2) throw InputError("curve models are planar; the arrangement must have d = 2");
  validate_generic(a);
  const CellComplex cx = enumerate_cells(a);
  const auto omega = omega_for(a);
  CurveModel m;
  m.k = static_cast<long>(a.m() / 2);
  m.omega_empty = !omega;
  const Labels names = cx.region_labels();
  std::map<Covector, std::string> at;
  for (std::size_t r = 0; r < cx.regions.size(); ++r) {
    m.regions.push_back({names[r], cx.region_sign(r), Q(1), false});
    at[cx.cells[cx.regions[r]].covector] = names[r];
  }
  Q chi = 0;
  for (const auto& c : cx.cells)
    if (c.dim < 2) chi += c.dim ? -1 : 1;
  m.chi_curve = chi;

  const SymmetricForm node(residue_form(lambda_node(), node_sectors()).form);
  long count = 0;
  for (std::size_t v : cx.cells_of_dim(0)) {
    const Covector& x = cx.cells[v].covector;
    std::vector<std::size_t> t;
    int u = 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0)
        t.push_back(k);
      else
        u *= x[k];
    }
    SingularPointBinding b;
    b.point = "v" + std::to_string(++count);
    b.source = "A1-";
    b.residue = node;
    // Same relabeling as the residue route: local sector (u·s1, s2).
    for (const auto& s : sign_vectors(2)) {
      Covector c = x;
      c[t[0]] = s[0];
      c[t[1]] = s[1];
      const std::string label = sector_label({u * s[0], s[1]});
      b.sector_sign[label] = u * s[0] * s[1];
      b.sector_to_region[label] = at.at(canon(c));
      for (int k = 0; k < 2; ++k)
        if (omega && *omega == t[k]) b.side[label] = s[k];
    }
    m.points.push_back(std::move(b));
  }
  return m;
}

std::vector<CheckRow> milnor_pluecker_validate(const CurveInvariants& ci) {
  std::vector<CheckRow> rows;
  Q two_delta = 0, mu = 0, branches = 0, real_branches = 0, delta = 0;
  for (const auto& p : ci.points) {
    rows.push_back({"milnor:" + p.label, Q(2 * p.delta), Q(p.mu + p.r - 1)});
    two_delta += 2 * p.delta;
    delta += p.delta;
    mu += p.mu;
    branches += p.r - 1;
    if (p.real) real_branches += p.rho - 1;
  }
  rows.push_back({"delta-mu-branches", two_delta - mu, branches});
  const auto& v = ci.values;
  if (v.has("br_im") && v.has("alpha_im"))
    rows.push_back({"imaginary-branches", branches - real_branches, 2 * v.get("br_im", "") - 2 * v.get("alpha_im", "")});
  if (v.has("chi_ra")) rows.push_back({"real-euler", v.get("chi_ra", ""), -real_branches});
  if (v.has("g_a") && v.has("r") && v.has("g"))
    rows.push_back({"genus-formula", v.get("g_a", "") + v.get("r", "") - 1, v.get("g", "") + delta});
  return rows;
}

CurveInvariants catalog_bundle(const std::string& name) {
  const auto d = catalog(name);
  CurveInvariants ci;
  ci.points.push_back({d.name, d.mu, d.branches, d.real_branches, d.delta, true});
  ci.values.set("mu_plus", d.mu_plus);
  ci.values.set("mu_minus", d.mu_minus);
  ci.values.set("mu_zero", d.mu_zero);
  // Complex branches that are not real come in conjugate pairs.
  ci.values.set("br_im", make_rational(d.branches - d.real_branches, 2));
  ci.values.set("alpha_im", 0);
  return ci;
}

CurveInvariants model_invariants(const CurveModel& m, long r, long nu, long g) {
  validate(m);
  if (!m.chi_curve) throw InputError("model invariants need chi of the curve");
  CurveInvariants ci;
  auto& v = ci.values;
  v.set("cp2", 1);
  v.set("k", m.k);
  v.set("r", r);
  v.set("nu", nu);
  v.set("g", g);
  v.set("g_a", (2 * m.k - 1) * (m.k - 1));
  v.set("br_im", 0);
  v.set("alpha_im", 0);
  v.set("alpha_plus", 0);
  v.set("chi_ra", *m.chi_curve);
  Q mu = 0, mu_plus = 0, mu_zero = 0;
  for (const auto& p : m.points) {
    if (p.source.empty()) throw InputError("point '" + p.point + "' has no catalog name to read Milnor data from");
    const auto d = catalog(p.source);
    ci.points.push_back({p.point, d.mu, d.branches, d.real_branches, d.delta, true});
    mu += d.mu_minus;
    mu_plus += d.mu_plus;
    mu_zero += d.mu_zero;
  }
  v.set("mu_plus", mu_plus);
  v.set("mu_minus", mu);
  v.set("mu_zero", mu_zero);
  for (int eps : {1, -1}) {
    const std::string sfx = eps > 0 ? "_plus" : "_minus";
    Q n = 0, n_omega = 0, b1 = 0, chi_c = 0;
    for (const auto& reg : m.regions) {
      if (reg.sign != eps) continue;
      n += 1;
      if (reg.omega_nonzero) n_omega += 1;
      // A connected open surface that is not closed has b0 = 1, b2 = 0.
      b1 += 1 - reg.chi_c_open;
      chi_c += reg.chi_c_open;
    }
    v.set("n" + sfx, n);
    v.set("n_omega" + sfx, n_omega);
    v.set("b1_int" + sfx, b1);
    v.set("b2_rp" + sfx, 0);
    v.set("chi_rx" + sfx, 2 * chi_c + *m.chi_curve);
  }
  return ci;
}

GapReport gap_delta(const CurveInvariants& ci, int eps) {
  const InvariantBundle v = ci.values.completed();
  const std::string ctx = "gap formula", sfx = eps > 0 ? "_plus" : "_minus";
  GapReport out;
  if (v.get_or("b1_cp", 0) != 0) out.notes.push_back("b1(CP) is nonzero; the gap formula assumes it vanishes");
  if (v.get_or("bt0_ca", 0) != 0) out.notes.push_back("reduced b0(CA) is nonzero; the gap formula assumes it vanishes");
  const Q b2 = v.has("b2_cp") ? v.get("b2_cp", ctx) : v.get("b2_plus_cp", ctx) + v.get("b2_minus_cp", ctx);
  out.delta = b2 - v.get("nu", ctx) + v.get("g", ctx) + v.get("br_im", ctx) -
              (v.get("alpha_im", ctx) + v.get("alpha_plus", ctx)) - v.get("b1_int" + sfx, ctx) +
              v.get("n_omega" + sfx, ctx) + v.get("b2_rp" + sfx, ctx);
  return out;
}

Rational gap_from_inertia(const CurveInvariants& ci, int eps, const InertiaTriple& t) {
  InvariantBundle b = ci.values;
  b.set("chi_rx", ci.values.get(eps > 0 ? "chi_rx_plus" : "chi_rx_minus", "gap bookkeeping"));
  b.set("sigma_plus", t.plus);
  b.set("sigma_minus", t.minus);
  b.set("sigma_zero", t.zero);
  Q total = 0;
  for (const auto& row : arnold_viro_rhs("curve", b).rows)
    if (row.kind == RowKind::Bookkeeping) total += *row.slack();
  return total;
}

bool SharpnessReport::matches() const {
  return std::all_of(radical_rank.begin(), radical_rank.end(), [&](const auto& p) { return p.second == expected; });
}

SharpnessReport sharpness_check(const CurveModel& m, long r) {
  const PhiResult phi = assemble_phi(m);
  SharpnessReport rep;
  rep.expected = r - 1;
  if (phi.plus.dim()) rep.radical_rank.push_back({1, inertia(phi.plus).zero});
  if (phi.minus.dim()) rep.radical_rank.push_back({-1, inertia(phi.minus).zero});
  return rep;
}

CurveModel conic_model() {
  CurveModel m;
  m.k = 1;
  m.regions = {{"inside", -1, Q(1), false}, {"outside", 1, Q(0), false}};
  m.chi_curve = Q(0);
  return m;
}

CurveModel three_cusp_quartic_model(bool cusps_inward) {
  CurveModel m;
  m.k = 2;
  m.omega_empty = false;
  // The outside is a Mobius band; omega is nonzero there, so Omega can be
  // pushed into it and no cusp needs side bits.
  m.regions = {{"inside", -1, Q(1), false}, {"outside", 1, Q(0), true}};
  m.chi_curve = Q(0);
  for (int c = 1; c <= 3; ++c) {
    const std::string p = "c" + std::to_string(c);
    if (cusps_inward)
      m.points.push_back(bind_catalog(p, "A2-", {{"wR", "inside"}, {"wTLB", "outside"}}));
    else
      m.points.push_back(bind_catalog(p, "A2+", {{"wR", "outside"}, {"wTLB", "inside"}}));
  }
  return m;
}

/* Disc model of RP^2 with the line as the boundary circle. The pentic runs
   from y to its antipode and has cusps x1, x2 on the line. */
CurveModel pentic_line_model(bool same_side, int cusp_edge, bool thin_positive) {
  if (cusp_edge < 0 || cusp_edge > 2) throw InputError("cusp_edge is 0, 1 or 2");
  CurveModel m;
  m.k = 3;
  m.chi_curve = Q(-3);
  // (positive, negative) region on each arc y-x1, x1-x2, x2-y.
  std::vector<std::pair<std::string, std::string>> arcs;
  if (same_side) {
    m.regions = {{"R1", 1, Q(1), false}, {"R2", 1, Q(1), false}, {"R3", 1, Q(1), false}, {"R4", -1, Q(1), false}};
    m.points.push_back(bind_catalog("x1", "D7+", {{"w1", "R4"}, {"w4", "R4"}, {"w2", "R1"}, {"w3", "R2"}}));
    m.points.push_back(bind_catalog("x2", "D7+", {{"w1", "R4"}, {"w4", "R4"}, {"w2", "R2"}, {"w3", "R3"}}));
    m.points.push_back(bind_catalog("y", "A1-", {{"wT", "R1"}, {"wB", "R3"}, {"wR", "R4"}, {"wL", "R4"}}));
    arcs = {{"R1", "R4"}, {"R2", "R4"}, {"R3", "R4"}};
  } else {
    m.regions = {{"A", 1, Q(1), false}, {"B", 1, Q(1), false}, {"C", -1, Q(1), false}, {"D", -1, Q(1), false}};
    m.points.push_back(bind_catalog("x1", "D7+", {{"w4", "C"}, {"w1", "D"}, {"w2", "A"}, {"w3", "B"}}));
    m.points.push_back(bind_catalog("x2", "D7-", {{"w4", "B"}, {"w1", "B"}, {"w2", "D"}, {"w3", "C"}}));
    m.points.push_back(bind_catalog("y", "A1-", {{"wT", "A"}, {"wB", "B"}, {"wR", "D"}, {"wL", "C"}}));
    arcs = {{"A", "D"}, {"B", "D"}, {"B", "C"}};
  }
  const auto& [pos, neg] = arcs[cusp_edge];
  if (thin_positive)
    m.points.push_back(bind_catalog("x3", "A4+", {{"wR", pos}, {"wTLB", neg}}));
  else
    m.points.push_back(bind_catalog("x3", "A4-", {{"wR", neg}, {"wTLB", pos}}));
  return m;
}

PenticReport pentic_line_analysis() {
  PenticReport rep;
  rep.same_side_excluded = true;
  for (bool same : {true, false})
    for (int e = 0; e < 3; ++e)
      for (bool thin : {false, true}) {
        const PhiResult phi = assemble_phi(pentic_line_model(same, e, thin));
        PenticCase c;
        c.name = std::string(same ? "same-side" : "opposite-side") + "/arc" + std::to_string(e + 1) +
                 (thin ? "/thin-positive" : "/thin-negative");
        c.same_side = same;
        c.cusp_edge = e;
        c.thin_positive = thin;
        c.plus = inertia(phi.plus);
        c.minus = inertia(phi.minus);
        if (same && c.nullity() != 0) rep.same_side_excluded = false;
        if (!same && c.plus.zero == 1 && c.minus.zero == 1) rep.opposite_consistent = true;
        rep.cases.push_back(c);
      }
  return rep;
}

}  // namespace avk
