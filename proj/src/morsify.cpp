#include "avk/morsify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace avk {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Labels labels_of(const std::vector<Region>& rs) {
  Labels l;
  for (const auto& r : rs) l.push_back(r.label);
  return l;
}

Labels labels_of_sign(const std::vector<Region>& rs, int s) {
  Labels l;
  for (const auto& r : rs)
    if (r.sign == s) l.push_back(r.label);
  return l;
}

bool nondegenerate(const SymmetricForm& f) { return inertia(f).zero == 0; }

}  // namespace

std::vector<Region> AGDiagram::regions() const {
  std::vector<Region> all = inner;
  all.insert(all.end(), outer.begin(), outer.end());
  return all;
}

const Region& AGDiagram::region(const std::string& label) const {
  for (const auto* v : {&inner, &outer})
    for (const auto& r : *v)
      if (r.label == label) return r;
  throw InputError("unknown region '" + label + "'");
}

long AGDiagram::saddle_count(const std::string& a, const std::string& b) const {
  auto it = saddles.find(key(a, b));
  return it == saddles.end() ? 0 : it->second;
}

void AGDiagram::set_saddles(const std::string& a, const std::string& b, long n) {
  if (n == 0)
    saddles.erase(key(a, b));
  else
    saddles[key(a, b)] = n;
}

void validate(const AGDiagram& d) {
  if (d.rho < 0) throw InputError("rho must be non-negative");
  if (d.rho == 0) {
    if (d.outer.size() != 1 || d.outer[0].label != "w0")
      throw InputError("a diagram with rho = 0 has exactly one outer region, labeled w0");
  } else if (d.outer.size() != static_cast<std::size_t>(2 * d.rho)) {
    throw InputError("expected " + std::to_string(2 * d.rho) + " outer regions, got " +
                     std::to_string(d.outer.size()));
  }
  std::set<std::string> seen;
  for (const auto& r : d.regions()) {
    if (r.label.empty() || r.label.find(',') != std::string::npos)
      throw InputError("region labels must be non-empty and contain no comma");
    if (!seen.insert(r.label).second) throw InputError("duplicate region '" + r.label + "'");
    if (r.sign != 1 && r.sign != -1) throw InputError("region sign must be + or -");
  }
  for (const auto& [k, n] : d.saddles) {
    if (!seen.count(k.first) || !seen.count(k.second))
      throw InputError("saddle entry names an unknown region: " + k.first + "," + k.second);
    if (n < 0) throw InputError("saddle counts must be non-negative");
  }
  for (const auto& [l, n] : d.same_sign_boundary) {
    if (!seen.count(l)) throw InputError("same_sign_boundary names an unknown region '" + l + "'");
    if (n < 0) throw InputError("same_sign_boundary counts must be non-negative");
  }
  for (const auto& r : d.regions()) {
    long expect = 0;
    for (const auto& o : d.regions())
      if (o.label != r.label && o.sign == r.sign) expect += d.saddle_count(r.label, o.label);
    auto it = d.same_sign_boundary.find(r.label);
    long given = it == d.same_sign_boundary.end() ? 0 : it->second;
    if (given != expect)
      throw InputError("same_sign_boundary of '" + r.label + "' is " + std::to_string(given) +
                       " but its same-sign saddles give " + std::to_string(expect));
  }
}

DiagramCounts diagram_counts(const AGDiagram& d) {
  DiagramCounts c;
  long pairs = 0;
  for (const auto& [k, n] : d.saddles) {
    if (d.region(k.first).sign != d.region(k.second).sign) continue;
    pairs += n;
    if (k.first == k.second) c.pinches += n;
  }
  c.saddles = pairs / 2;
  c.mu = 2 * c.saddles - d.rho + 1;
  for (const auto& r : d.regions()) c.chi_sum += r.chi_minus_rs;
  c.disc_ok = pairs % 2 == 0 && c.chi_sum == Rational(1 + c.saddles - d.rho - c.pinches);
  return c;
}

SymmetricForm build_qtau(const AGDiagram& d) {
  validate(d);
  const auto rs = d.regions();
  const std::size_t n = rs.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rs[i].sign != rs[j].sign) continue;
      if (i == j) {
        auto it = d.same_sign_boundary.find(rs[i].label);
        long b = it == d.same_sign_boundary.end() ? 0 : it->second;
        m(i, i) = make_rational(b, 2) - 2 * rs[i].chi_minus_rs;
      } else {
        m(i, j) = make_rational(d.saddle_count(rs[i].label, rs[j].label), 2);
      }
    }
  return SymmetricForm(labels_of(rs), m);
}

bool is_qis(const AGDiagram& d) {
  return nondegenerate(restrict_form(build_qtau(d), labels_of(d.inner)));
}

bool is_qbaris(const AGDiagram& d) {
  return nondegenerate(restrict_form(build_qtau(d), labels_of_sign(d.inner, 1)));
}

BoundaryResidue boundary_residue(const AGDiagram& d) {
  const SymmetricForm qt = build_qtau(d);
  if (!nondegenerate(restrict_form(qt, labels_of(d.inner))))
    throw CheckFailure("essential singularity (not QI^S)");
  BoundaryResidue r;
  r.q = complement_form(qt, labels_of(d.inner));
  r.q_plus = restrict_form(r.q, labels_of_sign(d.outer, 1));
  r.q_minus = restrict_form(r.q, labels_of_sign(d.outer, -1));
  r.q_bar = SymmetricForm(r.q_plus.basis(), r.q_plus.gram() * Rational(2));
  return r;
}

SymmetricForm boundary_residue_bar(const AGDiagram& d) {
  const SymmetricForm qt = build_qtau(d);
  Labels pos = labels_of_sign(d.inner, 1);
  if (!nondegenerate(restrict_form(qt, pos))) throw CheckFailure("essential singularity (not QI^S)");
  for (const auto& l : labels_of_sign(d.outer, 1)) pos.push_back(l);
  SymmetricForm c = complement_form(restrict_form(qt, pos), labels_of_sign(d.inner, 1));
  return SymmetricForm(c.basis(), c.gram() * Rational(2));
}

AGDiagram negate(const AGDiagram& d) {
  AGDiagram n = d;
  for (auto* v : {&n.inner, &n.outer})
    for (auto& r : *v) r.sign = -r.sign;
  return n;
}

AGDiagram chebyshev_diagram(int p, int q) {
  if (p < 2 || q < 2) throw InputError("chebyshev diagram needs p, q >= 2");
  // Outer strips along the sides x = 1, y = 1, x = -1, y = -1, in cyclic order.
  const std::string side = "RTLB";
  const int side_sign[4] = {1, -1, p % 2 ? -1 : 1, q % 2 ? 1 : -1};
  const std::pair<int, int> corner[4] = {{0, 0}, {p, 0}, {p, q}, {0, q}};
  std::vector<int> parent = {0, 1, 2, 3};
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e];
    return e;
  };
  for (int k = 0; k < 4; ++k)
    if ((corner[k].first + corner[k].second) % 2) parent[find(k)] = find((k + 1) % 4);
  auto strip_label = [&](int e) {
    std::string l = "w";
    for (int k = 0; k < 4; ++k)
      if (find(k) == find(e)) l += side[k];
    return l;
  };
  auto region_of = [&](int j, int l) -> std::string {
    if (j >= 1 && j <= p - 1 && l >= 1 && l <= q - 1) return "e" + std::to_string(j) + "_" + std::to_string(l);
    if (j == 0) return strip_label(0);
    if (l == 0) return strip_label(1);
    if (j == p) return strip_label(2);
    return strip_label(3);
  };

  AGDiagram d;
  std::map<std::string, long> pinches;
  for (int j = 1; j < p; ++j)
    for (int l = 1; l < q; ++l)
      if ((j + l) % 2 == 1) d.inner.push_back({region_of(j, l), (j % 2 ? -1 : 1) - (l % 2 ? -1 : 1) > 0 ? 1 : -1, 0});
  for (int k = 0; k < 4; ++k)
    if (find(k) == k) d.outer.push_back({strip_label(k), side_sign[k], 0});
  for (int j = 1; j < p; ++j)
    for (int l = 1; l < q; ++l) {
      if ((j + l) % 2) continue;
      const std::pair<std::string, std::string> opp[2] = {{region_of(j - 1, l), region_of(j + 1, l)},
                                                           {region_of(j, l - 1), region_of(j, l + 1)}};
      for (const auto& [a, b] : opp) {
        d.set_saddles(a, b, d.saddle_count(a, b) + 1);
        if (a == b) ++pinches[a];
      }
    }
  for (auto& r : d.inner) r.chi_minus_rs = 1 - pinches[r.label];
  for (auto& r : d.outer) r.chi_minus_rs = -pinches[r.label];
  d.rho = static_cast<long>(d.outer.size() / 2);
  for (const auto& r : d.regions()) {
    long b = 0;
    for (const auto& o : d.regions())
      if (o.label != r.label && o.sign == r.sign) b += d.saddle_count(r.label, o.label);
    d.same_sign_boundary[r.label] = b;
  }
  return d;
}

AGDiagram dot_chain(int n) {
  if (n < 1) throw InputError("dot chain needs n >= 1");
  AGDiagram d;
  for (int k = 1; k <= n; ++k) {
    const std::string l = "e" + std::to_string(k);
    d.inner.push_back({l, -1, 1});
    d.same_sign_boundary[l] = (k > 1) + (k < n);
    if (k < n) d.set_saddles(l, "e" + std::to_string(k + 1), 1);
  }
  d.outer.push_back({"w0", 1, 1 - n});
  d.same_sign_boundary["w0"] = 0;
  d.set_saddles("w0", "w0", n - 1);
  return d;
}

}  // namespace avk
