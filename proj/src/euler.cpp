#include "avk/euler.hpp"

#include <algorithm>

namespace avk {

Simplex make_simplex(std::vector<std::string> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("simplex with repeated vertex");
  if (vertices.empty()) throw InputError("empty simplex");
  return vertices;
}

int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

namespace {

int parity_sign(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (const auto& raw : simplices) {
    const Simplex s = make_simplex(raw);
    const std::size_t n = s.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) face.push_back(s[i]);
      all.insert(face);
    }
  }
  SimplicialComplex k;
  k.simplices_.assign(all.begin(), all.end());
  std::stable_sort(k.simplices_.begin(), k.simplices_.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) k.index_[k.simplices_[i]] = i;
  return k;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw InputError("simplex is not in the complex");
  return it->second;
}

int SimplicialComplex::dim() const {
  return simplices_.empty() ? -1 : simplex_dim(simplices_.back());
}

bool SimplicialComplex::pure() const {
  const int d = dim();
  for (const auto& s : simplices_) {
    if (simplex_dim(s) == d) continue;
    bool covered = false;
    for (const auto& t : simplices_)
      if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

namespace {

Rational value_on(const ConstructibleFunction& f, const Simplex& s) {
  auto it = f.find(s);
  return it == f.end() ? Rational(0) : it->second;
}

void check_support(const SimplicialComplex& k, const ConstructibleFunction& f) {
  for (const auto& [s, v] : f)
    if (!k.contains(s)) throw InputError("constructible function defined off the complex");
}

}  // namespace

Rational chi_c_integral(const SimplicialComplex& k, const ConstructibleFunction& f) {
  check_support(k, f);
  Rational total = 0;
  for (const auto& s : k.simplices()) total += parity_sign(s.size() - 1) * value_on(f, s);
  return total;
}

Rational euler_characteristic(const SimplicialComplex& k) {
  Rational total = 0;
  for (const auto& s : k.simplices()) total += parity_sign(s.size() - 1);
  return total;
}

Rational SubdividedFunction::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) total += parity_sign(chains[i].size() - 1) * values[i];
  return total;
}

std::vector<std::vector<std::size_t>> barycentric_cells(const SimplicialComplex& k) {
  const auto& s = k.simplices();
  std::vector<std::vector<std::size_t>> up(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j].size() > s[i].size() && std::includes(s[j].begin(), s[j].end(), s[i].begin(), s[i].end()))
        up[i].push_back(j);
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    chains.push_back(cur);
    for (auto j : up[last]) {
      cur.push_back(j);
      self(self, j);
      cur.pop_back();
    }
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    cur = {i};
    extend(extend, i);
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

SubdividedFunction transport(const SimplicialComplex& k, const ConstructibleFunction& f) {
  check_support(k, f);
  SubdividedFunction out;
  out.chains = barycentric_cells(k);
  for (const auto& c : out.chains) out.values.push_back(value_on(f, k.simplices()[c.back()]));
  return out;
}

SubdividedFunction link_function(const SimplicialComplex& k, const ConstructibleFunction& f) {
  const SubdividedFunction base = transport(k, f);
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < base.chains.size(); ++i) where[base.chains[i]] = i;

  SubdividedFunction hat;
  hat.chains = base.chains;
  hat.values.assign(base.chains.size(), Rational(0));
  // Open join cell tau*c has chi_c = chi_c(c) * (1 - chi(S^{k-1})); summing
  // over the link of tau and adding tau's own small sphere gives the value.
  for (std::size_t t = 0; t < base.chains.size(); ++t) {
    const std::size_t dim_t = base.chains[t].size() - 1;
    hat.values[t] += (1 - parity_sign(dim_t)) * base.values[t];
  }
  for (std::size_t ci = 0; ci < base.chains.size(); ++ci) {
    const auto& c = base.chains[ci];
    const std::size_t n = c.size();
    if (n < 2) continue;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
      std::vector<std::size_t> tau;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) tau.push_back(c[i]);
      const std::size_t rest = n - tau.size();
      const std::size_t dim_t = tau.size() - 1;
      // (-1)^dim_t * (-1)^(rest-1) * f(top of the full chain)
      hat.values[where.at(tau)] += parity_sign(dim_t) * parity_sign(rest - 1) * base.values[ci];
    }
  }
  return hat;
}

Rational link_integral_defect(const SimplicialComplex& k, const ConstructibleFunction& f) {
  return link_function(k, f).integral();
}

IdentityCheck odd_skeleton_reduction(const SimplicialComplex& k, const ConstructibleFunction& f) {
  const int d = k.dim();
  if (d < 0 || d % 2 == 0) throw InputError("odd-skeleton reduction needs a complex of odd dimension");
  const SubdividedFunction base = transport(k, f);
  const SubdividedFunction hat = link_function(k, f);
  IdentityCheck out{chi_c_integral(k, f), 0};
  for (std::size_t i = 0; i < base.chains.size(); ++i) {
    if (simplex_dim(k.simplices()[base.chains[i].back()]) > d - 1) continue;
    out.rhs += parity_sign(base.chains[i].size() - 1) * (base.values[i] - hat.values[i] / 2);
  }
  return out;
}

namespace {

ConstructibleFunction constant_one(const SimplicialComplex& k) {
  ConstructibleFunction one;
  for (const auto& s : k.simplices()) one[s] = 1;
  return one;
}

void check_subset(const SimplicialComplex& k, const std::set<Simplex>& sub, const char* what) {
  for (const auto& s : sub)
    if (!k.contains(s)) throw InputError(std::string(what) + " contains a simplex outside the complex");
}

Rational chi_c_of(const SimplicialComplex& k, const std::set<Simplex>& part) {
  Rational total = 0;
  for (const auto& s : k.simplices())
    if (part.count(s)) total += parity_sign(s.size() - 1);
  return total;
}

}  // namespace

IdentityCheck singular_link_integral(const SimplicialComplex& k, const std::set<Simplex>& sub) {
  check_subset(k, sub, "sub-polyhedron");
  const int d = k.dim();
  const SubdividedFunction lk = link_function(k, constant_one(k));
  const Rational regular = 1 - parity_sign(static_cast<std::size_t>(d));
  IdentityCheck out{0, 0};
  for (std::size_t i = 0; i < lk.chains.size(); ++i) {
    const Simplex& top = k.simplices()[lk.chains[i].back()];
    if (sub.count(top)) {
      out.lhs += parity_sign(lk.chains[i].size() - 1) * lk.values[i];
    } else if (lk.values[i] != regular) {
      throw InputError("sub-polyhedron misses a point whose link is not a sphere");
    }
  }
  if (d % 2 == 1) {
    std::set<Simplex> rest;
    for (const auto& s : k.simplices())
      if (!sub.count(s)) rest.insert(s);
    out.rhs = -2 * chi_c_of(k, rest);
  }
  return out;
}

IdentityCheck region_boundary_identity(const SimplicialComplex& w, const std::set<Simplex>& a,
                                       const std::set<Simplex>& s) {
  check_subset(w, a, "boundary part");
  check_subset(w, s, "singular part");
  for (const auto& x : s)
    if (!a.count(x)) throw InputError("singular part must lie in the boundary part");
  if (!w.pure()) throw InputError("region complex must be pure");
  const int d = w.dim();
  const SubdividedFunction lk = link_function(w, constant_one(w));
  const Rational interior = 1 - parity_sign(static_cast<std::size_t>(d));
  IdentityCheck out{0, 0};
  for (std::size_t i = 0; i < lk.chains.size(); ++i) {
    const Simplex& top = w.simplices()[lk.chains[i].back()];
    const int sgn_dim = parity_sign(lk.chains[i].size() - 1);
    if (s.count(top)) {
      out.lhs += sgn_dim * lk.values[i];
    } else if (a.count(top)) {
      if (lk.values[i] != 1) throw InputError("boundary point outside the singular part has a non-disc link");
    } else if (lk.values[i] != interior) {
      throw InputError("interior point of the region has a non-sphere link");
    }
  }
  std::set<Simplex> a_minus_s, w_minus_a;
  for (const auto& x : w.simplices()) {
    if (a.count(x) && !s.count(x)) a_minus_s.insert(x);
    if (!a.count(x)) w_minus_a.insert(x);
  }
  out.rhs = -chi_c_of(w, a_minus_s);
  if (d % 2 == 1) out.rhs -= 2 * chi_c_of(w, w_minus_a);
  return out;
}

}  // namespace avk
