#include "avk/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "avk/localforms.hpp"

namespace avk {

namespace {

Covector negated(const Covector& c) {
  Covector n(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) n[k] = -c[k];
  return n;
}

Covector canonical(const Covector& c) { return std::max(c, negated(c)); }

std::string subset_text(const std::vector<std::size_t>& s) {
  std::string t = "{";
  for (std::size_t k = 0; k < s.size(); ++k) t += (k ? "," : "") + std::to_string(s[k]);
  return t + "}";
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
void for_subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

Matrix rows_of(const Arrangement& a, const std::vector<std::size_t>& s) {
  Matrix m(s.size(), a.d + 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int j = 0; j <= a.d; ++j) m(i, j) = a.hyperplanes[s[i]][j];
  return m;
}

int sign_product(const Covector& c) {
  int s = 1;
  for (int x : c) s *= x;
  return s;
}

struct Assembly {
  CellComplex cx;
  std::map<Covector, std::size_t> region_pos;  // canonical covector -> position among regions
  std::vector<int> signs;
  std::optional<std::size_t> omega;

  std::size_t region_at(Covector c) const { return region_pos.at(canonical(c)); }
};

Assembly assemble(const Arrangement& a) {
  Assembly s;
  s.cx = enumerate_cells(a);
  for (std::size_t r = 0; r < s.cx.regions.size(); ++r) {
    s.region_pos[s.cx.cells[s.cx.regions[r]].covector] = r;
    s.signs.push_back(s.cx.region_sign(r));
  }
  s.omega = omega_for(a);
  return s;
}

PhiResult finish(const std::string& route, const Assembly& s, const Matrix& m) {
  PhiResult r;
  r.route = route;
  r.form = SymmetricForm(s.cx.region_labels(), m);
  r.signs = s.signs;
  r.omega = s.omega;
  Labels pos, neg;
  for (std::size_t i = 0; i < s.signs.size(); ++i) (s.signs[i] > 0 ? pos : neg).push_back(r.form.basis()[i]);
  r.plus = restrict_form(r.form, pos);
  r.minus = restrict_form(r.form, neg);
  return r;
}

void require_plane(const Arrangement& a, const char* route) {
  if (a.d != 2) throw InputError(std::string(route) + " route is implemented for line arrangements (d = 2) only");
}

void require_enough(const Arrangement& a) {
  if (a.m() < 4) throw InputError("the partition form needs at least four hyperplanes");
}

/* Vertex contributions shared by the integral and residue routes. The germ
   at a vertex is u·x1·x2 with u the sign of the other factors there, so the
   node form is read in sectors (u·s1, s2). */
void add_vertices(const Assembly& s, const SquareForm& node, Matrix& m) {
  for (std::size_t v : s.cx.cells_of_dim(0)) {
    const Covector& x = s.cx.cells[v].covector;
    std::vector<std::size_t> t;
    int u = 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0)
        t.push_back(k);
      else
        u *= x[k];
    }
    const auto sectors = sign_vectors(2);
    for (const auto& a : sectors)
      for (const auto& b : sectors) {
        Covector ca = x, cb = x;
        ca[t[0]] = a[0];
        ca[t[1]] = a[1];
        cb[t[0]] = b[0];
        cb[t[1]] = b[1];
        int twist = 1;
        if (s.omega) {
          for (int k = 0; k < 2; ++k)
            if (*s.omega == t[k] && a[k] != b[k]) twist = -1;
        }
        const SignVector la = {u * a[0], a[1]}, lb = {u * b[0], b[1]};
        m(s.region_at(ca), s.region_at(cb)) += twist * node.at(sector_label(la), sector_label(lb));
      }
  }
}

}  // namespace

void validate_generic(const Arrangement& a) {
  if (a.d < 1) throw InputError("dimension must be at least 1");
  if (a.m() < static_cast<std::size_t>(a.d)) throw InputError("need at least d hyperplanes");
  if (a.m() % 2) throw InputError("the number of hyperplanes must be even");
  for (std::size_t i = 0; i < a.m(); ++i) {
    if (a.hyperplanes[i].size() != static_cast<std::size_t>(a.d + 1))
      throw InputError("hyperplane " + std::to_string(i) + " must have d + 1 coefficients");
    if (std::all_of(a.hyperplanes[i].begin(), a.hyperplanes[i].end(), [](const Rational& x) { return x == 0; }))
      throw InputError("hyperplane " + std::to_string(i) + " is zero");
  }
  const std::size_t k = std::min<std::size_t>(a.m(), a.d + 1);
  for_subsets(a.m(), k, [&](const std::vector<std::size_t>& s) {
    if (rank(rows_of(a, s)) != k)
      throw InputError("non-generic arrangement: hyperplanes " + subset_text(s) + " are dependent");
  });
}

Arrangement random_generic_arrangement(std::size_t m, int d, unsigned seed) {
  // shape errors would make the redraw loop spin forever
  if (d < 1 || m < static_cast<std::size_t>(d) || m % 2)
    throw InputError("need an even number m >= d >= 1 of hyperplanes");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  while (true) {
    Arrangement a;
    a.d = d;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> h;
      for (int j = 0; j <= d; ++j) h.push_back(coef(rng));
      a.hyperplanes.push_back(h);
    }
    try {
      validate_generic(a);
      return a;
    } catch (const InputError&) {
    }
  }
}

int face_sign(const Covector& c, const Covector& b) {
  auto le = [&](int sg) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0 && sg * c[k] != b[k]) return false;
    return true;
  };
  if (le(1)) return 1;
  if (le(-1)) return -1;
  return 0;
}

int CellComplex::region_sign(std::size_t region) const { return sign_product(cells[regions[region]].covector); }

Labels CellComplex::region_labels() const { return labels_with_prefix("r", regions.size()); }

std::vector<std::size_t> CellComplex::cells_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == k) out.push_back(i);
  return out;
}

CellComplex enumerate_cells(const Arrangement& a) {
  validate_generic(a);
  std::set<Covector> found;
  const std::size_t d = a.d;
  for_subsets(a.m(), d, [&](const std::vector<std::size_t>& t) {
    const auto null = nullspace(rows_of(a, t));
    const Vector& v = null.at(0);
    Covector base(a.m());
    for (std::size_t i = 0; i < a.m(); ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j <= d; ++j) dot += a.hyperplanes[i][j] * v[j];
      base[i] = sign_of(dot);
    }
    // Every sign pattern on t is realized next to the vertex.
    std::vector<int> pattern(d, -1);
    while (true) {
      Covector c = base;
      for (std::size_t k = 0; k < d; ++k) c[t[k]] = pattern[k];
      found.insert(canonical(c));
      std::size_t k = 0;
      while (k < d && pattern[k] == 1) pattern[k++] = -1;
      if (k == d) break;
      ++pattern[k];
    }
  });
  CellComplex cx;
  cx.d = a.d;
  cx.m = a.m();
  for (const auto& c : found)
    cx.cells.push_back({c, a.d - static_cast<int>(std::count(c.begin(), c.end(), 0))});
  std::stable_sort(cx.cells.begin(), cx.cells.end(), [](const Cell& x, const Cell& y) { return x.dim < y.dim; });
  for (std::size_t i = 0; i < cx.cells.size(); ++i)
    if (cx.cells[i].dim == a.d) cx.regions.push_back(i);
  return cx;
}

long region_count(long m, long d) {
  Rational s = 0;
  for (long k = 0; k <= d; ++k) s += binomial(m - 1, k);
  return s.get_num().get_si();
}

Rational FacePolynomial::eval(const Rational& t) const {
  Rational s = 0, p = 1;
  for (long x : f) {
    s += x * p;
    p *= t;
  }
  return s;
}

std::vector<FaceComponent> face_polynomial(const CellComplex& c, std::size_t i, std::size_t j) {
  const Covector& a = c.cells.at(c.regions.at(i)).covector;
  const Covector& b = c.cells.at(c.regions.at(j)).covector;
  std::vector<std::size_t> common;
  for (std::size_t k = 0; k < c.cells.size(); ++k)
    if (face_sign(c.cells[k].covector, a) && face_sign(c.cells[k].covector, b)) common.push_back(k);
  std::vector<std::size_t> parent(common.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t x = 0; x < common.size(); ++x)
    for (std::size_t y = x + 1; y < common.size(); ++y) {
      const auto& cx = c.cells[common[x]].covector;
      const auto& cy = c.cells[common[y]].covector;
      if (face_sign(cx, cy) || face_sign(cy, cx)) parent[find(x)] = find(y);
    }
  std::map<std::size_t, FaceComponent> comps;
  for (std::size_t x = 0; x < common.size(); ++x) {
    FaceComponent& fc = comps[find(x)];
    fc.cells.push_back(common[x]);
    const int k = c.cells[common[x]].dim;
    if (fc.poly.f.size() <= static_cast<std::size_t>(k)) fc.poly.f.resize(k + 1, 0);
    ++fc.poly.f[k];
  }
  std::vector<FaceComponent> out;
  for (auto& [root, fc] : comps) out.push_back(std::move(fc));
  std::sort(out.begin(), out.end(), [](const FaceComponent& x, const FaceComponent& y) { return x.cells < y.cells; });
  return out;
}

std::optional<std::size_t> omega_for(const Arrangement& a) {
  const long k = static_cast<long>(a.m() / 2);
  if ((a.d - k) % 2 == 0) return a.m() - 1;
  return std::nullopt;
}

PhiResult phi_face_route(const Arrangement& a) {
  require_enough(a);
  const Assembly s = assemble(a);
  const std::size_t n = s.cx.regions.size();
  const int d = a.d;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Covector& wa = s.cx.cells[s.cx.regions[i]].covector;
      const Covector& wb = s.cx.cells[s.cx.regions[j]].covector;
      for (const auto& comp : face_polynomial(s.cx, i, j)) {
        const int dim = comp.poly.top_dim();
        int eps = 1;
        if (s.omega) {
          const std::size_t w = *s.omega;
          bool inside = std::all_of(comp.cells.begin(), comp.cells.end(),
                                    [&](std::size_t c) { return s.cx.cells[c].covector[w] == 0; });
          if (inside) {
            const Covector& c0 = s.cx.cells[comp.cells.front()].covector;
            // Orient both regions so that the component's first cell sits on them.
            if (face_sign(c0, wa) * wa[w] != face_sign(c0, wb) * wb[w]) eps = -1;
          }
        }
        const int e = d * d - dim + (s.signs[i] - s.signs[j]) / 2;
        if (e % 2) throw CheckFailure("half-integral sign exponent on a face component");
        Rational v = comp.poly.eval(-2);
        v /= Rational(Integer(1) << static_cast<unsigned long>(d - 1));
        m(i, j) += ((e / 2) % 2 ? -eps : eps) * v;
      }
    }
  if (d == 2) {
    const Matrix diag = phi_integral_route(a).form.gram();
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag(i, i);
  } else {
    throw InputError("face route diagonal needs d = 2");
  }
  return finish("face", s, m);
}

PhiResult phi_integral_route(const Arrangement& a) {
  require_plane(a, "integral");
  require_enough(a);
  const Assembly s = assemble(a);
  const std::size_t n = s.cx.regions.size();
  Matrix m(n, n);
  add_vertices(s, lambda_node().form, m);
  // Open edges: χ_c = -1, and the smooth local form is -sign on the side it is read from.
  for (std::size_t e : s.cx.cells_of_dim(1)) {
    const Covector& c = s.cx.cells[e].covector;
    const std::size_t t = std::find(c.begin(), c.end(), 0) - c.begin();
    Covector ca = c, cb = c;
    ca[t] = 1;
    cb[t] = -1;
    const std::size_t ra = s.region_at(ca), rb = s.region_at(cb);
    const int twist = s.omega && *s.omega == t ? -1 : 1;
    m(ra, rb) += twist * s.signs[ra];
    m(rb, ra) += twist * s.signs[rb];
    m(ra, ra) += 1;
    m(rb, rb) += 1;
  }
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= 2;
  return finish("integral", s, m);
}

PhiResult phi_residue_route(const Arrangement& a) {
  require_plane(a, "residue");
  require_enough(a);
  const Assembly s = assemble(a);
  const std::size_t n = s.cx.regions.size();
  Matrix m(n, n);
  add_vertices(s, residue_form(lambda_node(), node_sectors()).form, m);
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= 2;
  return finish("residue", s, m);
}

long chi_double_cover(const CellComplex& c, int eps) {
  long closure = 0, lines = 0;
  for (const auto& cell : c.cells) {
    const long sg = cell.dim % 2 ? -1 : 1;
    if (cell.dim < c.d) lines += sg;
    bool touches = false;
    for (std::size_t r = 0; r < c.regions.size() && !touches; ++r)
      touches = c.region_sign(r) == eps && face_sign(cell.covector, c.cells[c.regions[r]].covector) != 0;
    if (touches) closure += sg;
  }
  return 2 * closure - lines;
}

InertiaTriple predict_arrangement_inertia(long m, long chi_rx_eps) {
  if (m % 2 || m < 4) throw InputError("need an even number of lines, at least four");
  const long k = m / 2;
  const long b_plus = (k - 1) * (k - 2) + 1;
  const long b_minus = 3 * k * (k - 1) + 1 - k * (2 * k - 1);
  const long kappa = 1;
  InertiaTriple t;
  t.zero = smith_bound_N(m, 2);
  t.plus = (b_plus - kappa) / 2;
  const long twice = b_minus + kappa + chi_rx_eps;
  if (twice % 2) throw CheckFailure("odd Betti bookkeeping in the inertia prediction");
  t.minus = twice / 2 - 1;
  return t;
}

long smith_bound_N(long m, long d) {
  Rational s = 0;
  for (long k = 0; k <= d - 1; ++k) s += binomial(m - 2, k);
  return s.get_num().get_si();
}

}  // namespace avk
