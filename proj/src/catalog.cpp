#include "avk/morsify.hpp"

#include <functional>

namespace avk {

namespace {

using Q = Rational;

struct R {
  const char* label;
  char sign;
  long chi;
};

AGDiagram make(long rho, std::initializer_list<R> inner, std::initializer_list<R> outer,
               std::initializer_list<std::tuple<const char*, const char*, long>> saddles) {
  AGDiagram d;
  d.rho = rho;
  for (const auto& r : inner) d.inner.push_back({r.label, r.sign == '+' ? 1 : -1, r.chi});
  for (const auto& r : outer) d.outer.push_back({r.label, r.sign == '+' ? 1 : -1, r.chi});
  for (const auto& [a, b, n] : saddles) d.set_saddles(a, b, n);
  for (const auto& r : d.regions()) {
    long s = 0;
    for (const auto& o : d.regions())
      if (o.label != r.label && o.sign == r.sign) s += d.saddle_count(r.label, o.label);
    d.same_sign_boundary[r.label] = s;
  }
  return d;
}

SymmetricForm form(const std::string& prefix, Matrix m) {
  const std::size_t n = m.rows();
  return SymmetricForm(labels_with_prefix(prefix, n), std::move(m));
}

// A line through one lobe of a pair of tangent parabolas.
AGDiagram d4_plus() {
  return make(1, {{"e1", '+', 1}, {"e2", '-', 1}}, {{"w1", '-', 0}, {"w2", '+', 0}},
              {{"e2", "w1", 2}, {"e1", "w2", 2}});
}

// Three lines in general position.
AGDiagram d4_minus() {
  return make(3, {{"e1", '-', 1}},
              {{"w1", '+', 0}, {"w2", '-', 0}, {"w3", '+', 0}, {"w4", '+', 0}, {"w5", '-', 0}, {"w6", '-', 0}},
              {{"e1", "w5", 1}, {"w3", "w4", 1}, {"e1", "w2", 1}, {"w1", "w3", 1}, {"w1", "w4", 1}, {"e1", "w6", 1}});
}

// Figure eight crossed by a line.
AGDiagram d6_plus() {
  return make(1, {{"e1", '+', 1}, {"e2", '+', 1}, {"e3", '-', 1}}, {{"w1", '-', -1}, {"w2", '+', 0}},
              {{"e1", "e2", 1}, {"e3", "w1", 2}, {"e2", "w2", 2}, {"w1", "w1", 1}});
}

// Two opposite parabolas and a vertical line.
AGDiagram d6_minus() {
  return make(3, {{"e1", '-', 1}, {"e2", '+', 1}},
              {{"w1", '+', 0}, {"w2", '-', 0}, {"w3", '+', 0}, {"w4", '-', 0}, {"w5", '-', 0}, {"w6", '+', 0}},
              {{"w1", "w3", 1},
               {"e1", "w2", 1},
               {"e2", "w3", 1},
               {"e1", "w4", 1},
               {"w4", "w5", 1},
               {"e2", "w6", 1},
               {"e2", "w1", 1},
               {"e1", "w5", 1}});
}

// Nodal cubic with a line through its loop.
AGDiagram d5_minus() {
  return make(2, {{"e1", '+', 1}, {"e2", '-', 1}}, {{"w1", '+', 0}, {"w2", '-', 0}, {"w3", '-', 0}, {"w4", '+', 0}},
              {{"w2", "w3", 1}, {"e1", "w1", 1}, {"e1", "w4", 2}, {"e2", "w3", 1}, {"e2", "w2", 1}});
}

// Nodal cubic with a line crossing it three times.
AGDiagram e7() {
  return make(2, {{"e1", '-', 1}, {"e2", '+', 1}, {"e3", '-', 1}},
              {{"w1", '+', 0}, {"w2", '-', 0}, {"w3", '+', 0}, {"w4", '-', 0}},
              {{"e1", "w2", 1},
               {"e2", "w1", 1},
               {"e2", "w3", 2},
               {"e1", "e3", 1},
               {"e3", "w2", 1},
               {"e1", "w4", 1},
               {"w1", "w3", 1}});
}

// Two-loop perturbation of a higher cusp crossed by a line.
AGDiagram d7_minus() {
  return make(2, {{"e1", '+', 1}, {"e2", '+', 1}, {"e3", '-', 1}},
              {{"w1", '+', 0}, {"w2", '-', 0}, {"w3", '-', 0}, {"w4", '+', 0}},
              {{"w2", "w3", 2}, {"e1", "w1", 1}, {"e1", "e2", 1}, {"e2", "w4", 2}, {"e3", "w2", 1}, {"e3", "w3", 1}});
}

Matrix a_odd_minus(long n) {
  Q h(n, 2);
  h.canonicalize();
  return Matrix{{h, h}, {h, h}};
}

Matrix a_odd_plus(long n) {
  return Matrix{{Q(2 * n - 1, 2 * n), Q(1, 2 * n)}, {Q(1, 2 * n), Q(2 * n - 1, 2 * n)}};
}

Matrix d_even_minus(long n) {
  Q a(n + 1, 2), b(n, 2);
  a.canonicalize();
  b.canonicalize();
  return Matrix{{1, Q(1, 2), Q(1, 2)}, {Q(1, 2), a, b}, {Q(1, 2), b, a}};
}

struct Entry {
  std::string name;
  long mu;
  long r, rho, delta;
  std::function<AGDiagram()> diagram;
  Matrix expected;
  std::string notes;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    for (long n = 1; n <= 3; ++n) {
      const std::string k = std::to_string(2 * n - 1);
      const int p = static_cast<int>(2 * n);
      t.push_back({"A" + k + "-", 2 * n - 1, 2, 2, n, [p] { return negate(chebyshev_diagram(p, 2)); }, a_odd_minus(n),
                   "-x^" + std::to_string(p) + " + y^2"});
      t.push_back({"A" + k + "+", 2 * n - 1, 2, 2, n, [p] { return chebyshev_diagram(p, 2); }, a_odd_plus(n),
                   "x^" + std::to_string(p) + " - y^2"});
      t.push_back({"A" + k + "o-", 2 * n - 1, 2, 0, n, [n] { return dot_chain(static_cast<int>(n)); },
                   Matrix{{Q(2 * n - 2)}}, "x^" + std::to_string(p) + " + y^2"});
      t.push_back({"A" + k + "o+", 2 * n - 1, 2, 0, n, [n] { return negate(dot_chain(static_cast<int>(n))); }, Matrix(0, 0),
                   "-x^" + std::to_string(p) + " - y^2; no positive boundary region, the form lives on a zero space"});
    }
    for (long n = 1; n <= 2; ++n) {
      const std::string k = std::to_string(2 * n);
      const int p = static_cast<int>(2 * n + 1);
      t.push_back({"A" + k + "-", 2 * n, 1, 1, n, [p] { return negate(chebyshev_diagram(p, 2)); }, Matrix{{Q(2 * n)}},
                   "x^" + std::to_string(p) + " + y^2"});
      t.push_back({"A" + k + "+", 2 * n, 1, 1, n, [p] { return chebyshev_diagram(p, 2); }, Matrix{{Q(2 * n, 2 * n + 1)}},
                   "x^" + std::to_string(p) + " - y^2"});
    }
    t.push_back({"D4-", 4, 3, 3, 3, d4_minus, d_even_minus(1), "x(x^2 - y^2)"});
    t.push_back({"D4+", 4, 3, 1, 3, d4_plus, Matrix{{Q(2)}}, "x(x^2 + y^2)"});
    t.push_back({"D6-", 6, 3, 3, 4, d6_minus, d_even_minus(2), "x(x^4 - y^2)"});
    t.push_back({"D6+", 6, 3, 1, 4, d6_plus, Matrix{{Q(4)}}, "x(x^4 + y^2)"});
    t.push_back({"D5-", 5, 2, 2, 3, d5_minus, Matrix{{Q(3), Q(1)}, {Q(1), Q(1)}}, "x(x^3 + y^2)"});
    t.push_back({"D5+", 5, 2, 2, 3, [] { return negate(d5_minus()); }, Matrix{{Q(5, 4), Q(3, 4)}, {Q(3, 4), Q(5, 4)}},
                 "-x(x^3 + y^2)"});
    t.push_back({"D7-", 7, 2, 2, 4, d7_minus, Matrix{{Q(5), Q(1)}, {Q(1), Q(1)}}, "x(x^5 + y^2)"});
    t.push_back({"D7+", 7, 2, 2, 4, [] { return negate(d7_minus()); }, Matrix{{Q(7, 4), Q(5, 4)}, {Q(5, 4), Q(7, 4)}},
                 "-x(x^5 + y^2)"});
    t.push_back({"E6-", 6, 1, 1, 3, [] { return chebyshev_diagram(4, 3); }, Matrix{{Q(6)}}, "x^4 - y^3"});
    t.push_back({"E6+", 6, 1, 1, 3, [] { return negate(chebyshev_diagram(4, 3)); }, Matrix{{Q(2)}}, "-x^4 + y^3"});
    t.push_back({"E7", 7, 2, 2, 4, e7, Matrix{{Q(7, 2), Q(3, 2)}, {Q(3, 2), Q(3, 2)}}, "y(x^3 - y^2)"});
    t.push_back({"E8", 8, 1, 1, 4, [] { return chebyshev_diagram(5, 3); }, Matrix{{Q(8)}}, "x^5 - y^3"});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : entries()) n.push_back(e.name);
    return n;
  }();
  return names;
}

SingularityDescriptor catalog(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) {
      SingularityDescriptor s;
      s.name = e.name;
      s.diagram = e.diagram();
      s.expected_m = form("m", e.expected);
      s.block_sign = 1;
      s.mu = e.mu;
      s.branches = e.r;
      s.real_branches = e.rho;
      s.delta = e.delta;
      s.mu_minus = e.mu;
      s.notes = e.notes;
      return s;
    }
  throw InputError("unknown singularity '" + name + "'");
}

}  // namespace avk
