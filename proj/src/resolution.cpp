#include "avk/resolution.hpp"

#include <set>

namespace avk {

SymmetricForm WeightedGraph::gram() const {
  Labels l;
  for (const auto& v : vertices) l.push_back(v.label);
  Matrix m(l.size(), l.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) m(i, i) = vertices[i].weight;
  SquareForm idx(l, m);
  for (const auto& e : edges) {
    const std::size_t i = idx.index_of(e.a), j = idx.index_of(e.b);
    if (i == j) throw InputError("edge from '" + e.a + "' to itself");
    m(i, j) += e.number;
    m(j, i) += e.number;
  }
  return SymmetricForm(l, m);
}

WeightedGraph chain_graph(const std::vector<Rational>& weights, const std::string& prefix) {
  WeightedGraph g;
  const Labels l = labels_with_prefix(prefix, weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g.vertices.push_back({l[i], weights[i], true});
    if (i > 0) g.edges.push_back({l[i - 1], l[i], 1});
  }
  return g;
}

SymmetricForm contract(const SymmetricForm& g, const Labels& subset) { return complement_form(g, subset); }

SymmetricForm contract(const WeightedGraph& g, const Labels& subset) { return contract(g.gram(), subset); }

Rational chain_self_intersection(const std::vector<Rational>& weights) {
  if (weights.empty()) throw InputError("empty chain");
  Rational x = weights.back();
  for (std::size_t k = weights.size() - 1; k-- > 0;) {
    if (x == 0) throw CheckFailure("chain tail is degenerate");
    x = weights[k] - 1 / x;
  }
  return x;
}

void validate(const BoundarySurfaceData& b) {
  std::set<std::string> seen;
  for (const auto& p : b.pieces)
    if (!seen.insert(p.label).second) throw InputError("duplicate piece '" + p.label + "'");
  for (const auto& w : b.walls) {
    if (!seen.count(w.left) || !seen.count(w.right)) throw InputError("wall adjacent to an unknown piece");
    if (w.epsilon != 1 && w.epsilon != -1) throw InputError("wall epsilon must be +1 or -1");
  }
}

SymmetricForm lambda_from_resolution(const BoundarySurfaceData& b) {
  validate(b);
  Labels l;
  for (const auto& p : b.pieces) l.push_back(p.label);
  const std::size_t n = l.size();
  Matrix m(n, n);
  SquareForm idx(l, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = -b.pieces[i].chi;
  for (const auto& w : b.walls) {
    const Rational ea = w.epsilon * w.alpha;
    const std::size_t i = idx.index_of(w.left), j = idx.index_of(w.right);
    if (i == j) {
      // Both sides of the wall lie on one piece: the boundary meets it twice.
      m(i, i) += ea;
    } else {
      m(i, i) += ea / 4;
      m(j, j) += ea / 4;
      m(i, j) -= ea / 4;
      m(j, i) -= ea / 4;
    }
  }
  return SymmetricForm(l, m);
}

SymmetricForm residue_from_lambda(const SymmetricForm& lambda) {
  return SymmetricForm(lambda.basis(), lambda.gram() + Matrix::identity(lambda.dim()));
}

Rational lambda_imaginary_exceptional(const Rational& alpha) {
  if (alpha == 0) throw InputError("alpha must be nonzero");
  return -4 / alpha - 1;
}

QuasicuspidalResidue quasicuspidal_residue(long g) {
  if (g < 0) throw InputError("genus must be non-negative");
  return {Rational(2 * g - 1), Rational(2 * g)};
}

namespace {

SymmetricForm one_by_one(const Rational& x) { return SymmetricForm({"m1"}, Matrix{{x}}); }

// x^{2n} - y^2: the middle curve of the A_{2n-1} chain is real, the two side
// chains are swapped by conjugation and get contracted.
SymmetricForm a_odd_plus(long n) {
  const WeightedGraph g = chain_graph(std::vector<Rational>(2 * n - 1, Rational(-2)), "v");
  Labels sides;
  for (long k = 1; k <= 2 * n - 1; ++k)
    if (k != n) sides.push_back("v" + std::to_string(k));
  const Rational alpha = contract(g, sides).gram()(0, 0);
  BoundarySurfaceData b{{{"g1", 0}, {"g2", 0}}, {{alpha, 1, "g1", "g2"}}};
  return residue_from_lambda(lambda_from_resolution(b));
}

// -x^{2n} + y^2: all n walls are real (-2)-curves between two pieces.
SymmetricForm a_odd_minus(long n) {
  BoundarySurfaceData b{{{"g1", Rational(1 - n)}, {"g2", Rational(1 - n)}}, {}};
  for (long k = 0; k < n; ++k) b.walls.push_back({Rational(-2), 1, "g1", "g2"});
  return residue_from_lambda(lambda_from_resolution(b));
}

}  // namespace

std::vector<std::string> resolution_route_names() {
  return {"A1+", "A3+", "A5+", "A1-", "A3-", "A5-", "A2-", "A4-", "D4+", "D6+", "E6+", "E8"};
}

std::optional<SymmetricForm> resolution_route(const std::string& name) {
  for (long n = 1; n <= 3; ++n) {
    const std::string k = std::to_string(2 * n - 1);
    if (name == "A" + k + "+") return a_odd_plus(n);
    if (name == "A" + k + "-") return a_odd_minus(n);
  }
  // Quasicuspidal cases: the real curve has 2g components.
  if (name == "A2-") return one_by_one(quasicuspidal_residue(1).q_plus);
  if (name == "A4-") return one_by_one(quasicuspidal_residue(2).q_plus);
  if (name == "D4+") return one_by_one(quasicuspidal_residue(1).q_plus);
  if (name == "D6+") return one_by_one(quasicuspidal_residue(2).q_plus);
  if (name == "E6+") return one_by_one(quasicuspidal_residue(1).q_plus);
  if (name == "E8") return one_by_one(quasicuspidal_residue(4).q_plus);
  return std::nullopt;
}

}  // namespace avk
