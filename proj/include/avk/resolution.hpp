#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avk/qforms.hpp"

namespace avk {

struct WeightedVertex {
  std::string label;
  Rational weight;
  bool real = true;
};

struct WeightedEdge {
  std::string a, b;
  Rational number = 1;
};

struct WeightedGraph {
  std::vector<WeightedVertex> vertices;
  std::vector<WeightedEdge> edges;

  // Plumbing form: weights on the diagonal, intersection numbers off it.
  SymmetricForm gram() const;
};

WeightedGraph chain_graph(const std::vector<Rational>& weights, const std::string& prefix = "v");

// Contracts the given vertices (orthogonal complement of their span).
SymmetricForm contract(const SymmetricForm& g, const Labels& subset);
SymmetricForm contract(const WeightedGraph& g, const Labels& subset);

// w1 - 1/(w2 - 1/(... - 1/wn)).
Rational chain_self_intersection(const std::vector<Rational>& weights);

struct SurfacePiece {
  std::string label;
  Rational chi;
};

struct Wall {
  Rational alpha;   // self-intersection of the real exceptional curve after contraction
  int epsilon = 1;
  std::string left, right;  // equal when the wall is one-sided
};

struct BoundarySurfaceData {
  std::vector<SurfacePiece> pieces;
  std::vector<Wall> walls;
};

void validate(const BoundarySurfaceData& b);
SymmetricForm lambda_from_resolution(const BoundarySurfaceData& b);
// Adds χ = 1 of each boundary disc to λ.
SymmetricForm residue_from_lambda(const SymmetricForm& lambda);

Rational lambda_imaginary_exceptional(const Rational& alpha);

struct QuasicuspidalResidue {
  Rational lambda;  // 2g - 1
  Rational q_plus;  // 2g
};
QuasicuspidalResidue quasicuspidal_residue(long g);

// Resolution-side q₊ for the catalog entries that have one, else nullopt.
std::optional<SymmetricForm> resolution_route(const std::string& name);
std::vector<std::string> resolution_route_names();

}  // namespace avk
