#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "avk/rational.hpp"

namespace avk {

using Simplex = std::vector<std::string>;  // sorted vertex labels

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Closes the given simplices downward.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }  // by dimension, then lexicographic
  bool contains(const Simplex& s) const { return index_.count(s) != 0; }
  std::size_t index_of(const Simplex& s) const;
  int dim() const;
  bool pure() const;

 private:
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
};

Simplex make_simplex(std::vector<std::string> vertices);
int simplex_dim(const Simplex& s);

// Value on each open simplex; simplices not listed carry 0.
using ConstructibleFunction = std::map<Simplex, Rational>;

Rational chi_c_integral(const SimplicialComplex& k, const ConstructibleFunction& f);
Rational euler_characteristic(const SimplicialComplex& k);

/* A function on the open simplices of the barycentric subdivision.
   A cell of the subdivision is a chain s0 < s1 < ... of simplices of K,
   stored as indices into K.simplices(). */
struct SubdividedFunction {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<Rational> values;

  Rational integral() const;  // sum of (-1)^dim value
};

// All chains of the face poset of K (cells of the barycentric subdivision).
std::vector<std::vector<std::size_t>> barycentric_cells(const SimplicialComplex& k);

// f transported to the subdivision: a chain takes the value of its top simplex.
SubdividedFunction transport(const SimplicialComplex& k, const ConstructibleFunction& f);

// f-hat: the chi_c-integral of f over the infinitesimal link of each point,
// constant on the open cells of the barycentric subdivision.
SubdividedFunction link_function(const SimplicialComplex& k, const ConstructibleFunction& f);

// Integral of f-hat; zero for every input.
Rational link_integral_defect(const SimplicialComplex& k, const ConstructibleFunction& f);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// Odd dimension d: integral of f equals the integral of f - f_hat/2 over
// the (d-1)-skeleton.
IdentityCheck odd_skeleton_reduction(const SimplicialComplex& k, const ConstructibleFunction& f);

// sub is a union of open simplices containing every point whose link is not
// a (d-1)-sphere. Integral of chi(Lk) over sub is 0 (d even) or
// -2 chi_c(K - sub) (d odd).
IdentityCheck singular_link_integral(const SimplicialComplex& k, const std::set<Simplex>& sub);

// Region w with boundary part a and singular part s (s inside a, both unions
// of open simplices). Integral over s of chi(Lk_x(w)) equals -chi_c(a - s),
// minus 2 chi_c(w - a) more when d is odd.
IdentityCheck region_boundary_identity(const SimplicialComplex& w, const std::set<Simplex>& a,
                                       const std::set<Simplex>& s);

}  // namespace avk
