#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avk/qforms.hpp"

namespace avk {

struct Arrangement {
  int d = 2;
  std::vector<std::vector<Rational>> hyperplanes;  // each has d + 1 coefficients
  std::size_t m() const { return hyperplanes.size(); }
};

// Integer coefficients in [-9, 9], redrawn until generic.
Arrangement random_generic_arrangement(std::size_t m, int d, unsigned seed);

// Throws InputError naming a dependent subset.
void validate_generic(const Arrangement& a);

using Covector = std::vector<int>;  // entries in {-1, 0, 1}; the larger of ±c represents the cell

struct Cell {
  Covector covector;
  int dim = 0;
};

struct CellComplex {
  int d = 0;
  std::size_t m = 0;
  std::vector<Cell> cells;      // sorted by dimension, then covector
  std::vector<std::size_t> regions;  // indices into cells of the top cells

  int region_sign(std::size_t region) const;  // product of the covector entries
  Labels region_labels() const;               // "r1", "r2", ...
  std::vector<std::size_t> cells_of_dim(int k) const;
};

// 1 if c ≤ b, -1 if -c ≤ b, 0 if c is not in the closure of b.
int face_sign(const Covector& c, const Covector& b);

CellComplex enumerate_cells(const Arrangement& a);
long region_count(long m, long d);

struct FacePolynomial {
  std::vector<long> f;  // f[k] = number of k-cells
  Rational eval(const Rational& t) const;
  int top_dim() const { return static_cast<int>(f.size()) - 1; }
};

struct FaceComponent {
  std::vector<std::size_t> cells;
  FacePolynomial poly;
};

// Connected components of the closed intersection of two regions (given as
// positions in CellComplex::regions).
std::vector<FaceComponent> face_polynomial(const CellComplex& c, std::size_t i, std::size_t j);

struct PhiResult {
  std::string route;
  SymmetricForm form;  // over region labels
  SymmetricForm plus, minus;
  std::vector<int> signs;
  std::optional<std::size_t> omega;
};

std::optional<std::size_t> omega_for(const Arrangement& a);

PhiResult phi_face_route(const Arrangement& a);
PhiResult phi_integral_route(const Arrangement& a);
PhiResult phi_residue_route(const Arrangement& a);

// 2χ(closure of the regions of sign eps) - χ(union of the hyperplanes).
long chi_double_cover(const CellComplex& c, int eps);

// Inertia of the sign-eps block of φ for 2k generic lines in the plane.
InertiaTriple predict_arrangement_inertia(long m, long chi_rx_eps);
long smith_bound_N(long m, long d);

}  // namespace avk
