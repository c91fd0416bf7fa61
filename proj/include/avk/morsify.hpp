#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "avk/qforms.hpp"

namespace avk {

struct Region {
  std::string label;
  int sign = 1;
  Rational chi_minus_rs;  // χ_c of the region with its boundary arcs removed
};

/* Regions of a morsified real curve in the Milnor disc, with the saddle
   points they share. Saddle keys are sorted pairs; (a, a) records a saddle
   where region a touches itself. */
struct AGDiagram {
  long rho = 0;
  std::vector<Region> inner;
  std::vector<Region> outer;
  std::map<std::pair<std::string, std::string>, long> saddles;
  std::map<std::string, long> same_sign_boundary;

  std::vector<Region> regions() const;  // inner first, then outer
  const Region& region(const std::string& label) const;
  long saddle_count(const std::string& a, const std::string& b) const;
  void set_saddles(const std::string& a, const std::string& b, long n);
};

// Structural checks; throws InputError.
void validate(const AGDiagram& d);

struct DiagramCounts {
  long saddles = 0;  // each saddle is seen twice, once per sign
  long pinches = 0;
  long mu = 0;       // 2·saddles − ρ + 1
  Rational chi_sum;
  bool disc_ok = false;  // Σχ = 1 + saddles − ρ − pinches
};
DiagramCounts diagram_counts(const AGDiagram& d);

SymmetricForm build_qtau(const AGDiagram& d);
bool is_qis(const AGDiagram& d);
bool is_qbaris(const AGDiagram& d);

struct BoundaryResidue {
  SymmetricForm q;        // over outer labels
  SymmetricForm q_plus;
  SymmetricForm q_minus;
  SymmetricForm q_bar;    // 2·q_plus
};
BoundaryResidue boundary_residue(const AGDiagram& d);
// Positive part only; needs just the positive inner block to be nondegenerate.
SymmetricForm boundary_residue_bar(const AGDiagram& d);

AGDiagram negate(const AGDiagram& d);
// Divide of T_p(x) − T_q(y) on the square, p, q ≥ 2.
AGDiagram chebyshev_diagram(int p, int q);
// x^{2n} + y^2 perturbed into n negative lobes in a row.
AGDiagram dot_chain(int n);

struct SingularityDescriptor {
  std::string name;
  AGDiagram diagram;
  SymmetricForm expected_m;
  int block_sign = 1;  // sign block of the boundary residue that expected_m describes
  long mu = 0;
  long branches = 0;       // complex branches r_x
  long real_branches = 0;  // ρ_x
  long delta = 0;          // from the multiplicity sequence, independent of μ
  // Inertia of the Milnor form of the double point w² = f: negative definite for simple germs.
  long mu_plus = 0, mu_minus = 0, mu_zero = 0;
  std::string notes;
};

const std::vector<std::string>& catalog_names();
SingularityDescriptor catalog(const std::string& name);

}  // namespace avk
