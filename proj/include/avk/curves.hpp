#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avk/arrangements.hpp"
#include "avk/bounds.hpp"
#include "avk/qforms.hpp"

namespace avk {

struct CurveRegion {
  std::string label;
  int sign = 1;
  Rational chi_c_open;         // χ_c of the region with the curve removed
  bool omega_nonzero = false;  // ω restricts nontrivially: left out of the forms
};

enum class ResidueKind { Q, QBar };

/* One singular point: its residue form over local sectors and where each
   sector lands globally. Side bits record on which side of Ω a sector lies;
   they are left empty when Ω misses the point. */
struct SingularPointBinding {
  std::string point;
  std::string source;  // catalog name, or empty for an explicit residue
  ResidueKind kind = ResidueKind::Q;
  SymmetricForm residue;
  std::map<std::string, int> sector_sign;
  std::map<std::string, std::string> sector_to_region;
  std::map<std::string, int> side;
};

struct CurveModel {
  long k = 1;  // degree 2k
  std::vector<CurveRegion> regions;
  std::vector<SingularPointBinding> points;
  bool omega_empty = true;
  std::optional<Rational> chi_curve;  // χ(RA); enables the χ(RP²) = 1 check
};

void validate(const CurveModel& m);

// Residue q of a catalog entry; outer sector labels are renamed through
// sector_to_region's keys, which must be the diagram's outer labels.
SingularPointBinding bind_catalog(const std::string& point, const std::string& name,
                                  const std::map<std::string, std::string>& sector_to_region,
                                  const std::map<std::string, int>& side = {});

// φ = Σ_x q(w_i(x), w_j(x)) − 2χ_c(W_i∖RA)δ_ij, twisted across Ω.
PhiResult assemble_phi(const CurveModel& m);
// Positive regions only, from q̄ = 2q₊ (or a supplied q̄), self-term −4χ_c.
SymmetricForm assemble_phi_bar(const CurveModel& m);

CurveModel curve_model_from_arrangement(const Arrangement& a);

struct SingularityData {
  std::string label;
  long mu = 0, r = 1, rho = 1, delta = 0;
  bool real = true;
};

struct CurveInvariants {
  InvariantBundle values;
  std::vector<SingularityData> points;
};

struct CheckRow {
  std::string id;
  Rational lhs, rhs;
  bool pass() const { return lhs == rhs; }
};

// Milnor relation per point plus the four global relations whose data is present.
std::vector<CheckRow> milnor_pluecker_validate(const CurveInvariants& ci);

// Invariants of one catalog germ viewed as the only singular point.
CurveInvariants catalog_bundle(const std::string& name);

// Plane-curve bundle for a model: region data per sign, χ(RA), g_a and
// Milnor numbers from the catalog names of the bound points.
CurveInvariants model_invariants(const CurveModel& m, long r, long nu, long g);

struct GapReport {
  Rational delta;
  std::vector<std::string> notes;  // hypotheses the formula assumes that the data contradicts
};
// Gap of the ε-side from the global invariants alone.
GapReport gap_delta(const CurveInvariants& ci, int eps);

// Sum of the three gaps read off the curve bounds for a given inertia.
Rational gap_from_inertia(const CurveInvariants& ci, int eps, const InertiaTriple& t);

struct SharpnessReport {
  std::vector<std::pair<int, long>> radical_rank;  // per sign block
  long expected = 0;                               // r − 1
  bool matches() const;
};
SharpnessReport sharpness_check(const CurveModel& m, long r);

CurveModel conic_model();
// Three-cusped quartic, inside negative; cusps_inward puts the thin cusp
// sectors inside the oval as on the real deltoid.
CurveModel three_cusp_quartic_model(bool cusps_inward);

/* A rational pentic with three A4 cusps and the line through two of them.
   same_side: the two cusps on the line point into the same half-plane.
   cusp_edge picks the arc of the pentic carrying the third cusp (0..2);
   thin_positive puts that cusp's thin sector in the positive region. */
CurveModel pentic_line_model(bool same_side, int cusp_edge, bool thin_positive);

struct PenticCase {
  std::string name;
  bool same_side = false;
  int cusp_edge = 0;
  bool thin_positive = false;
  InertiaTriple plus, minus;
  long nullity() const { return plus.zero + minus.zero; }
};
struct PenticReport {
  std::vector<PenticCase> cases;
  bool same_side_excluded = false;    // every same-side placement gives a nonsingular φ
  bool opposite_consistent = false;   // some opposite-side placement has radical rank r − 1 per block
};
PenticReport pentic_line_analysis();

}  // namespace avk
