#include <doctest.h>

#include "avk/arrangements.hpp"
#include "avk/curves.hpp"
#include "avk/morsify.hpp"

using namespace avk;

namespace {
Rational R(long p, long q = 1) { return make_rational(p, q); }
}

TEST_CASE("conic") {
  const auto m = conic_model();
  CHECK_NOTHROW(validate(m));
  const auto phi = assemble_phi(m);
  CHECK(phi.plus.gram() == Matrix{{0}});
  CHECK(phi.minus.gram() == Matrix{{-2}});
  const auto ci = model_invariants(m, 1, 0, 0);
  CHECK(gap_delta(ci, 1).delta == 0);
  CHECK(gap_delta(ci, -1).delta == 1);
  CHECK(gap_from_inertia(ci, 1, inertia(phi.plus)) == 0);
  CHECK(gap_from_inertia(ci, -1, inertia(phi.minus)) == 1);
}

TEST_CASE("three-cusped quartic") {
  for (bool inward : {true, false}) {
    const auto m = three_cusp_quartic_model(inward);
    CHECK_NOTHROW(validate(m));
    for (const auto& row : milnor_pluecker_validate(model_invariants(m, 1, 0, 0))) CHECK(row.pass());
  }
  const auto m = three_cusp_quartic_model(true);
  const auto phi = assemble_phi(m);
  CHECK(phi.minus.gram() == Matrix{{0}});
  const auto ci = model_invariants(m, 1, 0, 0);
  for (int e : {1, -1}) CHECK(gap_delta(ci, e).delta == 1);
}

TEST_CASE("arrangements as curve models") {
  for (long m : {4, 6, 8}) {
    CAPTURE(m);
    const auto a = random_generic_arrangement(m, 2, 2);
    const auto cm = curve_model_from_arrangement(a);
    CHECK_NOTHROW(validate(cm));
    const auto phi = assemble_phi(cm);
    CHECK(phi.form == phi_residue_route(a).form);
    const auto sh = sharpness_check(cm, m);
    CHECK(sh.expected == m - 1);
    CHECK(sh.matches());
    const auto ci = model_invariants(cm, m, m * (m - 1) / 2, 0);
    for (const auto& row : milnor_pluecker_validate(ci)) CHECK(row.pass());
    CHECK(gap_delta(ci, 1).delta == gap_from_inertia(ci, 1, inertia(phi.plus)));
    CHECK(gap_delta(ci, -1).delta == gap_from_inertia(ci, -1, inertia(phi.minus)));
  }
}

TEST_CASE("phi bar is twice the positive block") {
  const auto m = pentic_line_model(true, 1, false);
  CHECK(assemble_phi_bar(m).gram() == 2 * assemble_phi(m).plus.gram());
  const auto pl = assemble_phi(m).plus;
  CHECK(pl.gram() == Matrix{{R(1, 4), R(5, 4), R(1, 2)}, {R(5, 4), R(11, 2), R(5, 4)}, {R(1, 2), R(5, 4), R(1, 4)}});
}

TEST_CASE("pentic with a line") {
  const auto rep = pentic_line_analysis();
  CHECK(rep.cases.size() == 12);
  CHECK(rep.same_side_excluded);
  CHECK(rep.opposite_consistent);
  for (const auto& c : rep.cases) {
    CAPTURE(c.name);
    if (c.same_side) CHECK(c.nullity() == 0);
    const auto m = pentic_line_model(c.same_side, c.cusp_edge, c.thin_positive);
    const auto ci = model_invariants(m, 2, 1, 0);
    for (const auto& row : milnor_pluecker_validate(ci)) CHECK(row.pass());
    const auto phi = assemble_phi(m);
    for (int e : {1, -1})
      CHECK(gap_delta(ci, e).delta == gap_from_inertia(ci, e, inertia(e > 0 ? phi.plus : phi.minus)));
  }
}

TEST_CASE("milnor and pluecker relations") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    for (const auto& row : milnor_pluecker_validate(catalog_bundle(n))) CHECK(row.pass());
  }
  CurveInvariants node;
  node.points = {{"x", 1, 2, 2, 1, true}};
  CHECK(milnor_pluecker_validate(node).front().pass());
  CurveInvariants cusp;
  cusp.points = {{"x", 2, 1, 1, 1, true}};
  CHECK(milnor_pluecker_validate(cusp).front().pass());
  CurveInvariants wrong;
  wrong.points = {{"x", 2, 2, 2, 1, true}};
  CHECK_FALSE(milnor_pluecker_validate(wrong).front().pass());
}

TEST_CASE("validation errors") {
  auto m = conic_model();
  m.regions.push_back(m.regions.front());
  CHECK_THROWS_AS(validate(m), InputError);

  m = conic_model();
  m.regions.front().omega_nonzero = true;
  CHECK_THROWS_AS(validate(m), InputError);

  m = conic_model();
  m.chi_curve = R(5);
  CHECK_THROWS_AS(validate(m), InputError);

  CHECK_THROWS_AS(bind_catalog("x", "A1-", {{"bogus", "r1"}}), InputError);
}
