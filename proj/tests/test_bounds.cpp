#include <doctest.h>

#include "avk/bounds.hpp"

using namespace avk;

namespace {

const BoundRow* find_row(const BoundsReport& r, const std::string& id) {
  for (const auto& row : r.rows)
    if (row.id == id) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("classical plane constants") {
  CHECK(petrovskii_classic(1).lower == 0);
  CHECK(petrovskii_classic(1).upper == 1);
  CHECK(petrovskii_classic(2).lower == 3);
  CHECK(petrovskii_classic(2).upper == 4);
  CHECK(petrovskii_classic(3).lower == 9);
  CHECK(petrovskii_classic(3).upper == 10);
  const auto b3 = double_plane_betti(3);
  CHECK(b3.b2_plus == 3);
  CHECK(b3.b2_minus == 19);
  CHECK(b3.p_g == 1);
  const auto b1 = double_plane_betti(1);
  CHECK(b1.b2_plus == 1);
  CHECK(b1.b2_minus == 1);
  CHECK(b1.p_g == 0);
  CHECK(double_plane_betti(2).p_g == 0);
  CHECK(double_plane_betti(2).b2_minus == 7);
}

TEST_CASE("hodge identities of the double plane") {
  for (long k = 2; k <= 5; ++k) {
    const auto b = double_plane_betti(k);
    InvariantBundle iv;
    iv.set("n", 1);
    iv.set("b_plus_cx", b.b2_plus);
    iv.set("b_minus_cx", b.b2_minus);
    iv.set("chi_rx", 0);
    iv.set("complete_intersection", 1);
    const auto r = hodge_identities(iv);
    const auto* lo = find_row(r, "b^-kappa(X bar)");
    const auto* hi = find_row(r, "b^kappa(X bar)");
    REQUIRE(lo);
    REQUIRE(hi);
    CHECK(lo->rhs == b.p_g);
    CHECK(hi->rhs == make_rational(3 * k * (k - 1), 2));
  }
  InvariantBundle bad;
  bad.set("n", 1);
  CHECK_THROWS_AS(hodge_identities(bad), InputError);
}

TEST_CASE("bundles report missing fields by name") {
  InvariantBundle iv;
  try {
    iv.get("chi_rx", "test");
    FAIL("no throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("chi_rx") != std::string::npos);
  }
  iv.set_table("b", {1, 2});
  CHECK(iv.table("b", 5, "test") == 0);
  CHECK(iv.get_or("x", 4) == 4);
}

TEST_CASE("arnold-viro variants all evaluate on plane data") {
  const auto& v = arnold_viro_variants();
  CHECK(v.size() >= 8);
  CHECK_THROWS_AS(arnold_viro_rhs("nope", InvariantBundle()), InputError);
}

TEST_CASE("cuspidal bounds") {
  InvariantBundle iv;
  iv.set("k", 3);
  iv.set("eps_plus", 0);
  iv.set("eps_zero", 0);
  iv.set("eps_minus", 1);
  iv.set("mu_plus", 0);
  iv.set("mu_minus", 0);
  for (const char* f : {"odd_minus", "odd_zero", "even_minus", "even_zero", "odd_total", "even_total"}) iv.set(f, 0);
  const auto r = cuspidal_bounds(iv);
  const auto* odd = find_row(r, "cusp:odd");
  REQUIRE(odd);
  CHECK(odd->rhs == 1);
  CHECK(odd->lhs == 1);
  CHECK(r.all_ok());
  iv.set("eps_minus", 0);
  CHECK_THROWS_AS(cuspidal_bounds(iv), InputError);
}

TEST_CASE("arrangement nullity bound") {
  CHECK(arrangement_nullity_bound(4, 2) == 3);
  CHECK(arrangement_nullity_bound(8, 2) == 7);
}

TEST_CASE("row verdicts") {
  BoundRow r;
  r.rhs = 3;
  CHECK(r.verdict() == "rhs-only");
  r.lhs = Rational(2);
  CHECK(r.verdict() == "ok");
  CHECK(*r.slack() == 1);
  r.lhs = Rational(4);
  CHECK(r.verdict() == "violated");
}
