#include <doctest.h>

#include "avk/arrangements.hpp"

using namespace avk;

TEST_CASE("cell counts") {
  const auto a = random_generic_arrangement(4, 2, 1);
  const auto c = enumerate_cells(a);
  CHECK(c.regions.size() == 7);
  CHECK(c.cells_of_dim(1).size() == 12);
  CHECK(c.cells_of_dim(0).size() == 6);
  CHECK(region_count(4, 2) == 7);
  const auto p = enumerate_cells(random_generic_arrangement(2, 1, 3));
  CHECK(p.regions.size() == 2);
  for (long m : {2, 6, 8, 10})
    CHECK(static_cast<long>(enumerate_cells(random_generic_arrangement(m, 2, 7)).regions.size()) == region_count(m, 2));
  CHECK_THROWS_AS(random_generic_arrangement(5, 2, 1), InputError);
}

TEST_CASE("non-generic input is rejected") {
  Arrangement a;
  a.hyperplanes = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK_THROWS_AS(validate_generic(a), InputError);
  CHECK_THROWS_AS(enumerate_cells(a), InputError);
}

TEST_CASE("face signs") {
  CHECK(face_sign({0, 1}, {1, 1}) == 1);
  CHECK(face_sign({0, -1}, {1, 1}) == -1);
  CHECK(face_sign({1, -1}, {1, 1}) == 0);
}

TEST_CASE("three routes agree") {
  for (long m : {4, 6, 8})
    for (unsigned seed : {1u, 2u}) {
      CAPTURE(m);
      const auto a = random_generic_arrangement(m, 2, seed);
      const auto f = phi_face_route(a), i = phi_integral_route(a), r = phi_residue_route(a);
      CHECK(f.form == i.form);
      CHECK(i.form == r.form);
    }
}

TEST_CASE("entries of the partition form") {
  const auto a = random_generic_arrangement(4, 2, 1);
  const auto c = enumerate_cells(a);
  const auto phi = phi_residue_route(a);
  bool saw_half = false;
  for (std::size_t i = 0; i < c.regions.size(); ++i)
    for (std::size_t j = 0; j < c.regions.size(); ++j) {
      if (i == j) continue;
      const auto comps = face_polynomial(c, i, j);
      const bool same = c.region_sign(i) == c.region_sign(j);
      if (!same) CHECK(phi.form.gram()(i, j) == 0);
      if (same && comps.size() == 1 && comps[0].poly.top_dim() == 0) {
        CHECK(abs(phi.form.gram()(i, j)) == make_rational(1, 2));
        saw_half = true;
      }
    }
  CHECK(saw_half);
}

TEST_CASE("predicted inertia") {
  for (long m : {4, 6, 8})
    for (unsigned seed : {1u, 2u, 3u}) {
      CAPTURE(m);
      const auto a = random_generic_arrangement(m, 2, seed);
      const auto c = enumerate_cells(a);
      const auto phi = phi_residue_route(a);
      for (int e : {1, -1}) {
        const auto t = inertia(e > 0 ? phi.plus : phi.minus);
        CHECK(t == predict_arrangement_inertia(m, chi_double_cover(c, e)));
        CHECK(t.zero == m - 1);
      }
    }
}

TEST_CASE("smith bound") {
  CHECK(smith_bound_N(4, 2) == 3);
  CHECK(smith_bound_N(6, 2) == 5);
}
