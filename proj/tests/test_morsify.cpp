#include <doctest.h>

#include "avk/morsify.hpp"

using namespace avk;

namespace {
Rational R(long p, long q = 1) { return make_rational(p, q); }
}

TEST_CASE("every catalog entry is self-consistent") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const auto s = catalog(n);
    CHECK_NOTHROW(validate(s.diagram));
    const auto c = diagram_counts(s.diagram);
    CHECK(c.disc_ok);
    CHECK(c.mu == s.mu);
    CHECK(s.mu_plus + s.mu_minus + s.mu_zero == s.mu);
    CHECK(is_qis(s.diagram));
    CHECK(is_qbaris(s.diagram));
    const auto r = boundary_residue(s.diagram);
    const auto& block = s.block_sign > 0 ? r.q_plus : r.q_minus;
    CHECK(signed_perm_congruent(block, s.expected_m).has_value());
    CHECK(r.q_bar.gram() == 2 * r.q_plus.gram());
  }
}

TEST_CASE("catalog expectations") {
  CHECK(catalog("A1-").expected_m.gram() == Matrix{{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}});
  CHECK(catalog("E7").expected_m.gram() == Matrix{{R(7, 2), R(3, 2)}, {R(3, 2), R(3, 2)}});
  CHECK(catalog("D4-").expected_m.gram() ==
        Matrix{{1, R(1, 2), R(1, 2)}, {R(1, 2), 1, R(1, 2)}, {R(1, 2), R(1, 2), 1}});
  CHECK_THROWS_AS(catalog("Z99"), InputError);
}

TEST_CASE("tau form of the cusp") {
  const auto d = catalog("A2-").diagram;
  const auto q = build_qtau(d);
  CHECK(q.gram() == Matrix{{R(-3, 2), R(1, 2), 0}, {R(1, 2), R(1, 2), 0}, {0, 0, 2}});
  const auto r = boundary_residue(d);
  CHECK(r.q.dim() == 2);
  CHECK(r.q_plus.gram() == Matrix{{2}});
  CHECK(r.q_minus.gram() == Matrix{{R(2, 3)}});
}

TEST_CASE("tau form of the node") {
  const auto q = build_qtau(catalog("A1-").diagram);
  const auto r = boundary_residue(catalog("A1-").diagram);
  CHECK(q == r.q);
  for (std::size_t i = 0; i < 4; ++i) CHECK(q.gram()(i, i) == R(1, 2));
}

TEST_CASE("isolated oval diagrams") {
  const auto d = catalog("A3o-").diagram;
  CHECK(build_qtau(d).gram() == Matrix{{R(-3, 2), R(1, 2), 0}, {R(1, 2), R(-3, 2), 0}, {0, 0, 2}});
  CHECK(is_qis(d));
  CHECK(boundary_residue(d).q_plus.gram() == Matrix{{2}});
  CHECK(boundary_residue(catalog("E8").diagram).q_plus.gram() == Matrix{{8}});
}

TEST_CASE("degenerate inner block") {
  AGDiagram d;
  d.rho = 0;
  d.inner = {{"u", -1, 0}};
  d.outer = {{"w0", 1, 1}};
  CHECK_FALSE(is_qis(d));
  CHECK_THROWS(boundary_residue(d));
}

TEST_CASE("negation swaps the sign blocks") {
  const auto d = catalog("A2-").diagram;
  const auto n = negate(d);
  CHECK(boundary_residue(n).q_minus.gram() == boundary_residue(d).q_plus.gram());
  CHECK(boundary_residue(n).q_plus.gram() == boundary_residue(d).q_minus.gram());
}

TEST_CASE("generated diagrams") {
  const auto c = chebyshev_diagram(2, 3);
  CHECK(diagram_counts(c).mu == 2);
  CHECK(diagram_counts(c).disc_ok);
  CHECK(diagram_counts(dot_chain(2)).mu == 3);
}
