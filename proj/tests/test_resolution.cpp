#include <doctest.h>

#include "avk/morsify.hpp"
#include "avk/resolution.hpp"

using namespace avk;

namespace {
Rational R(long p, long q = 1) { return make_rational(p, q); }
}

TEST_CASE("continued fractions") {
  CHECK(chain_self_intersection({R(-2)}) == -2);
  CHECK(chain_self_intersection({R(-2), R(-2)}) == R(-3, 2));
  CHECK(chain_self_intersection({R(-1), R(-2), R(-2)}) == R(-1, 3));
  CHECK_THROWS(chain_self_intersection({R(-1), R(0)}));
}

TEST_CASE("contracting a (-2)-tail") {
  for (long k = 1; k <= 5; ++k) {
    std::vector<Rational> w{R(-3)};
    for (long i = 0; i < k; ++i) w.push_back(R(-2));
    const auto g = chain_graph(w);
    Labels tail(g.vertices.size() - 1);
    for (std::size_t i = 1; i < g.vertices.size(); ++i) tail[i - 1] = g.vertices[i].label;
    const auto c = contract(g, tail);
    REQUIRE(c.dim() == 1);
    // the negative definite tail pushes the weight up
    CHECK(c.gram()(0, 0) == R(-3) + R(k, k + 1));
  }
}

TEST_CASE("lambda from a single rational curve") {
  BoundarySurfaceData two;
  // collar pieces, χ = 0, so only the wall contributes
  two.pieces = {{"p", 0}, {"q", 0}};
  two.walls = {{R(-3), 1, "p", "q"}};
  CHECK(lambda_from_resolution(two).gram() == Matrix{{R(-3, 4), R(3, 4)}, {R(3, 4), R(-3, 4)}});
  BoundarySurfaceData one;
  one.pieces = {{"p", 0}};
  one.walls = {{R(-3), 1, "p", "p"}};
  CHECK(lambda_from_resolution(one).gram() == Matrix{{-3}});
  for (long n = 1; n <= 3; ++n) {
    two.walls = {{R(-2, n), 1, "p", "q"}};
    CHECK(lambda_from_resolution(two).gram() ==
          Matrix{{R(-1, 2 * n), R(1, 2 * n)}, {R(1, 2 * n), R(-1, 2 * n)}});
  }
}

TEST_CASE("imaginary exceptional curves") {
  CHECK(lambda_imaginary_exceptional(R(-2)) == 1);
  CHECK(lambda_imaginary_exceptional(R(-4)) == 0);
  for (long n = 1; n <= 4; ++n) {
    CHECK(lambda_imaginary_exceptional(R(-2, n)) == 2 * n - 1);
    CHECK(lambda_imaginary_exceptional(R(-2, n)) == quasicuspidal_residue(n).lambda);
  }
}

TEST_CASE("quasicuspidal residues") {
  CHECK(quasicuspidal_residue(1).q_plus == 2);
  CHECK(quasicuspidal_residue(4).q_plus == 8);
  CHECK(quasicuspidal_residue(2).lambda == 3);
}

TEST_CASE("resolution route agrees with the morsification") {
  const auto names = resolution_route_names();
  CHECK(names.size() >= 3);
  for (const auto& n : names) {
    CAPTURE(n);
    const auto q = resolution_route(n);
    REQUIRE(q.has_value());
    CHECK(signed_perm_congruent(*q, boundary_residue(catalog(n).diagram).q_plus).has_value());
  }
  CHECK_FALSE(resolution_route("D5-").has_value());
}
