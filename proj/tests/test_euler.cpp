#include <doctest.h>

#include <random>

#include "avk/euler.hpp"

using namespace avk;

namespace {

SimplicialComplex circle() { return SimplicialComplex::from_simplices({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

ConstructibleFunction constant(const SimplicialComplex& k, const Rational& v) {
  ConstructibleFunction f;
  for (const auto& s : k.simplices()) f[s] = v;
  return f;
}

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<std::string> v;
  for (int i = 0; i <= n + 1; ++i) v.push_back("v" + std::to_string(i));
  std::vector<Simplex> faces;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<std::string> f;
    for (int i = 0; i <= n + 1; ++i)
      if (i != skip) f.push_back(v[i]);
    faces.push_back(make_simplex(f));
  }
  return SimplicialComplex::from_simplices(faces);
}

}  // namespace

TEST_CASE("compactly supported integrals") {
  const auto interval = SimplicialComplex::from_simplices({{"a", "b"}});
  CHECK(chi_c_integral(interval, constant(interval, 1)) == 1);
  CHECK(chi_c_integral(circle(), constant(circle(), 1)) == 0);
  CHECK(chi_c_integral(circle(), {{make_simplex({"a", "b"}), 1}}) == -1);
  CHECK(euler_characteristic(boundary_of_simplex(2)) == 2);
  CHECK(euler_characteristic(boundary_of_simplex(3)) == 0);
}

TEST_CASE("link function") {
  const auto c = circle();
  const auto fh = link_function(c, constant(c, 1));
  for (const auto& v : fh.values) CHECK(v == 2);
  const auto sphere = boundary_of_simplex(2);
  for (const auto& v : link_function(sphere, constant(sphere, 1)).values) CHECK(v == 0);
  const auto s3 = boundary_of_simplex(3);
  for (const auto& v : link_function(s3, constant(s3, 1)).values) CHECK(v == 2);

}

TEST_CASE("link integral defect vanishes") {
  const auto c = circle();
  CHECK(link_integral_defect(c, constant(c, 1)) == 0);
  const auto s = boundary_of_simplex(2);
  CHECK(link_integral_defect(s, constant(s, 1)) == 0);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int t = 0; t < 20; ++t) {
    auto k = SimplicialComplex::from_simplices({{"a", "b", "c"}, {"c", "d"}, {"d", "e", "f", "g"}, {"a", "e"}});
    ConstructibleFunction f;
    for (const auto& x : k.simplices()) f[x] = make_rational(val(rng), 1 + rng() % 3);
    CHECK(link_integral_defect(k, f) == 0);
  }
}

TEST_CASE("linearity of the integral") {
  const auto k = SimplicialComplex::from_simplices({{"a", "b", "c"}, {"c", "d"}});
  ConstructibleFunction f, g, h;
  int i = 0;
  for (const auto& s : k.simplices()) {
    f[s] = i;
    g[s] = make_rational(1, i + 1);
    h[s] = f[s] + 3 * g[s];
    ++i;
  }
  CHECK(chi_c_integral(k, h) == chi_c_integral(k, f) + 3 * chi_c_integral(k, g));
}

TEST_CASE("odd-dimensional skeleton reduction") {
  const auto c = circle();
  CHECK(odd_skeleton_reduction(c, constant(c, 1)).holds());
  const auto s3 = boundary_of_simplex(3);
  ConstructibleFunction f;
  int i = 0;
  for (const auto& s : s3.simplices()) f[s] = make_rational(i++ % 5 - 2, 3);
  CHECK(odd_skeleton_reduction(s3, f).holds());
}

TEST_CASE("integrals of link Euler characteristics") {
  const auto c = circle();
  auto one = singular_link_integral(c, {make_simplex({"a"})});
  CHECK(one.lhs == 2);
  CHECK(one.holds());
  CHECK(singular_link_integral(boundary_of_simplex(2), {}).holds());
  const auto wedge = SimplicialComplex::from_simplices({{"o", "a"}, {"a", "b"}, {"b", "o"}, {"o", "c"}, {"c", "d"}, {"d", "o"}});
  auto w = singular_link_integral(wedge, {make_simplex({"o"})});
  CHECK(w.lhs == 4);
  CHECK(w.rhs == 4);
}

TEST_CASE("region boundary identity on a triangle") {
  const auto w = SimplicialComplex::from_simplices({{"a", "b", "c"}});
  std::set<Simplex> a, s;
  for (const auto& x : w.simplices())
    if (simplex_dim(x) < 2) a.insert(x);
  for (const auto& v : {"a", "b", "c"}) s.insert(make_simplex({v}));
  const auto id = region_boundary_identity(w, a, s);
  CHECK(id.lhs == 3);
  CHECK(id.holds());
}
