#include <doctest.h>

#include <algorithm>
#include <random>

#include "avk/qforms.hpp"

using namespace avk;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

SymmetricForm diag(std::initializer_list<long> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = x;
    ++i;
  }
  return SymmetricForm(labels_with_prefix("e", d.size()), m);
}

SymmetricForm random_form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-3, 3);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = make_rational(v(rng), 1 + (i + j) % 2);
  return SymmetricForm(labels_with_prefix("e", n), m);
}

}  // namespace

TEST_CASE("inertia of small forms") {
  CHECK(inertia(diag({1, -1, 0})) == InertiaTriple{1, 1, 1});
  CHECK(inertia(SymmetricForm(labels_with_prefix("e", 2), Matrix{{0, 1}, {1, 0}})) == InertiaTriple{1, 1, 0});
  CHECK(inertia(SymmetricForm(labels_with_prefix("e", 2), Matrix{{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}})) ==
        InertiaTriple{1, 0, 1});
  CHECK(inertia(SymmetricForm(labels_with_prefix("e", 3), Matrix(3, 3))) == InertiaTriple{0, 0, 3});
  CHECK(inertia(SymmetricForm()) == InertiaTriple{0, 0, 0});
}

TEST_CASE("non-symmetric gram is rejected") {
  CHECK_THROWS_AS(SymmetricForm(labels_with_prefix("e", 2), Matrix{{1, 2}, {3, 4}}), InputError);
}

TEST_CASE("restriction") {
  const auto f = diag({1, 2, 3});
  const auto g = restrict_form(f, {"e1", "e3"});
  CHECK(g.gram() == Matrix{{1, 0}, {0, 3}});
  CHECK(restrict_form(f, {}).dim() == 0);
  CHECK_THROWS_AS(restrict_form(f, {"nope"}), InputError);
}

TEST_CASE("complement form is the Schur complement") {
  const SymmetricForm f(labels_with_prefix("e", 2), Matrix{{2, 1}, {1, 1}});
  const auto c = complement_form(f, {"e1"});
  REQUIRE(c.dim() == 1);
  CHECK(c.gram()(0, 0) == R(1, 2));
  const auto orth = complement_form(diag({2, 5}), {"e1"});
  CHECK(orth.gram()(0, 0) == 5);
  const SymmetricForm deg(labels_with_prefix("e", 3), Matrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  try {
    complement_form(deg, {"e1", "e2"});
    FAIL("degenerate block accepted");
  } catch (const DegenerateBlock& e) {
    CHECK(e.witness().size() == 2);
    CHECK(e.witness()[0] == -e.witness()[1]);
  }
}

TEST_CASE("scaled tensor products") {
  const auto one = diag({1});
  CHECK(tensor_scaled(one, one, 1).gram()(0, 0) == 1);
  const auto t = tensor_scaled(diag({1, -1}), diag({1}), -1);
  CHECK(t.gram() == Matrix{{-1, 0}, {0, 1}});
  CHECK(t.basis()[0] == "e1*e1");
}

TEST_CASE("signed permutation congruence") {
  const Labels b = labels_with_prefix("e", 2);
  const SymmetricForm a(b, Matrix{{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}});
  const SymmetricForm c(b, Matrix{{R(1, 2), R(-1, 2)}, {R(-1, 2), R(1, 2)}});
  CHECK(signed_perm_congruent(a, c).has_value());
  CHECK(signed_perm_congruent(diag({1, 2}), diag({2, 1})).has_value());
  CHECK_FALSE(signed_perm_congruent(diag({1, 1}), diag({1, -1})).has_value());
}

TEST_CASE("inertia properties on random forms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto f = random_form(rng, n);
    const auto t = inertia(f);
    CHECK(t.plus + t.minus + t.zero == static_cast<long>(n));
    CHECK(static_cast<long>(radical_basis(f).size()) == t.zero);
    for (const auto& v : radical_basis(f)) CHECK((f.gram() * v) == Vector(n));

    // random signed permutation keeps the inertia
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = rng() % 2 ? 1 : -1;
    const SymmetricForm g(f.basis(), p.transpose() * f.gram() * p);
    CHECK(inertia(g) == t);

    const auto h = random_form(rng, 2);
    const SymmetricForm g2(labels_with_prefix("f", 2), h.gram());
    const auto s = inertia(direct_sum(f, g2)), u = inertia(g2);
    CHECK(s == InertiaTriple{t.plus + u.plus, t.minus + u.minus, t.zero + u.zero});

    if (n >= 2) {
      const Labels e = {f.basis()[0]};
      if (f.gram()(0, 0) != 0) {
        const auto c = inertia(complement_form(f, e)), r = inertia(restrict_form(f, e));
        CHECK(InertiaTriple{c.plus + r.plus, c.minus + r.minus, c.zero + r.zero} == t);
      }
    }
  }
}
