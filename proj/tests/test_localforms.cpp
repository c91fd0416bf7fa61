#include <doctest.h>

#include <stdexcept>

#include "avk/localforms.hpp"

using namespace avk;

TEST_CASE("identity seed") {
  const Matrix s = lambda_identity_seed();
  CHECK(s(0, 0) == 1);
  CHECK(s(1, 1) == s(0, 0));
  CHECK(s(0, 1) == -1);
  CHECK(s(1, 0) == 1);
}

TEST_CASE("normal crossing values") {
  CHECK(lambda_normal_crossing(2, {1, 1}, {1, 1}) == make_rational(-1, 2));
  CHECK(lambda_normal_crossing(2, {1, 1}, {-1, -1}) == make_rational(-1, 2));
  CHECK(lambda_normal_crossing(1, {1}, {1}) == 1);
  CHECK_THROWS_AS(lambda_normal_crossing(2, {1}, {1, 1}), InputError);
  for (int d = 1; d <= 3; ++d)
    for (const auto& a : sign_vectors(d))
      for (const auto& b : sign_vectors(d)) CHECK(lambda_complex_line_consistent(d, a, b));
}

TEST_CASE("sign vectors") {
  const auto v = sign_vectors(2);
  REQUIRE(v.size() == 4);
  CHECK(v.front() == SignVector{1, 1});
  CHECK(v.back() == SignVector{-1, -1});
  CHECK(sector_label({1, -1}) == "+-");
  CHECK(sign_of_vector({1, -1, -1}) == 1);
}

TEST_CASE("product of seeds reproduces the normal crossing form") {
  const auto one = lambda_normal_crossing_form(1);
  auto acc = one;
  for (int d = 2; d <= 4; ++d) {
    acc = lambda_product(acc, one);
    const auto direct = lambda_normal_crossing_form(d);
    REQUIRE(acc.form.dim() == direct.form.dim());
    CHECK(acc.form.gram() == direct.form.gram());
  }
}

TEST_CASE("same-sign entries are symmetric, opposite-sign entries antisymmetric") {
  for (int d = 1; d <= 3; ++d) {
    const auto f = lambda_normal_crossing_form(d);
    const auto n = f.form.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& g = f.form.gram();
        if (f.signs[i] == f.signs[j])
          CHECK(g(i, j) == g(j, i));
        else
          CHECK(g(i, j) == -g(j, i));
      }
  }
}

TEST_CASE("chi form") {
  SectorSystem one;
  one.sectors = {{"a", 1, 1}};
  CHECK(chi_form(one).form.gram() == Matrix{{1}});
  SectorSystem two;
  two.sectors = {{"a", 1, 1}, {"b", 1, 1}};
  two.chi_pair[{"a", "b"}] = 2;
  CHECK(chi_form(two).form.at("a", "b") == 1);
}

TEST_CASE("residue form of the node") {
  const auto s = node_sectors();
  const auto q = residue_form(lambda_node(), s);
  CHECK(q.kind == FormKind::q);
  for (std::size_t i = 0; i < q.form.dim(); ++i) CHECK(q.form.gram()(i, i) == make_rational(1, 2));
  for (std::size_t i = 0; i < q.form.dim(); ++i)
    for (std::size_t j = 0; j < q.form.dim(); ++j)
      if (q.signs[i] != q.signs[j]) CHECK(q.form.gram()(i, j) == 0);
  const auto qb = residue_form_bar(q);
  CHECK(qb.form.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(qb.form.gram()(i, j) == 1);
}

TEST_CASE("residue of a thin cusp sector") {
  SectorSystem s;
  s.sectors = {{"w", -1, 1}};
  LocalForm lam;
  lam.form = SquareForm({"w"}, Matrix{{1}});
  lam.signs = {-1};
  CHECK(residue_form(lam, s).form.gram() == Matrix{{2}});
}

TEST_CASE("cross-sign coupling is rejected") {
  SectorSystem s;
  s.sectors = {{"a", 1, 1}, {"b", -1, 1}};
  LocalForm lam;
  lam.form = SquareForm({"a", "b"}, Matrix{{1, 1}, {1, 1}});
  lam.signs = {1, -1};
  CHECK_THROWS_WITH(residue_form(lam, s), doctest::Contains("opposite sign"));
}

TEST_CASE("relative twist") {
  const auto q = residue_form(lambda_node(), node_sectors());
  std::map<std::string, int> same;
  for (const auto& l : q.form.basis()) same[l] = 0;
  CHECK(relative_twist(q, same).form == q.form);
  auto split = same;
  split[q.form.basis()[0]] = 1;
  const auto t = relative_twist(q, split);
  CHECK(t.form.gram()(0, 1) == -q.form.gram()(0, 1));
  CHECK(t.form.gram()(0, 0) == q.form.gram()(0, 0));
  CHECK(inertia(SymmetricForm(t.form)) == inertia(SymmetricForm(q.form)));
}

TEST_CASE("opposite-sign values") {
  const auto s = node_sectors();
  CHECK(lambda_opposite_sign_value(s, "++", "+-", 1) == make_rational(-1, 2));
  // the node basis flips the (+,+) generator, so compare with the node form itself
  CHECK(lambda_opposite_sign_value(s, "++", "+-", 1) == lambda_node().form.at("++", "+-"));
  CHECK(abs(lambda_normal_crossing(2, {1, 1}, {1, -1})) == make_rational(1, 2));
  SectorSystem apart;
  apart.sectors = {{"a", 1, 1}, {"b", -1, 1}};
  CHECK(lambda_opposite_sign_value(apart, "a", "b", 1) == 0);
  CHECK_THROWS(lambda_opposite_sign_value(s, "++", "--", 1));
}
