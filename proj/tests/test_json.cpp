#include <doctest.h>

#include "avk/json_io.hpp"

using namespace avk;

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json("3/6"), "x") == make_rational(1, 2));
  CHECK(rational_from_json(Json(-4), "x") == -4);
  CHECK(rational_to_json(make_rational(-2, 4)) == Json("-1/2"));
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), InputError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "x"), InputError);
}

TEST_CASE("malformed text reports a position") {
  try {
    parse_json("{\"a\": [1, 2", "t");
    FAIL("no throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(check_schema(Json{{"schema", "other-9"}}, "t"), InputError);
  CHECK_NOTHROW(check_schema(Json{{"schema", kSchema}}, "t"));
}

TEST_CASE("forms round trip") {
  const SymmetricForm f({"a", "b"}, Matrix{{make_rational(1, 2), 1}, {1, -3}});
  CHECK(form_from_json(form_to_json(f)) == f);
  CHECK_THROWS_AS(form_from_json(Json{{"basis", {"a"}}, {"gram", {{"1", "2"}}}}), InputError);
}

TEST_CASE("diagrams round trip") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const auto d = catalog(n).diagram;
    const auto back = diagram_from_json(diagram_to_json(d));
    CHECK(build_qtau(back) == build_qtau(d));
  }
}

TEST_CASE("graphs and surface data round trip") {
  const auto g = chain_graph({make_rational(-2), make_rational(-2)});
  CHECK(graph_from_json(graph_to_json(g)).gram() == g.gram());
  BoundarySurfaceData b;
  b.pieces = {{"p", 1}, {"q", 1}};
  b.walls = {{make_rational(-1), 1, "p", "q"}};
  CHECK(lambda_from_resolution(surface_data_from_json(surface_data_to_json(b))) == lambda_from_resolution(b));
}

TEST_CASE("arrangements round trip") {
  const auto a = random_generic_arrangement(6, 2, 4);
  const auto back = arrangement_from_json(arrangement_to_json(a));
  CHECK(back.hyperplanes == a.hyperplanes);
  CHECK(phi_to_json(phi_residue_route(a))["form"] == form_to_json(phi_residue_route(a).form));
}

TEST_CASE("curve models round trip") {
  for (bool same : {true, false}) {
    const auto m = pentic_line_model(same, 2, !same);
    const auto back = curve_model_from_json(curve_model_to_json(m));
    CHECK(assemble_phi(back).form == assemble_phi(m).form);
  }
  const auto c = curve_model_from_arrangement(random_generic_arrangement(4, 2, 1));
  CHECK(assemble_phi(curve_model_from_json(curve_model_to_json(c))).form == assemble_phi(c).form);
}

TEST_CASE("invariants round trip") {
  const auto ci = model_invariants(pentic_line_model(false, 2, false), 2, 1, 0);
  const auto back = invariants_from_json(invariants_to_json(ci));
  CHECK(back.values.values() == ci.values.values());
  CHECK(back.points.size() == ci.points.size());
  InvariantBundle b;
  b.set("k", 3);
  b.set_table("betti", {1, 0, 1});
  const auto bb = bundle_from_json(bundle_to_json(b));
  CHECK(bb.values() == b.values());
  CHECK(bb.tables() == b.tables());
}
