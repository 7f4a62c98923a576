// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gradalg/bk.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/report.hpp"
#include "test_support.hpp"

using namespace gradalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string error_location(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const InputError& e) {
    return e.location();
  }
  return "no error";
}

}  // namespace

TEST_CASE("presentations print canonically and round trip") {
  const std::string text =
      "# comment line\n"
      "field: F7\n"
      "vars: x y z\n"
      "weights: 6 10 15\n"
      "rel: z^2 + y^3 + x^5   # trailing comment\n";
  const PresentedAlgebra alg = parse_presentation(text);
  const std::string printed = print_presentation(alg);
  CHECK(printed == "field: F7\nvars: x y z\nweights: 6 10 15\nrel: x^5 + y^3 + z^2\n");
  CHECK(parse_presentation(printed) == alg);
  CHECK(print_presentation(parse_presentation(printed)) == printed);
}

TEST_CASE("construction outputs round trip through the text format") {
  std::mt19937_64 rng(79);
  std::vector<PresentedAlgebra> algebras;
  for (int i = 0; i < 20; ++i) algebras.push_back(gradalg::testing::samuel_tower(gradalg::testing::random_bk(rng)));
  for (std::size_t n = 1; n <= 4; ++n) {
    algebras.push_back(bn_algebra(gradalg::testing::make_bn(Q, {0, 1}, std::vector<int>(n, 2),
                                                            std::vector<int>(n, 3)))
                           .algebra);
  }
  for (const auto& alg : algebras) {
    const std::string text = print_presentation(alg);
    REQUIRE(parse_presentation(text) == alg);
  }
}

TEST_CASE("presentation errors point at the offending line") {
  CHECK(error_location("field: Q\nvars: x\nrel: x +\n") == "line 3, column 4");
  CHECK_THROWS_WITH_AS(parse_presentation("vars: x\n"), "missing 'field' line", InputError);
  CHECK(error_location("field: Q\nvars: x y\nweights: 1\n") == "line 3");
  CHECK(error_location("field: Q\nvars: x x\n") == "line 2");
  CHECK(error_location("field: Q\nvars: x\ncolour: red\n") == "line 3");
  CHECK(error_location("field: Q\nvars: x y\nweights: 1 1\nrel: x + y^2\n") == "line 4");
  CHECK(error_location("field: F4\nvars: x\n") == "line 1");
}

TEST_CASE("every report validates against the schema") {
  const PresentedAlgebra bk = bk_algebra(gradalg::testing::bk532());
  const PresentedAlgebra bk3 = bk_algebra(gradalg::testing::bk532(FieldSpec::prime(3)));
  const PresentedAlgebra b2 =
      bn_algebra(gradalg::testing::make_bn(Q, {0, 1}, {2, 2}, {3, 3})).algebra;
  const PresentedAlgebra russell =
      parse_presentation("field: Q\nvars: x y z t\nweights: 6 -6 3 2\nrel: x + x^2*y + z^2 + t^3\n");
  std::vector<report::Json> reports{
      report::grading(bk),
      report::grading(russell),
      report::grading(b2),
      report::signature(bk, 30),
      report::hilbert(bk, 60),
      report::tangent(b2, std::vector<Scalar>(5, Scalar::zero(Q))),
      report::bk(gradalg::testing::bk7532()),
      report::bk(gradalg::testing::make_bk(Q, 6, 4, {2}, {1})),
      report::irreducible(bk3, "z + x^2", 15),
      report::irreducible(bk3, "x*y", 16),
  };
  for (const auto& r : reports) {
    CAPTURE(r.dump());
    CHECK(report::schema_violation(r).empty());
    CHECK_NOTHROW(report::validate(r));
  }
  const report::Json& g = reports[1];
  CHECK(g["grading"]["has_positive"] == false);
  CHECK(g["caveats"][0].get<std::string>().find("generator-homogeneous") != std::string::npos);
}

TEST_CASE("schema validation catches malformed reports") {
  report::Json r = report::grading(bk_algebra(gradalg::testing::bk532()));
  r["unexpected"] = 1;
  CHECK_FALSE(report::schema_violation(r).empty());
  CHECK_THROWS_AS(report::validate(r), InvariantError);
  report::Json s = report::signature(bk_algebra(gradalg::testing::bk532()), 30);
  s.erase("caveats");
  CHECK_FALSE(report::schema_violation(s).empty());
}

TEST_CASE("report dumps are stable") {
  const PresentedAlgebra bk = bk_algebra(gradalg::testing::bk7532());
  const std::string a = report::dump(report::signature(bk, 210));
  const std::string b = report::dump(report::signature(bk, 210));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}
