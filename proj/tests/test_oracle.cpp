// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gradalg/bk.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/oracle.hpp"
#include "test_support.hpp"

using namespace gradalg;
using gradalg::testing::P;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST_CASE("dimension_bruteforce examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532(F3));
  CHECK(dimension_bruteforce(b, 30) == 2);
  for (std::int64_t d = 1; d <= 5; ++d) CHECK(dimension_bruteforce(b, d) == 0);
  const PresentedAlgebra x = gradalg::testing::free_ring(F3, {"x"}, {1});
  CHECK(dimension_bruteforce(x, 9) == 1);
}

TEST_CASE("dimension_bruteforce agrees with hilbert_dim up to degree 200") {
  std::vector<PresentedAlgebra> algebras{
      bk_algebra(gradalg::testing::bk532(F3)),
      bk_algebra(gradalg::testing::bk7532()),
      gradalg::testing::free_ring(F3, {"x", "y"}, {3, 5}),
      gradalg::testing::free_ring(F3, {"t"}, {1}),
      gradalg::testing::free_ring(F3, {"a", "b", "c"}, {1, 2, 3}),
  };
  for (const auto& alg : algebras) {
    for (std::int64_t d = 0; d <= 200; ++d) {
      CAPTURE(d);
      REQUIRE(dimension_bruteforce(alg, d) == hilbert_dim(alg, d));
    }
  }
}

TEST_CASE("irreducible_bruteforce examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532(F3));
  IrreducibilityVerdict v = irreducible_bruteforce(b, P(b, "z + x^2"), 15);
  CHECK(v.irreducible);

  const PresentedAlgebra xy = gradalg::testing::free_ring(F3, {"x", "y"}, {3, 5});
  v = irreducible_bruteforce(xy, P(xy, "x^5 + 2*y^3"), 15);
  CHECK(v.irreducible);

  const PresentedAlgebra xy2 = gradalg::testing::free_ring(F2, {"x", "y"}, {1, 1});
  v = irreducible_bruteforce(xy2, P(xy2, "x^2 + x*y"), 2);
  REQUIRE_FALSE(v.irreducible);
  REQUIRE(v.u.has_value());
  REQUIRE(v.v.has_value());
  CHECK(*v.u * *v.v == P(xy2, "x^2 + x*y"));
  const bool expected = (*v.u == P(xy2, "x") && *v.v == P(xy2, "x + y")) ||
                        (*v.u == P(xy2, "x + y") && *v.v == P(xy2, "x"));
  CHECK(expected);
}

TEST_CASE("factored verdicts multiply back in the quotient") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532(F3));
  for (const char* text : {"x^2", "x*y", "x*z + x^2", "y^2 + 2*x*y"}) {
    CAPTURE(text);
    const Polynomial f = P(b, text);
    const IrreducibilityVerdict v = irreducible_bruteforce(b, f, 30);
    REQUIRE_FALSE(v.irreducible);
    CHECK(b.reduce(*v.u * *v.v) == f);
  }
  // z^2 = -(x^5 + y^3) in the quotient, so this is (z)(z).
  const IrreducibilityVerdict v = irreducible_bruteforce(b, P(b, "-x^5 - y^3"), 30);
  CHECK_FALSE(v.irreducible);
}

TEST_CASE("oracle refusals") {
  const PresentedAlgebra q = bk_algebra(gradalg::testing::bk532());
  CHECK_THROWS_AS(irreducible_bruteforce(q, P(q, "x"), 10), InputError);  // not F_p
  const PresentedAlgebra f11 = gradalg::testing::free_ring(FieldSpec::prime(11), {"x"}, {1});
  CHECK_THROWS_AS(irreducible_bruteforce(f11, P(f11, "x"), 10), InputError);
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532(F3));
  CHECK_THROWS_AS(irreducible_bruteforce(b, P(b, "z^2"), 30), InputError);  // not normal
  CHECK_THROWS_AS(irreducible_bruteforce(b, P(b, "x^5"), 10), InputError);  // above bound
  CHECK_THROWS_AS(irreducible_bruteforce(b, P(b, "0"), 10), InputError);
  // Degree 200 elements need a search space far beyond the cap.
  const PresentedAlgebra big = gradalg::testing::free_ring(F3, {"x", "y"}, {1, 1});
  CHECK_THROWS_AS(irreducible_bruteforce(big, P(big, "x^40 + y^40"), 40), InputError);
}

TEST_CASE("leading generators stay irreducible under lower-degree perturbations") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532(F3));
  std::size_t total = 0;
  for (const char* h : {"x", "y", "z"}) {
    std::string failure;
    total += gradalg::testing::irreducibility_sweep(b, P(b, h), failure);
    CHECK_MESSAGE(failure.empty(), failure);
  }
  CHECK(total == 3 + 9 + 81);
}

TEST_CASE("binomials x^5 + mu*y^3 are irreducible") {
  for (const FieldSpec& f : {F3, F5}) {
    const PresentedAlgebra xy = gradalg::testing::free_ring(f, {"x", "y"}, {3, 5});
    for (std::uint64_t mu = 1; mu < f.characteristic(); ++mu) {
      const Polynomial g = P(xy, "x^5") + Scalar::from_int(f, static_cast<std::int64_t>(mu)) * P(xy, "y^3");
      CAPTURE(g.to_string());
      CHECK(irreducible_bruteforce(xy, g, 15).irreducible);
    }
  }
}
