// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gradalg/bk.hpp"
#include "gradalg/errors.hpp"
#include "test_support.hpp"

using namespace gradalg;
using gradalg::testing::make_bk;
using gradalg::testing::P;

namespace {

const FieldSpec Q = FieldSpec::rationals();

bool has_reason(const BkValidation& v, const std::string& needle) {
  for (const auto& r : v.reasons) {
    if (r.find(needle) != std::string::npos) return true;
  }
  return false;
}

/// Changes one field of `d` so that the result is still valid.
BkData perturb(const BkData& d, std::mt19937_64& rng) {
  for (;;) {
    BkData e = d;
    std::uniform_int_distribution<int> what(0, 3);
    std::uniform_int_distribution<int> bump(1, 6);
    switch (what(rng)) {
      case 0: e.a += bump(rng); break;
      case 1: e.b += bump(rng); break;
      case 2:
        if (e.c.empty()) continue;
        e.c[static_cast<std::size_t>(bump(rng)) % e.c.size()] += bump(rng);
        break;
      default:
        if (e.lambdas.size() < 2) continue;
        // lambda_1 is pinned to 1, so perturb a later one.
        {
          const std::size_t i = 1 + static_cast<std::size_t>(bump(rng)) % (e.lambdas.size() - 1);
          e.lambdas[i] = e.lambdas[i] + Scalar::from_int(e.field, 100 + bump(rng));
        }
        break;
    }
    if (validate_bk(e).valid) return e;
  }
}

}  // namespace

TEST_CASE("validate_bk examples") {
  CHECK(validate_bk(gradalg::testing::bk532()).valid);
  CHECK(validate_bk(gradalg::testing::bk7532()).valid);
  const BkValidation v = validate_bk(make_bk(Q, 6, 4, {2}, {1}));
  CHECK_FALSE(v.valid);
  CHECK(has_reason(v, "gcd(a=6, b=4) = 2"));
  CHECK_FALSE(validate_bk(make_bk(Q, 5, 3, {3}, {1})).valid);       // not strictly decreasing
  CHECK_FALSE(validate_bk(make_bk(Q, 7, 5, {3, 2}, {1, 1})).valid);  // repeated lambda
  CHECK_FALSE(validate_bk(make_bk(Q, 7, 5, {3, 2}, {1})).valid);     // lambda count
  CHECK_FALSE(validate_bk(make_bk(Q, 7, 5, {3, 2}, {2, 3})).valid);  // lambda_1 != 1
  // 1 and 8 coincide in F7.
  CHECK_FALSE(validate_bk(make_bk(FieldSpec::prime(7), 7, 5, {3, 2}, {1, 8})).valid);
  CHECK_THROWS_AS(bk_algebra(make_bk(Q, 6, 4, {2}, {1})), InputError);
}

TEST_CASE("bk_algebra examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  CHECK(b.ring()->vars() == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(b.relations().size() == 1);
  CHECK(b.relations()[0] == P(b, "x^5 + y^3 + z^2"));
  CHECK(*b.weights() == WeightVector{6, 10, 15});

  const PresentedAlgebra b2 = bk_algebra(gradalg::testing::bk7532());
  CHECK(b2.num_vars() == 4);
  CHECK(*b2.weights() == WeightVector{30, 42, 70, 105});
  CHECK(b2.relations()[1] == P(b2, "x^7 + 2*y^5 + z2^2"));

  const PresentedAlgebra free = bk_algebra(make_bk(Q, 3, 2, {}, {}));
  CHECK(free.relations().empty());
  CHECK(free.num_vars() == 2);
  // With no relations the chain still needs b >= 2.
  CHECK_THROWS_AS(bk_algebra(make_bk(Q, 2, 1, {}, {})), InputError);
}

TEST_CASE("canonical_grading examples") {
  CanonicalGrading g = canonical_grading(gradalg::testing::bk532());
  CHECK(g.N == 30);
  CHECK(g.weights == WeightVector{6, 10, 15});
  g = canonical_grading(gradalg::testing::bk7532());
  CHECK(g.N == 210);
  CHECK(g.weights == WeightVector{30, 42, 70, 105});
  g = canonical_grading(make_bk(Q, 3, 2, {}, {}));
  CHECK(g.N == 6);
  CHECK(g.weights == WeightVector{2, 3});
}

TEST_CASE("canonical weights increase strictly and give an elliptic action") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    const CanonicalGrading g = canonical_grading(gradalg::testing::random_bk(rng));
    for (std::size_t i = 1; i < g.weights.size(); ++i) REQUIRE(g.weights[i - 1] < g.weights[i]);
    REQUIRE(classify_action(g.weights).kind == ActionClass::Kind::Elliptic);
  }
}

TEST_CASE("same_class examples") {
  CHECK(same_class(gradalg::testing::bk532(), gradalg::testing::bk532()));
  CHECK_FALSE(same_class(gradalg::testing::bk532(), make_bk(Q, 7, 3, {2}, {1})));
  CHECK_FALSE(same_class(gradalg::testing::bk7532(), make_bk(Q, 7, 5, {3, 2}, {1, 3})));
  CHECK_FALSE(same_class(gradalg::testing::bk532(), gradalg::testing::bk532(FieldSpec::prime(7))));
}

TEST_CASE("same_class is an equivalence relation that separates perturbed data") {
  std::mt19937_64 rng(41);
  std::vector<BkData> pool;
  for (int i = 0; i < 30; ++i) pool.push_back(gradalg::testing::random_bk(rng, 2));
  for (const auto& a : pool) {
    REQUIRE(same_class(a, a));
    for (const auto& b : pool) {
      REQUIRE(same_class(a, b) == same_class(b, a));
      for (const auto& c : pool) {
        if (same_class(a, b) && same_class(b, c)) REQUIRE(same_class(a, c));
      }
    }
  }
  for (int i = 0; i < 50; ++i) {
    const BkData d = gradalg::testing::random_bk(rng);
    const BkData e = perturb(d, rng);
    REQUIRE_FALSE(same_class(d, e));
    REQUIRE(same_class(e, e));
  }
}

TEST_CASE("min_generators examples") {
  CHECK(min_generators(gradalg::testing::bk532()) == 3);
  CHECK(min_generators(gradalg::testing::bk7532()) == 4);
  CHECK(min_generators(make_bk(Q, 3, 2, {}, {})) == 2);
  // p = 5 divides the exponent a = 5.
  CHECK_THROWS_AS(min_generators(gradalg::testing::bk532(FieldSpec::prime(5))), InputError);
  CHECK(min_generators(gradalg::testing::bk532(FieldSpec::prime(7))) == 3);
}
