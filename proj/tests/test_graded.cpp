// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gradalg/bk.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded.hpp"
#include "test_support.hpp"

using namespace gradalg;
using gradalg::testing::P;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Exponents E(std::initializer_list<int> e) { return Exponents(e); }

}  // namespace

TEST_CASE("weighted_degree examples") {
  const WeightVector bk{6, 10, 15};
  CHECK(weighted_degree(E({5, 0, 0}), bk) == 30);
  const WeightVector russell{6, -6, 3, 2};
  CHECK(weighted_degree(E({2, 1, 0, 0}), russell) == 6);
  CHECK(weighted_degree(E({0, 0, 0}), bk) == 0);
}

TEST_CASE("homogeneity examples") {
  auto r = make_ring(Q, {"x", "y", "z"});
  const WeightVector bk{6, 10, 15};
  Homogeneity h = homogeneity(P(r, "x^5+y^3+z^2"), bk);
  CHECK(h.kind == Homogeneity::Kind::Homogeneous);
  CHECK(h.degree == 30);

  auto rr = make_ring(Q, {"x", "y", "z", "t"});
  h = homogeneity(P(rr, "x + x^2*y + z^2 + t^3"), WeightVector{6, -6, 3, 2});
  CHECK(h.kind == Homogeneity::Kind::Homogeneous);
  CHECK(h.degree == 6);

  auto xy = make_ring(Q, {"x", "y"});
  CHECK(homogeneity(P(xy, "x+y"), WeightVector{1, 2}).kind == Homogeneity::Kind::NotHomogeneous);
  CHECK(homogeneity(P(xy, "0"), WeightVector{1, 2}).kind == Homogeneity::Kind::ZeroPolynomial);

  const auto comps = homogeneous_components(P(xy, "x + 1 + y + x^2"), WeightVector{1, 2});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].first == 0);
  CHECK(comps[1].first == 1);
  CHECK(comps[2].second == P(xy, "x^2 + y"));
}

TEST_CASE("normal_form examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  REQUIRE(b.rewrite_system().has_value());
  CHECK(b.reduce(P(b, "z^2")) == P(b, "-x^5 - y^3"));
  CHECK(b.reduce(P(b, "z^3")) == P(b, "-x^5*z - y^3*z"));
  CHECK(b.reduce(P(b, "x^7")) == P(b, "x^7"));
  CHECK(b.reduce(P(b, "x^5 + y^3 + z^2")).is_zero());
}

TEST_CASE("rewrite detection refuses cycles") {
  auto r = make_ring(Q, {"x", "y"});
  std::vector<Polynomial> rels{P(r, "x^2 - y"), P(r, "y^2 - x")};
  // The only candidates form the cycle x -> y -> x.
  CHECK_FALSE(RewriteSystem::detect(r, rels).has_value());
  const PresentedAlgebra alg(r, rels);
  CHECK_THROWS_AS(require_graded_pieces(alg), InputError);
}

TEST_CASE("graded_piece_basis and hilbert_dim examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  CHECK(graded_piece_basis(b, 30) == std::vector<Exponents>{E({5, 0, 0}), E({0, 3, 0})});
  CHECK(graded_piece_basis(b, 21) == std::vector<Exponents>{E({1, 0, 1})});
  CHECK(graded_piece_basis(b, 0) == std::vector<Exponents>{E({0, 0, 0})});
  CHECK(hilbert_dim(b, 30) == 2);
  CHECK(hilbert_dim(b, 7) == 0);
  const PresentedAlgebra xy = gradalg::testing::free_ring(Q, {"x", "y"}, {1, 1});
  CHECK(hilbert_dim(xy, 3) == 4);
  CHECK(graded_piece_basis(xy, 0).size() == 1);
  CHECK(hilbert_dim(b, -1) == 0);  // positive grading: nothing in negative degree
  // A presentation without weights has no graded pieces.
  CHECK_THROWS_AS(hilbert_dim(b.with_weights(std::nullopt), 3), InputError);
}

TEST_CASE("veronese_dim examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  CHECK(veronese_dim(b, 2, 15) == 2);
  CHECK(veronese_dim(b, 7, 1) == 0);
  for (std::int64_t d = 0; d <= 40; ++d) CHECK(veronese_dim(b, 1, d) == hilbert_dim(b, d));
  CHECK_THROWS_AS(veronese_dim(b, 0, 1), InputError);
}

TEST_CASE("is_unit examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  CHECK(is_unit(P(b, "5"), b));
  CHECK_FALSE(is_unit(P(b, "x"), b));
  CHECK_FALSE(is_unit(P(b, "0"), b));
}

TEST_CASE("classify_action examples") {
  ActionClass c = classify_action(WeightVector{6, 10, 15});
  CHECK(c.kind == ActionClass::Kind::Elliptic);
  CHECK(c.effective);
  CHECK(c.good);
  c = classify_action(WeightVector{6, -6, 3, 2});
  CHECK(c.kind == ActionClass::Kind::Hyperbolic);
  c = classify_action(WeightVector{2, 4, 0});
  CHECK(c.kind == ActionClass::Kind::Parabolic);
  CHECK_FALSE(c.effective);
  CHECK_FALSE(c.good);
  CHECK(to_string(ActionClass::Kind::Hyperbolic) == "hyperbolic");
  CHECK_THROWS(classify_action(WeightVector{0, 0}));
}

TEST_CASE("canonical weights make every random B(k) relation homogeneous") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const BkData d = gradalg::testing::random_bk(rng);
    const PresentedAlgebra alg = bk_algebra(d);
    const CanonicalGrading g = canonical_grading(d);
    for (const auto& rel : alg.relations()) {
      const Homogeneity h = homogeneity(rel, g.weights);
      REQUIRE(h.kind == Homogeneity::Kind::Homogeneous);
      REQUIRE(h.degree == g.N);
    }
  }
}

TEST_CASE("normal_form is idempotent and multiplicative on random inputs") {
  for (const auto& data : {gradalg::testing::bk532(), gradalg::testing::bk7532(),
                           gradalg::testing::bk532(FieldSpec::prime(7))}) {
    const PresentedAlgebra alg = bk_algebra(data);
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
      const Polynomial p = gradalg::testing::random_polynomial(rng, alg.ring(), 4, 5);
      const Polynomial q = gradalg::testing::random_polynomial(rng, alg.ring(), 4, 5);
      const Polynomial np = alg.reduce(p);
      REQUIRE(alg.reduce(np) == np);
      REQUIRE(alg.rewrite_system()->is_normal(np));
      REQUIRE(alg.reduce(p * q) == alg.reduce(np * alg.reduce(q)));
      // p - normal_form(p) lies in the ideal, so reducing it gives zero.
      REQUIRE(alg.reduce(p - np).is_zero());
    }
  }
}

TEST_CASE("enumerated dimensions match the Hilbert series up to degree 200") {
  std::vector<PresentedAlgebra> algebras{
      bk_algebra(gradalg::testing::bk532()),
      bk_algebra(gradalg::testing::bk7532()),
      bk_algebra(gradalg::testing::make_bk(Q, 3, 2, {}, {})),
      gradalg::testing::free_ring(Q, {"x", "y"}, {2, 3}),
  };
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) algebras.push_back(bk_algebra(gradalg::testing::random_bk(rng, 2)));
  for (const auto& alg : algebras) {
    const auto series = hilbert_series_dims(alg, 200);
    REQUIRE(series.size() == 201);
    for (std::int64_t d = 0; d <= 200; ++d) {
      CAPTURE(d);
      REQUIRE(hilbert_dim(alg, d) == series[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("units are exactly the nonzero constants on random elements") {
  const PresentedAlgebra alg = bk_algebra(gradalg::testing::bk532());
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 1000; ++iter) {
    Polynomial p = alg.reduce(gradalg::testing::random_polynomial(rng, alg.ring(), 4, 4));
    // Force a positive-degree term.
    p += Polynomial::variable(alg.ring(), static_cast<std::size_t>(iter % 3)) *
         Scalar::from_int(Q, 1 + iter % 4);
    p = alg.reduce(p);
    if (p.is_constant()) continue;
    REQUIRE_FALSE(is_unit(p, alg));
    Scalar c = gradalg::testing::random_scalar(rng, Q);
    if (c.is_zero()) c = Scalar::one(Q);
    REQUIRE(is_unit(Polynomial::constant(alg.ring(), c), alg));
  }
}

TEST_CASE("negating weights preserves the action kind") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> w(-5, 5);
  for (int iter = 0; iter < 1000; ++iter) {
    WeightVector v(4);
    for (auto& x : v) x = w(rng);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    WeightVector neg = v;
    for (auto& x : neg) x = -x;
    const auto a = classify_action(v), b = classify_action(neg);
    REQUIRE(a.kind == b.kind);
    REQUIRE(a.effective == b.effective);
  }
}
