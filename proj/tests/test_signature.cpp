// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gradalg/bk.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/signature.hpp"
#include "test_support.hpp"

using namespace gradalg;
using gradalg::testing::P;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<std::string> names(const SignatureSequence& seq) {
  std::vector<std::string> out;
  for (const auto& e : seq.elements) out.push_back(e.to_string());
  return out;
}

}  // namespace

TEST_CASE("subalgebra_membership examples") {
  const PresentedAlgebra xy = gradalg::testing::free_ring(Q, {"x", "y"}, {2, 3});
  std::vector<Polynomial> gx{P(xy, "x")};
  CHECK_FALSE(subalgebra_membership(P(xy, "y"), gx, xy, 12).member);

  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  std::vector<Polynomial> g{P(b, "x"), P(b, "y")};
  CHECK_FALSE(subalgebra_membership(P(b, "z"), g, b, 30).member);

  const Membership m = subalgebra_membership(P(b, "x^5 + y^3"), g, b, 30);
  REQUIRE(m.member);
  REQUIRE(m.certificate.has_value());
  CHECK(m.certificate->to_string() == "X1^5 + X2^3");
  // z^2 reduces to -(x^5 + y^3), which is generated by x and y.
  CHECK(subalgebra_membership(P(b, "z^2"), g, b, 30).member);
}

TEST_CASE("signature sequence examples") {
  const PresentedAlgebra xy = gradalg::testing::free_ring(Q, {"x", "y"}, {2, 3});
  SignatureSequence s = compute_signature_sequence(xy, 12);
  CHECK(names(s) == std::vector<std::string>{"x", "y"});
  CHECK(s.degrees == std::vector<std::int64_t>{2, 3});
  CHECK(s.complete);

  s = compute_signature_sequence(bk_algebra(gradalg::testing::bk532()), 30);
  CHECK(names(s) == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.degrees == std::vector<std::int64_t>{6, 10, 15});
  CHECK(s.complete);
  CHECK(s.complete_up_to == 30);

  s = compute_signature_sequence(bk_algebra(gradalg::testing::bk7532()), 210);
  CHECK(s.degrees == std::vector<std::int64_t>{30, 42, 70, 105});
  CHECK(s.complete);

  const PresentedAlgebra t = gradalg::testing::free_ring(Q, {"t"}, {4});
  s = compute_signature_sequence(t, 40);
  CHECK(s.elements.size() == 1);
  CHECK(s.complete);
}

TEST_CASE("a bound below the top generator leaves the sequence incomplete") {
  const SignatureSequence s = compute_signature_sequence(bk_algebra(gradalg::testing::bk532()), 12);
  CHECK(s.degrees == std::vector<std::int64_t>{6, 10});
  CHECK_FALSE(s.complete);
}

TEST_CASE("random B(k) sequences have the canonical degrees") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 12) {
    const BkData d = gradalg::testing::random_bk(rng, 2);
    const CanonicalGrading g = canonical_grading(d);
    if (g.N > 700) continue;  // keep the run short
    const SignatureSequence s = compute_signature_sequence(bk_algebra(d), g.N);
    CAPTURE(g.N);
    REQUIRE(s.complete);
    REQUIRE(s.degrees == g.weights);
    for (std::size_t i = 1; i < s.degrees.size(); ++i) REQUIRE(s.degrees[i - 1] < s.degrees[i]);
    ++checked;
  }
}

TEST_CASE("check_proposition_intersect examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  const SignatureSequence s = compute_signature_sequence(b, 30);
  CHECK(check_proposition_intersect(b, s, 3, P(b, "x^2")));
  CHECK(check_proposition_intersect(b, s, 1, P(b, "7")));
  CHECK(check_proposition_intersect(b, s, 3, P(b, "x + 1")));
  CHECK_THROWS_AS(check_proposition_intersect(b, s, 0, P(b, "1")), InputError);
}

TEST_CASE("check_proposition_intersect holds on random elements") {
  std::mt19937_64 rng(23);
  for (const auto& data : {gradalg::testing::bk532(), gradalg::testing::bk7532()}) {
    const PresentedAlgebra b = bk_algebra(data);
    const SignatureSequence s = compute_signature_sequence(b, canonical_grading(data).N);
    for (int iter = 0; iter < 250; ++iter) {
      const std::size_t n = 1 + static_cast<std::size_t>(iter) % s.elements.size();
      // Sum of random basis monomials of degree below d_n.
      Polynomial f(b.ring());
      std::uniform_int_distribution<std::int64_t> deg(0, s.degrees[n - 1] - 1);
      for (int k = 0; k < 3; ++k) {
        const auto basis = graded_piece_basis(b, deg(rng));
        if (basis.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        f.add_term(basis[pick(rng)], gradalg::testing::random_scalar(rng, b.field()));
      }
      REQUIRE(check_proposition_intersect(b, s, n, f));
    }
  }
}

TEST_CASE("pairwise_independence examples") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk532());
  const SignatureSequence s = compute_signature_sequence(b, 30);
  CHECK(pairwise_independence(b, s, 1, 2, 60));
  CHECK(pairwise_independence(b, s, 1, 3, 60));
  CHECK(pairwise_independence(b, s, 2, 3, 60));
  const PresentedAlgebra x = gradalg::testing::free_ring(Q, {"x"}, {1});
  const SignatureSequence sx = compute_signature_sequence(x, 5);
  CHECK_THROWS_AS(pairwise_independence(x, sx, 1, 1, 10), InputError);
}

TEST_CASE("degree_compositions counts solutions") {
  const std::vector<std::int64_t> deg{6, 10, 15};
  CHECK(degree_compositions(deg, 30).size() == 3);  // x^5, y^3, z^2
  CHECK(degree_compositions(deg, 7).empty());
}

TEST_CASE("signature computation is deterministic") {
  const PresentedAlgebra b = bk_algebra(gradalg::testing::bk7532());
  const SignatureSequence s1 = compute_signature_sequence(b, 210);
  const SignatureSequence s2 = compute_signature_sequence(b, 210);
  CHECK(names(s1) == names(s2));
  CHECK(s1.degrees == s2.degrees);
  CHECK(default_signature_bound(bk_algebra(gradalg::testing::bk532())) == 30);
}
