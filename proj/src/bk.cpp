// SPDX-License-Identifier: Apache-2.0

#include "gradalg/bk.hpp"

#include <numeric>

#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

constexpr std::int64_t kMaxN = std::int64_t{1} << 62;

void require_valid(const BkData& data) {
  const BkValidation v = validate_bk(data);
  if (v.valid) return;
  std::string msg = "invalid B(k) data:";
  for (const auto& r : v.reasons) msg += " " + r + ";";
  msg.pop_back();
  throw InputError(msg);
}

}  // namespace

BkValidation validate_bk(const BkData& data) {
  BkValidation out;
  auto fail = [&](std::string reason) {
    out.valid = false;
    out.reasons.push_back(std::move(reason));
  };

  // Exponent chain a > b > c_1 > ... > c_n >= 2.
  std::vector<std::int64_t> chain{data.a, data.b};
  chain.insert(chain.end(), data.c.begin(), data.c.end());
  std::vector<std::string> names{"a", "b"};
  for (std::size_t i = 1; i <= data.n(); ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (chain[k] <= chain[k + 1]) {
      fail("exponents not strictly decreasing: " + names[k] + "=" + std::to_string(chain[k]) +
           " <= " + names[k + 1] + "=" + std::to_string(chain[k + 1]));
    }
  }
  if (chain.back() < 2) {
    fail("smallest exponent " + names.back() + "=" + std::to_string(chain.back()) + " is below 2");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const std::int64_t g = std::gcd(chain[i], chain[j]);
      if (g != 1) {
        fail("gcd(" + names[i] + "=" + std::to_string(chain[i]) + ", " + names[j] + "=" +
             std::to_string(chain[j]) + ") = " + std::to_string(g));
      }
    }
  }

  if (data.lambdas.size() != data.n()) {
    fail("expected " + std::to_string(data.n()) + " lambda values, got " +
         std::to_string(data.lambdas.size()));
    return out;
  }
  for (std::size_t i = 0; i < data.lambdas.size(); ++i) {
    const Scalar& l = data.lambdas[i];
    if (!(l.field() == data.field)) {
      fail("lambda" + std::to_string(i + 1) + " is not in " + data.field.name());
      continue;
    }
    if (l.is_zero()) fail("lambda" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (data.lambdas[j] == l) {
        fail("lambda" + std::to_string(j + 1) + " = lambda" + std::to_string(i + 1) + " = " +
             l.to_string());
      }
    }
  }
  if (!data.lambdas.empty() && !data.lambdas[0].is_one()) {
    fail("lambda1 must be 1, got " + data.lambdas[0].to_string());
  }
  return out;
}

std::vector<std::string> bk_variable_names(std::size_t n) {
  std::vector<std::string> vars{"x", "y"};
  if (n == 1) {
    vars.emplace_back("z");
  } else {
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  }
  return vars;
}

CanonicalGrading canonical_grading(const BkData& data) {
  require_valid(data);
  __int128 N = static_cast<__int128>(data.a) * data.b;
  for (std::int64_t ci : data.c) {
    N *= ci;
    if (N > kMaxN) throw InputError("N = a*b*c_1*...*c_n overflows 62 bits");
  }
  CanonicalGrading g;
  g.N = static_cast<std::int64_t>(N);
  g.weights.push_back(g.N / data.a);
  g.weights.push_back(g.N / data.b);
  for (std::int64_t ci : data.c) g.weights.push_back(g.N / ci);
  return g;
}

PresentedAlgebra bk_algebra(const BkData& data) {
  const CanonicalGrading grading = canonical_grading(data);
  RingPtr ring = make_ring(data.field, bk_variable_names(data.n()));
  const Polynomial xa = Polynomial::variable(ring, 0).pow(static_cast<unsigned>(data.a));
  const Polynomial yb = Polynomial::variable(ring, 1).pow(static_cast<unsigned>(data.b));
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < data.n(); ++i) {
    relations.push_back(xa + data.lambdas[i] * yb +
                        Polynomial::variable(ring, i + 2).pow(static_cast<unsigned>(data.c[i])));
  }
  PresentedAlgebra alg(ring, std::move(relations), grading.weights);
  const auto& rs = alg.rewrite_system();
  if (!rs || rs->rules().size() != data.n()) {
    throw InvariantError("B(k) presentation did not yield its pure-power rewrite system");
  }
  for (std::size_t i = 0; i < data.n(); ++i) {
    if (rs->rules()[i].var != i + 2) {
      throw InvariantError("B(k) rewrite rule " + std::to_string(i + 1) + " is not on z_i");
    }
  }
  for (const auto& rel : alg.relations()) {
    const Homogeneity h = homogeneity(rel, grading.weights);
    if (h.kind != Homogeneity::Kind::Homogeneous || h.degree != grading.N) {
      throw InvariantError("B(k) relation not homogeneous of degree N");
    }
  }
  return alg;
}

bool same_class(const BkData& lhs, const BkData& rhs) {
  return lhs.field == rhs.field && lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c &&
         lhs.lambdas == rhs.lambdas;
}

std::int64_t min_generators(const BkData& data) {
  require_valid(data);
  if (!data.field.is_rational()) {
    const auto p = static_cast<std::int64_t>(data.field.characteristic());
    std::vector<std::int64_t> exps{data.a, data.b};
    exps.insert(exps.end(), data.c.begin(), data.c.end());
    for (std::int64_t e : exps) {
      if (e % p == 0) {
        throw InputError("characteristic " + std::to_string(p) + " divides exponent " +
                         std::to_string(e) + "; the tangent-space count does not apply");
      }
    }
  }
  const PresentedAlgebra alg = bk_algebra(data);
  const std::vector<Scalar> origin(alg.num_vars(), Scalar::zero(data.field));
  const JacobianReport j = jacobian_tangent_dim(alg, origin);
  const auto expected = static_cast<std::int64_t>(data.n() + 2);
  if (j.rank != 0 || static_cast<std::int64_t>(j.tangent_dim) != expected) {
    throw InvariantError("tangent space at the origin has dimension " +
                         std::to_string(j.tangent_dim) + ", expected " + std::to_string(expected));
  }
  return expected;
}

}  // namespace gradalg
