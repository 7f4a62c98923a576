// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_TEST_SUPPORT_HPP
#define GRADALG_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "gradalg/bk.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/oracle.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/parser.hpp"

namespace gradalg::testing {

inline BkData make_bk(FieldSpec field, std::int64_t a, std::int64_t b, std::vector<std::int64_t> c,
                      std::vector<std::int64_t> lambdas) {
  BkData d;
  d.field = field;
  d.a = a;
  d.b = b;
  d.c = std::move(c);
  for (auto l : lambdas) d.lambdas.push_back(Scalar::from_int(field, l));
  return d;
}

inline BkData bk532(FieldSpec field = FieldSpec::rationals()) {
  return make_bk(field, 5, 3, {2}, {1});
}

inline BkData bk7532(FieldSpec field = FieldSpec::rationals()) {
  return make_bk(field, 7, 5, {3, 2}, {1, 2});
}

inline PresentedAlgebra free_ring(FieldSpec field, std::vector<std::string> vars,
                                  WeightVector weights) {
  return PresentedAlgebra(make_ring(field, std::move(vars)), {}, std::move(weights));
}

inline Polynomial P(const PresentedAlgebra& alg, const std::string& text) {
  return parse_polynomial(text, alg.ring());
}

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  if (field.is_rational()) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Scalar::from_fraction(field, num(rng), den(rng));
  }
  std::uniform_int_distribution<std::int64_t> r(0, static_cast<std::int64_t>(field.characteristic()) - 1);
  return Scalar::from_int(field, r(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int max_terms = 4,
                                    int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp);
  Polynomial p(ring);
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Exponents e(ring->num_vars());
    for (auto& x : e) x = ex(rng);
    p.add_term(e, random_scalar(rng, ring->field()));
  }
  return p;
}

/// Random valid B(k) data over Q with n in [0, max_n].
inline BkData random_bk(std::mt19937_64& rng, std::size_t max_n = 3) {
  static const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (;;) {
    std::uniform_int_distribution<std::size_t> nd(0, max_n);
    const std::size_t n = nd(rng);
    // Pick n + 2 distinct primes, optionally raised to a small power, and
    // sort them decreasingly; distinct primes keep everything coprime.
    std::vector<std::int64_t> pool = primes;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::int64_t> chain(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n + 2));
    std::uniform_int_distribution<int> coin(0, 3);
    for (auto& x : chain) {
      if (coin(rng) == 0 && x < 6) x *= x;
    }
    std::sort(chain.rbegin(), chain.rend());
    std::vector<std::int64_t> lambdas;
    for (std::size_t i = 0; i < n; ++i) lambdas.push_back(static_cast<std::int64_t>(i + 1));
    BkData d = make_bk(FieldSpec::rationals(), chain[0], chain[1],
                       std::vector<std::int64_t>(chain.begin() + 2, chain.end()), lambdas);
    if (validate_bk(d).valid) return d;
  }
}

/// Rebuilds B(k) as a tower of cyclic covers over k[x,y] with weights (b, a).
inline PresentedAlgebra samuel_tower(const BkData& d) {
  PresentedAlgebra alg = free_ring(d.field, {"x", "y"}, {d.b, d.a});
  const auto names = bk_variable_names(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) {
    Polynomial F = Polynomial::variable(alg.ring(), 0).pow(static_cast<unsigned>(d.a)) +
                   d.lambdas[i] * Polynomial::variable(alg.ring(), 1).pow(static_cast<unsigned>(d.b));
    alg = samuel_extend(alg, -F, d.c[i], names[i + 2]).algebra;
  }
  return alg;
}

/// Rebuilds B_n as a chain of affine modifications starting from k[x, z0, z1].
inline PresentedAlgebra modification_chain(const BnData& d) {
  PresentedAlgebra alg(make_ring(d.field, {"x", "z0", "z1"}), {});
  for (std::size_t i = 1; i <= d.n(); ++i) {
    const Polynomial p = bn_p_of_x(d, alg.ring());
    const Polynomial zi = Polynomial::variable(alg.ring(), i + 1);
    const Polynomial zprev = Polynomial::variable(alg.ring(), i);
    const Polynomial gen = -(zi.pow(static_cast<unsigned>(d.a[i - 1])) +
                             zprev.pow(static_cast<unsigned>(d.b[i - 1])));
    const std::vector<Polynomial> gens{gen};
    alg = affine_modification(alg, p, gens, {"z" + std::to_string(i + 1)}).algebra;
  }
  return alg;
}

inline BnData make_bn(FieldSpec field, std::vector<std::int64_t> p_coeffs, std::vector<int> a,
                      std::vector<int> b) {
  BnData d;
  d.field = field;
  for (auto c : p_coeffs) d.p_coeffs.push_back(Scalar::from_int(field, c));
  d.a = std::move(a);
  d.b = std::move(b);
  return d;
}

/// Runs the oracle on h + b for every normal-form b of degree below deg h.
/// Returns the number of elements checked; stops at the first Factored verdict
/// and stores it in `failure`.
inline std::size_t irreducibility_sweep(const PresentedAlgebra& alg, const Polynomial& h,
                                        std::string& failure) {
  const FieldSpec& field = alg.field();
  const std::int64_t dh = homogeneity(h, *alg.weights()).degree;
  const std::vector<Exponents> lower = filtration_basis(alg, dh - 1);
  const std::uint64_t p = field.characteristic();
  std::vector<std::uint64_t> digits(lower.size(), 0);
  std::size_t count = 0;
  for (;;) {
    Polynomial f = h;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (digits[i] != 0) f.add_term(lower[i], Scalar::from_int(field, static_cast<std::int64_t>(digits[i])));
    }
    const IrreducibilityVerdict v = irreducible_bruteforce(alg, f, dh);
    ++count;
    if (!v.irreducible) {
      failure = f.to_string() + " = (" + v.u->to_string() + ") * (" + v.v->to_string() + ")";
      return count;
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) return count;
  }
}

}  // namespace gradalg::testing

#endif  // GRADALG_TEST_SUPPORT_HPP
