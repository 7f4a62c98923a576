// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_POLYNOMIAL_HPP
#define GRADALG_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradalg/scalar.hpp"

namespace gradalg {

/// One non-negative exponent per ambient variable.
using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then the first differing
/// exponent (so x > y > z among monomials of equal total degree).
bool grlex_less(const Exponents& lhs, const Exponents& rhs);

struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const {
    return grlex_less(rhs, lhs);
  }
};

/// Ground field plus an ordered list of variable names.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> vars);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars);
bool same_ring(const RingPtr& lhs, const RingPtr& rhs);

/// Sparse multivariate polynomial. Terms are kept in descending grlex order
/// with no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Exponents exps, const Scalar& c);
  static Polynomial monomial(RingPtr ring, Exponents exps);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for the zero polynomial too.
  bool is_constant() const;
  Scalar coefficient(const Exponents& exps) const;
  /// Largest total degree; -1 for zero.
  int total_degree() const;
  /// True if variable `index` occurs in some term.
  bool uses_variable(std::size_t index) const;

  /// Adds c * x^exps in place.
  void add_term(const Exponents& exps, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  Polynomial pow(unsigned exponent) const;

  /// Formal partial derivative; over F_p, exponents divisible by p vanish.
  Polynomial partial_derivative(std::size_t var_index) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Canonical text: grlex-descending terms, explicit `*` and `^`.
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& rhs) const;

  RingPtr ring_;
  TermMap terms_;
};

std::string format_monomial(const PolyRing& ring, const Exponents& exps);

}  // namespace gradalg

#endif  // GRADALG_POLYNOMIAL_HPP
