// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_SCALAR_HPP
#define GRADALG_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace gradalg {

/// The ground field: either the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F7").
  static FieldSpec parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of Q (always in lowest terms) or F_p (residue in [0, p)).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(), value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }
  static Scalar from_int(const FieldSpec& field, std::int64_t n);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& n);
  /// num/den in the field; over F_p this is num * den^{-1}. Throws
  /// InputError when den vanishes in the field.
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);
  /// Parses "n" or "n/d" with an optional leading sign.
  static Scalar parse(const FieldSpec& field, const std::string& text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over Q.
  const mpq_class& rational() const;
  /// Only valid over F_p.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// "3", "-2/3", or a residue such as "4".
  std::string to_string() const;

 private:
  Scalar(FieldSpec field, std::variant<mpq_class, std::uint64_t> value)
      : field_(field), value_(std::move(value)) {}
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace gradalg

#endif  // GRADALG_SCALAR_HPP
