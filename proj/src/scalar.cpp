// SPDX-License-Identifier: Apache-2.0

#include "gradalg/scalar.hpp"

#include <cctype>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is too large (must be below 2^31)");
  }
  if (!is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::string digits = text.substr(1);
    if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
    bool ok = !digits.empty() && digits.size() <= 10;
    for (char ch : digits) ok = ok && std::isdigit(static_cast<unsigned char>(ch));
    if (ok) return prime(std::stoull(digits));
  }
  throw InputError("unknown field '" + text + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t n) {
  if (field.is_rational()) {
    return Scalar(field, mpq_class(mpz_class(static_cast<long>(n))));
  }
  const auto p = static_cast<std::int64_t>(field.characteristic());
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& n) {
  if (field.is_rational()) return Scalar(field, mpq_class(n));
  return Scalar(field, reduce(n, field.characteristic()));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw InputError("division by zero in coefficient");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, std::move(q));
  }
  const std::uint64_t d = reduce(den, field.characteristic());
  if (d == 0) {
    throw InputError("denominator " + den.get_str() + " vanishes in " +
                     field.name());
  }
  return from_integer(field, num) / Scalar(field, d);
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    mpz_class z;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty() || z.set_str(t, 10) != 0) {
      throw InputError("malformed scalar '" + text + "'");
    }
    return z;
  };
  if (slash == std::string::npos) return from_integer(field, parse_int(text));
  return from_fraction(field, parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw InvariantError("rational() called on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw InvariantError("residue() called on a rational scalar");
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw InputError("field mismatch: " + field_.name() + " vs " +
                     rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(field_, mpq_class(-*q));
  }
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r * std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(field_, mpq_class(1 / *q));
  }
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, mod_pow(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace gradalg
