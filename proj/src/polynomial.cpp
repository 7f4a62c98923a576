// SPDX-License-Identifier: Apache-2.0

#include "gradalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "gradalg/errors.hpp"

namespace gradalg {

bool grlex_less(const Exponents& lhs, const Exponents& rhs) {
  const long dl = std::accumulate(lhs.begin(), lhs.end(), 0L);
  const long dr = std::accumulate(rhs.begin(), rhs.end(), 0L);
  if (dl != dr) return dl < dr;
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(),
                                      rhs.end());
}

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) {
      throw InputError("invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) {
      throw InputError("duplicate variable name '" + v + "'");
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(field, std::move(vars));
}

bool same_ring(const RingPtr& lhs, const RingPtr& rhs) {
  return lhs == rhs || *lhs == *rhs;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvariantError("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  p.add_term(Exponents(ring->num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const FieldSpec field = ring->field();
  return constant(std::move(ring), Scalar::from_int(field, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) {
    throw InputError("variable index " + std::to_string(index) +
                     " out of range");
  }
  Exponents e(ring->num_vars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exps, const Scalar& c) {
  if (exps.size() != ring->num_vars()) {
    throw InputError("exponent tuple length does not match variable count");
  }
  Polynomial p(ring);
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exps) {
  const FieldSpec field = ring->field();
  return monomial(std::move(ring), std::move(exps), Scalar::one(field));
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first[index] != 0; });
}

void Polynomial::add_term(const Exponents& exps, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) {
    throw InputError("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  l.require_same_ring(r);
  Polynomial out(l.ring_);
  Exponents e(l.ring_->num_vars());
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (!(c.field() == field())) {
    throw InputError("field mismatch: " + field().name() + " vs " +
                     c.field().name());
  }
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return same_ring(lhs.ring_, rhs.ring_) && lhs.terms_ == rhs.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::partial_derivative(std::size_t var_index) const {
  if (var_index >= ring_->num_vars()) {
    throw InputError("variable index " + std::to_string(var_index) +
                     " out of range for " +
                     std::to_string(ring_->num_vars()) + " variables");
  }
  Polynomial out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var_index] == 0) continue;
    Exponents d = e;
    d[var_index] -= 1;
    out.add_term(d, c * Scalar::from_int(field(), e[var_index]));
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->num_vars()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, ring has " +
                     std::to_string(ring_->num_vars()) + " variables");
  }
  Scalar sum = Scalar::zero(field());
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string format_monomial(const PolyRing& ring, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? std::string("1") : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool is_const =
        std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (is_const) {
      out += coeff;
    } else if (coeff == "1") {
      out += format_monomial(*ring_, e);
    } else {
      out += coeff + '*' + format_monomial(*ring_, e);
    }
  }
  return out;
}

}  // namespace gradalg
