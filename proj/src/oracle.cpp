// SPDX-License-Identifier: Apache-2.0

#include "gradalg/oracle.hpp"

#include <algorithm>
#include <map>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

std::int64_t dimension_bruteforce(const PresentedAlgebra& alg, std::int64_t d) {
  require_graded_pieces(alg);
  if (d < 0) return 0;
  const auto& w = *alg.weights();
  const std::size_t n = w.size();
  // Exponents beyond a rewrite cap are never normal, so the box stops there.
  std::vector<std::int64_t> limit(n);
  for (std::size_t i = 0; i < n; ++i) {
    limit[i] = d / w[i];
    if (alg.rewrite_system()) {
      if (auto cap = alg.rewrite_system()->cap(i)) limit[i] = std::min<std::int64_t>(limit[i], *cap - 1);
    }
  }
  // Odometer over the box, keeping the running degree in step.
  std::vector<std::int64_t> e(n, 0);
  std::int64_t deg = 0;
  std::int64_t count = 0;
  for (;;) {
    if (deg == d) ++count;
    std::size_t i = 0;
    while (i < n && e[i] == limit[i]) {
      deg -= e[i] * w[i];
      e[i++] = 0;
    }
    if (i == n) break;
    ++e[i];
    deg += w[i];
  }
  return count;
}

namespace {

std::vector<Exponents> monomials_up_to(const PresentedAlgebra& alg, std::int64_t d) {
  return filtration_basis(alg, d);
}

}  // namespace

IrreducibilityVerdict irreducible_bruteforce(const PresentedAlgebra& alg, const Polynomial& f,
                                             std::int64_t bound) {
  const FieldSpec& field = alg.field();
  if (field.is_rational() || field.characteristic() > kOracleMaxPrime) {
    throw InputError("exhaustive irreducibility search needs F_p with p <= " +
                     std::to_string(kOracleMaxPrime) + ", got " + field.name(),
                     "field");
  }
  require_graded_pieces(alg);
  if (!same_ring(f.ring(), alg.ring())) throw InputError("element lives in a different ring");
  if (alg.rewrite_system() && !alg.rewrite_system()->is_normal(f)) {
    throw InputError("element is not in normal form", "--elem");
  }
  if (f.is_zero()) throw InputError("zero is not irreducible", "--elem");
  const auto& w = *alg.weights();
  std::int64_t top = 0;
  for (const auto& [e, c] : f.terms()) top = std::max(top, weighted_degree(e, w));
  if (top > bound) {
    throw InputError("element has a term of degree " + std::to_string(top) + " above bound " +
                         std::to_string(bound),
                     "--bound");
  }

  IrreducibilityVerdict verdict;
  const std::vector<Exponents> u_basis = monomials_up_to(alg, top / 2);
  verdict.search_dimension = u_basis.size();
  if (u_basis.size() > kOracleMaxDimension) {
    throw InputError("factor search space has dimension " + std::to_string(u_basis.size()) +
                     " (cap " + std::to_string(kOracleMaxDimension) + ")");
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < u_basis.size(); ++k) {
    total *= p;
    if (total > kOracleMaxCandidates) {
      throw InputError("factor search needs more than " + std::to_string(kOracleMaxCandidates) +
                       " candidates (" + field.name() + ", dimension " +
                       std::to_string(u_basis.size()) + ")");
    }
  }
  if (f.is_constant()) return verdict;  // units are not products of non-units

  // u_basis is sorted by degree; index 0 is the constant monomial.
  std::vector<std::int64_t> u_deg;
  for (const auto& e : u_basis) u_deg.push_back(weighted_degree(e, w));

  std::vector<std::uint64_t> digits(u_basis.size(), 0);
  const std::vector<Scalar> residues = [&] {
    std::vector<Scalar> r;
    for (std::uint64_t k = 0; k < p; ++k) r.push_back(Scalar::from_int(field, static_cast<std::int64_t>(k)));
    return r;
  }();

  for (std::uint64_t iter = 0; iter < total; ++iter) {
    if (iter > 0) {
      std::size_t k = 0;
      while (digits[k] == p - 1) digits[k++] = 0;
      ++digits[k];
    }
    // Non-constant u, scaled so its last nonzero coefficient (highest
    // degree monomial in basis order) is one.
    std::size_t last = u_basis.size();
    for (std::size_t k = u_basis.size(); k-- > 0;) {
      if (digits[k] != 0) {
        last = k;
        break;
      }
    }
    if (last == u_basis.size() || u_deg[last] == 0 || digits[last] != 1) continue;
    ++verdict.candidates;
    Polynomial u(alg.ring());
    std::int64_t deg_u = 0;
    for (std::size_t k = 0; k <= last; ++k) {
      if (digits[k] == 0) continue;
      u.add_term(u_basis[k], residues[digits[k]]);
      deg_u = std::max(deg_u, u_deg[k]);
    }
    // Solve normal_form(u * v) = f over v of degree <= top - deg u.
    const auto v_basis = monomials_up_to(alg, top - deg_u);
    std::vector<Polynomial> images;
    std::map<Exponents, std::size_t> row_of;
    std::vector<Exponents> rows;
    auto row_index = [&](const Exponents& e) {
      auto [it, inserted] = row_of.try_emplace(e, rows.size());
      if (inserted) rows.push_back(e);
      return it->second;
    };
    for (const auto& [e, c] : f.terms()) row_index(e);
    for (const auto& m : v_basis) {
      images.push_back(alg.reduce(u * Polynomial::monomial(alg.ring(), m)));
      for (const auto& [e, c] : images.back().terms()) row_index(e);
    }
    Matrix mat(field, rows.size(), v_basis.size());
    for (std::size_t col = 0; col < images.size(); ++col) {
      for (const auto& [e, c] : images[col].terms()) mat(row_of.at(e), col) = c;
    }
    std::vector<Scalar> rhs;
    for (const auto& e : rows) rhs.push_back(f.coefficient(e));
    auto sol = solve(mat, rhs);
    if (!sol) continue;
    Polynomial v(alg.ring());
    for (std::size_t col = 0; col < v_basis.size(); ++col) v.add_term(v_basis[col], (*sol)[col]);
    if (v.is_constant()) continue;
    if (!(alg.reduce(u * v) == f)) {
      throw InvariantError("factorization check failed for u = " + u.to_string());
    }
    verdict.irreducible = false;
    verdict.u = std::move(u);
    verdict.v = std::move(v);
    return verdict;
  }
  return verdict;
}

}  // namespace gradalg
