// SPDX-License-Identifier: Apache-2.0

#include "gradalg/signature.hpp"

#include <algorithm>
#include <map>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

std::vector<std::vector<int>> degree_compositions(std::span<const std::int64_t> degrees,
                                                  std::int64_t d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> current(degrees.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, std::int64_t remaining) -> void {
    if (k == degrees.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (std::int64_t e = 0; e * degrees[k] <= remaining; ++e) {
      current[k] = static_cast<int>(e);
      self(self, k + 1, remaining - e * degrees[k]);
    }
    current[k] = 0;
  };
  rec(rec, 0, d);
  return out;
}

namespace {

/// Normal forms of generator products, with powers cached.
class ProductCache {
 public:
  ProductCache(const PresentedAlgebra& alg, std::vector<Polynomial> gens)
      : alg_(alg), gens_(std::move(gens)), powers_(gens_.size()) {}

  void add(Polynomial gen) {
    gens_.push_back(std::move(gen));
    powers_.emplace_back();
  }

  const std::vector<Polynomial>& gens() const { return gens_; }

  Polynomial product(const std::vector<int>& alpha) {
    Polynomial acc = Polynomial::constant(alg_.ring(), 1);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      acc = alg_.reduce(acc * power(k, alpha[k]));
    }
    return acc;
  }

 private:
  const Polynomial& power(std::size_t k, int e) {
    auto& cache = powers_[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(alg_.ring(), 1));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(alg_.reduce(cache.back() * gens_[k]));
    }
    return cache[static_cast<std::size_t>(e)];
  }

  const PresentedAlgebra& alg_;
  std::vector<Polynomial> gens_;
  std::vector<std::vector<Polynomial>> powers_;
};

std::vector<std::int64_t> generator_degrees(std::span<const Polynomial> gens,
                                            const PresentedAlgebra& alg) {
  std::vector<std::int64_t> degrees;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Homogeneity h = homogeneity(gens[k], *alg.weights());
    if (h.kind != Homogeneity::Kind::Homogeneous || h.degree <= 0) {
      throw InputError("generator " + std::to_string(k + 1) + " (" + gens[k].to_string() +
                       ") is not homogeneous of positive degree");
    }
    degrees.push_back(h.degree);
  }
  return degrees;
}

/// Coordinates of the products of degree d in the monomial basis of B_d.
Matrix span_matrix(ProductCache& cache, const std::vector<std::vector<int>>& alphas,
                   const std::vector<Exponents>& basis, const FieldSpec& field) {
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t r = 0; r < basis.size(); ++r) row_of.emplace(basis[r], r);
  Matrix m(field, basis.size(), alphas.size());
  for (std::size_t c = 0; c < alphas.size(); ++c) {
    const Polynomial prod = cache.product(alphas[c]);
    for (const auto& [e, coeff] : prod.terms()) {
      auto it = row_of.find(e);
      if (it == row_of.end()) {
        throw InvariantError("product of homogeneous generators left its graded piece");
      }
      m(it->second, c) = coeff;
    }
  }
  return m;
}

std::vector<Scalar> coordinates(const Polynomial& f, const std::vector<Exponents>& basis) {
  std::vector<Scalar> v;
  v.reserve(basis.size());
  for (const auto& e : basis) v.push_back(f.coefficient(e));
  return v;
}

RingPtr certificate_ring(const FieldSpec& field, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= m; ++k) names.push_back("X" + std::to_string(k));
  return make_ring(field, std::move(names));
}

Membership membership_with_cache(const Polynomial& f_raw, ProductCache& cache,
                                 const std::vector<std::int64_t>& degrees,
                                 const PresentedAlgebra& alg, std::int64_t bound) {
  const Polynomial f = alg.reduce(f_raw);
  const Homogeneity h = homogeneity(f, *alg.weights());
  if (h.kind == Homogeneity::Kind::NotHomogeneous) {
    throw InputError("membership needs a homogeneous element, got " + f.to_string());
  }
  RingPtr cring = certificate_ring(alg.field(), degrees.size());
  if (h.kind == Homogeneity::Kind::ZeroPolynomial) return {true, Polynomial(cring)};
  if (h.degree > bound) {
    throw InputError("element degree " + std::to_string(h.degree) + " exceeds bound " +
                     std::to_string(bound));
  }
  const auto basis = graded_piece_basis(alg, h.degree);
  const auto alphas = degree_compositions(degrees, h.degree);
  const Matrix m = span_matrix(cache, alphas, basis, alg.field());
  const auto rhs = coordinates(f, basis);
  auto sol = solve(m, rhs);
  if (!sol) return {false, std::nullopt};
  Polynomial cert(cring);
  for (std::size_t c = 0; c < alphas.size(); ++c) {
    cert.add_term(Exponents(alphas[c].begin(), alphas[c].end()), (*sol)[c]);
  }
  return {true, std::move(cert)};
}

}  // namespace

Membership subalgebra_membership(const Polynomial& f, std::span<const Polynomial> gens,
                                 const PresentedAlgebra& alg, std::int64_t bound) {
  require_graded_pieces(alg);
  std::vector<Polynomial> reduced;
  for (const auto& g : gens) reduced.push_back(alg.reduce(g));
  const auto degrees = generator_degrees(reduced, alg);
  ProductCache cache(alg, std::move(reduced));
  return membership_with_cache(f, cache, degrees, alg, bound);
}

std::int64_t default_signature_bound(const PresentedAlgebra& alg) {
  require_graded_pieces(alg);
  std::int64_t sum = 0;
  for (const auto& rel : alg.relations()) {
    for (const auto& [e, c] : rel.terms()) {
      sum += weighted_degree(e, *alg.weights());
      break;
    }
  }
  const auto& w = *alg.weights();
  return std::max(sum, *std::max_element(w.begin(), w.end()));
}

SignatureSequence compute_signature_sequence(const PresentedAlgebra& alg, std::int64_t bound) {
  require_graded_pieces(alg);
  const auto& w = *alg.weights();
  const std::int64_t min_weight = *std::min_element(w.begin(), w.end());
  if (bound < min_weight) {
    throw InputError("bound " + std::to_string(bound) +
                         " is below the smallest positive weight " + std::to_string(min_weight),
                     "--bound");
  }
  SignatureSequence seq;
  ProductCache cache(alg, {});
  for (std::int64_t d = 1; d <= bound; ++d) {
    auto basis = graded_piece_basis(alg, d);
    if (basis.empty()) continue;
    std::reverse(basis.begin(), basis.end());  // grlex-ascending
    for (const auto& mono : basis) {
      const Polynomial candidate = Polynomial::monomial(alg.ring(), mono);
      if (membership_with_cache(candidate, cache, seq.degrees, alg, bound).member) continue;
      cache.add(candidate);
      seq.elements.push_back(candidate);
      seq.degrees.push_back(d);
    }
  }
  seq.complete_up_to = bound;
  seq.complete = true;
  for (std::size_t v = 0; v < alg.num_vars() && seq.complete; ++v) {
    if (w[v] > bound) {
      seq.complete = false;
      break;
    }
    const Polynomial var = Polynomial::variable(alg.ring(), v);
    seq.complete = membership_with_cache(var, cache, seq.degrees, alg, bound).member;
  }
  return seq;
}

bool check_proposition_intersect(const PresentedAlgebra& alg, const SignatureSequence& seq,
                                 std::size_t n, const Polynomial& b) {
  require_graded_pieces(alg);
  if (n < 1 || n > seq.elements.size()) {
    throw InputError("index " + std::to_string(n) + " outside the sequence (length " +
                     std::to_string(seq.elements.size()) + ")");
  }
  if (alg.rewrite_system() && !alg.rewrite_system()->is_normal(b)) {
    throw InputError("element is not in normal form");
  }
  const std::int64_t dn = seq.degrees[n - 1];
  std::vector<Polynomial> prefix(seq.elements.begin(),
                                 seq.elements.begin() + static_cast<std::ptrdiff_t>(n - 1));
  const auto degrees = generator_degrees(prefix, alg);
  ProductCache cache(alg, std::move(prefix));
  for (const auto& [deg, part] : homogeneous_components(b, *alg.weights())) {
    if (deg >= dn) {
      throw InputError("element has a term of degree " + std::to_string(deg) +
                       ", not below d_n = " + std::to_string(dn));
    }
    if (!membership_with_cache(part, cache, degrees, alg, dn).member) return false;
  }
  return true;
}

bool pairwise_independence(const PresentedAlgebra& alg, const SignatureSequence& seq,
                           std::size_t i, std::size_t j, std::int64_t bound) {
  require_graded_pieces(alg);
  if (!(0 < i && i < j && j <= seq.elements.size())) {
    throw InputError("need 0 < i < j <= " + std::to_string(seq.elements.size()) + ", got i=" +
                     std::to_string(i) + ", j=" + std::to_string(j));
  }
  std::vector<Polynomial> pair{seq.elements[i - 1], seq.elements[j - 1]};
  const auto degrees = generator_degrees(pair, alg);
  ProductCache cache(alg, std::move(pair));
  for (std::int64_t d = 1; d <= bound; ++d) {
    const auto alphas = degree_compositions(degrees, d);
    if (alphas.empty()) continue;
    const auto basis = graded_piece_basis(alg, d);
    const Matrix m = span_matrix(cache, alphas, basis, alg.field());
    if (rank(m) != alphas.size()) return false;
  }
  return true;
}

}  // namespace gradalg
