// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_GRADED_HPP
#define GRADALG_GRADED_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradalg/polynomial.hpp"

namespace gradalg {

/// Integer weight per variable; entries may be zero or negative.
using WeightVector = std::vector<std::int64_t>;

std::int64_t weighted_degree(const Exponents& exps, std::span<const std::int64_t> weights);

struct Homogeneity {
  enum class Kind { Homogeneous, NotHomogeneous, ZeroPolynomial };
  Kind kind;
  std::int64_t degree = 0;  // meaningful only for Homogeneous

  bool is_homogeneous() const { return kind != Kind::NotHomogeneous; }
};

Homogeneity homogeneity(const Polynomial& p, std::span<const std::int64_t> weights);

/// Splits p into weighted-homogeneous components, keyed by degree.
std::vector<std::pair<std::int64_t, Polynomial>> homogeneous_components(
    const Polynomial& p, std::span<const std::int64_t> weights);

/// var^exponent -> replacement, where replacement does not involve var.
struct RewriteRule {
  std::size_t var;
  int exponent;
  Polynomial replacement;
};

/// A set of pure-power rewrite rules on distinct variables whose dependency
/// graph is acyclic. Such a system is a Groebner basis for a lex order that
/// puts every rewritten variable above the variables of its replacement, so
/// normal forms are unique coset representatives.
class RewriteSystem {
 public:
  RewriteSystem(RingPtr ring, std::vector<RewriteRule> rules);

  /// Derives one rule from each relation, preferring the highest-index
  /// variable that occurs as a lone pure power. nullopt if some relation has
  /// no usable variable or the choices are cyclic.
  static std::optional<RewriteSystem> detect(const RingPtr& ring,
                                             std::span<const Polynomial> relations);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  /// Exponent of the rule on `var`, if any.
  std::optional<int> cap(std::size_t var) const;
  bool is_normal(const Exponents& exps) const;
  /// True if every term of p is a normal monomial.
  bool is_normal(const Polynomial& p) const;

 private:
  RingPtr ring_;
  std::vector<RewriteRule> rules_;
  std::vector<int> caps_;  // 0 = no rule
};

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs);

/// A finitely presented commutative algebra k[vars]/(relations), optionally
/// carrying a weight vector under which every relation is homogeneous.
class PresentedAlgebra {
 public:
  PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations,
                   std::optional<WeightVector> weights = std::nullopt);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field(); }
  std::size_t num_vars() const noexcept { return ring_->num_vars(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const std::optional<WeightVector>& weights() const noexcept { return weights_; }
  const std::optional<RewriteSystem>& rewrite_system() const noexcept { return rewrite_; }

  bool has_positive_weights() const;
  PresentedAlgebra with_weights(std::optional<WeightVector> weights) const;

  /// Normal form if a rewrite system is available; the input otherwise
  /// (only valid for free rings).
  Polynomial reduce(const Polynomial& p) const;

  friend bool operator==(const PresentedAlgebra& lhs, const PresentedAlgebra& rhs);

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::optional<WeightVector> weights_;
  std::optional<RewriteSystem> rewrite_;
};

/// Throws InputError unless `alg` has all-positive weights and is either
/// free or carries a rewrite system.
void require_graded_pieces(const PresentedAlgebra& alg);

/// Normal-form monomials of weighted degree exactly d, grlex-descending.
std::vector<Exponents> graded_piece_basis(const PresentedAlgebra& alg, std::int64_t d);

/// Normal-form monomials with weighted degree in [0, d], sorted by degree
/// then grlex-descending.
std::vector<Exponents> filtration_basis(const PresentedAlgebra& alg, std::int64_t d);

std::int64_t hilbert_dim(const PresentedAlgebra& alg, std::int64_t d);

/// dim of the degree-j piece of the Veronese subring R^(a), i.e. dim R_{a j}.
std::int64_t veronese_dim(const PresentedAlgebra& alg, std::int64_t a, std::int64_t j);

/// dim B_0..dim B_upto from the series prod(1 - t^(e_v w_v)) / prod(1 - t^(w_i)).
std::vector<std::int64_t> hilbert_series_dims(const PresentedAlgebra& alg,
                                              std::int64_t upto);

/// Units of a positively graded domain are the nonzero constants.
bool is_unit(const Polynomial& p, const PresentedAlgebra& alg);

struct ActionClass {
  enum class Kind { Elliptic, Parabolic, Hyperbolic };
  Kind kind;
  bool effective;
  bool good;
};

ActionClass classify_action(std::span<const std::int64_t> weights);
std::string to_string(ActionClass::Kind kind);

std::int64_t gcd_of_weights(std::span<const std::int64_t> weights);

}  // namespace gradalg

#endif  // GRADALG_GRADED_HPP
