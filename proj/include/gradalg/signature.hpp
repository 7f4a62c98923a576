// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_SIGNATURE_HPP
#define GRADALG_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

struct Membership {
  bool member = false;
  /// Expression of f in generator symbols X1..Xm; set when member.
  std::optional<Polynomial> certificate;
};

/// Decides whether the homogeneous element f lies in k[gens] by checking the
/// span of all generator products of the same weighted degree. Requires
/// positive weights and computable graded pieces.
Membership subalgebra_membership(const Polynomial& f, std::span<const Polynomial> gens,
                                 const PresentedAlgebra& alg, std::int64_t bound);

/// Greedy minimal-degree generators h1, h2, ... (h0 = 1 is implicit).
struct SignatureSequence {
  std::vector<Polynomial> elements;
  std::vector<std::int64_t> degrees;
  std::int64_t complete_up_to = 0;
  /// Every ring variable lies in k[elements], so the sequence generates the
  /// whole algebra.
  bool complete = false;
};

/// Scans degrees 1..bound; at each degree adjoins, one at a time, the
/// grlex-smallest basis monomial outside the current subalgebra.
SignatureSequence compute_signature_sequence(const PresentedAlgebra& alg, std::int64_t bound);

/// Default scan bound: the sum of relation degrees, at least the largest weight.
std::int64_t default_signature_bound(const PresentedAlgebra& alg);

/// Checks that every homogeneous component of b (all of degree < d_n) lies
/// in k[h_1, ..., h_{n-1}]. `n` is 1-based.
bool check_proposition_intersect(const PresentedAlgebra& alg, const SignatureSequence& seq,
                                 std::size_t n, const Polynomial& b);

/// True iff the products h_i^p h_j^q of each degree <= bound are linearly
/// independent. `i` and `j` are 1-based with i < j.
bool pairwise_independence(const PresentedAlgebra& alg, const SignatureSequence& seq,
                           std::size_t i, std::size_t j, std::int64_t bound);

/// Exponent vectors alpha >= 0 with sum(alpha_k * degrees_k) == d.
std::vector<std::vector<int>> degree_compositions(std::span<const std::int64_t> degrees,
                                                  std::int64_t d);

}  // namespace gradalg

#endif  // GRADALG_SIGNATURE_HPP
