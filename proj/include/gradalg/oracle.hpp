// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_ORACLE_HPP
#define GRADALG_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "gradalg/graded.hpp"

namespace gradalg {

/// Hard limits on the exhaustive searches.
inline constexpr std::uint64_t kOracleMaxPrime = 7;
inline constexpr std::size_t kOracleMaxDimension = 12;
inline constexpr std::uint64_t kOracleMaxCandidates = 100'000'000;

/// Counts normal-form monomials of degree d by scanning the full exponent box
/// 0 <= e_i <= d / w_i. Shares no code with graded_piece_basis.
std::int64_t dimension_bruteforce(const PresentedAlgebra& alg, std::int64_t d);

struct IrreducibilityVerdict {
  bool irreducible = true;
  std::optional<Polynomial> u;
  std::optional<Polynomial> v;
  /// Dimension of the space the smaller factor was searched in.
  std::size_t search_dimension = 0;
  /// Number of candidate smaller factors tried.
  std::uint64_t candidates = 0;
};

/// Exhaustive factorization search over F_p (p <= 7) in a positively graded
/// quotient. Every nontrivial factorization u*v = f has deg u + deg v = deg f,
/// so it suffices to enumerate u with deg u <= deg f / 2 (up to scalars) and
/// solve the linear system normal_form(u*v) = f for v.
IrreducibilityVerdict irreducible_bruteforce(const PresentedAlgebra& alg, const Polynomial& f,
                                             std::int64_t bound);

}  // namespace gradalg

#endif  // GRADALG_ORACLE_HPP
