// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_CONSTRUCTIONS_HPP
#define GRADALG_CONSTRUCTIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

/// A constructed algebra plus notes on degenerate-but-accepted inputs.
struct Construction {
  PresentedAlgebra algebra;
  std::vector<std::string> flags;
};

/// Re-embeds p into `bigger`, whose variable list must extend p's.
Polynomial extend_ring(const Polynomial& p, const RingPtr& bigger);

/// Cyclic cover A[Z]/(Z^c - F) of a graded A. F must be homogeneous of some
/// degree w with gcd(c, w) = 1; the result carries weights c * (base
/// weights) and w on Z, making Z^c - F homogeneous of degree c * w.
Construction samuel_extend(const PresentedAlgebra& base, const Polynomial& F, std::int64_t c,
                           const std::string& new_var = "z");

/// A[Z_1..Z_n]/(f Z_i - a_i). When the base is graded, f and the a_i must be
/// homogeneous and Z_i gets weight deg(a_i) - deg(f).
Construction affine_modification(const PresentedAlgebra& base, const Polynomial& f,
                                 std::span<const Polynomial> ideal_gens,
                                 std::vector<std::string> new_vars = {});

/// Generators z_i^{a_i} + z_{i-1}^{b_i} (1 <= i <= n) in k[z0..zn].
std::vector<Polynomial> prime_chain_ideal(const FieldSpec& field, std::span<const int> a,
                                          std::span<const int> b);

/// Checks gcd(a_i, b_1 ... b_i) = 1 for each i; throws InputError naming the
/// first failing (1-based) index.
void check_chain_gcd(std::span<const int> a, std::span<const int> b);

struct BnData {
  FieldSpec field;
  /// p(x) = sum_k p_coeffs[k] x^k.
  std::vector<Scalar> p_coeffs;
  std::vector<int> a;
  std::vector<int> b;

  std::size_t n() const { return a.size(); }
};

/// k[x, z0..z_{n+1}] / (p(x) z_{i+1} + z_i^{a_i} + z_{i-1}^{b_i}), 1 <= i <= n.
/// Ungraded.
Construction bn_algebra(const BnData& data);

/// p(x) as a polynomial in `ring`, whose variable 0 is x.
Polynomial bn_p_of_x(const BnData& data, const RingPtr& ring);

struct JacobianReport {
  /// matrix[r][v] = d relation_r / d var_v
  std::vector<std::vector<Polynomial>> matrix;
  std::vector<Scalar> point;
  std::size_t rank = 0;
  std::size_t tangent_dim = 0;
};

/// Embedding dimension at a rational point: number of variables minus the
/// rank of the evaluated Jacobian. Throws if some relation does not vanish at
/// the point.
JacobianReport jacobian_tangent_dim(const PresentedAlgebra& alg, std::span<const Scalar> point);

}  // namespace gradalg

#endif  // GRADALG_CONSTRUCTIONS_HPP
