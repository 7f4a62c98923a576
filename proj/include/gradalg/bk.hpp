// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_BK_HPP
#define GRADALG_BK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

/// Data (a, b, c_1..c_n, lambda_1..lambda_n) of the surface
/// k[x, y, z_1..z_n] / (x^a + lambda_i y^b + z_i^{c_i}).
struct BkData {
  FieldSpec field;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> c;
  std::vector<Scalar> lambdas;

  std::size_t n() const { return c.size(); }
};

struct BkValidation {
  bool valid = true;
  std::vector<std::string> reasons;
};

BkValidation validate_bk(const BkData& data);

/// Variable names: x, y, then z (n = 1) or z1..zn.
std::vector<std::string> bk_variable_names(std::size_t n);

struct CanonicalGrading {
  std::int64_t N = 0;
  WeightVector weights;
};

/// N = a b c_1 ... c_n with weights (N/a, N/b, N/c_1, ..., N/c_n).
CanonicalGrading canonical_grading(const BkData& data);

/// The presented algebra with canonical weights attached. Its rewrite system
/// is z_i^{c_i} -> -x^a - lambda_i y^b.
PresentedAlgebra bk_algebra(const BkData& data);

/// Exact data equality, which decides isomorphism within the family.
bool same_class(const BkData& lhs, const BkData& rhs);

/// n + 2, cross-checked against the tangent space at the origin.
std::int64_t min_generators(const BkData& data);

}  // namespace gradalg

#endif  // GRADALG_BK_HPP
