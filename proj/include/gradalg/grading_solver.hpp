// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_GRADING_SOLVER_HPP
#define GRADALG_GRADING_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

/// deg(lhs) = deg(rhs) for two adjacent terms of one relation, i.e.
/// sum_i coeffs[i] * w_i = 0 with coeffs = lhs - rhs.
struct HomogeneityEquation {
  std::size_t relation = 0;
  Exponents lhs;
  Exponents rhs;
  std::vector<std::int64_t> coeffs;
};

struct HomogeneitySystem {
  std::vector<std::string> var_names;
  std::vector<HomogeneityEquation> equations;

  std::size_t num_vars() const { return var_names.size(); }
};

/// One equation per pair of adjacent terms in each relation. Only exponents
/// matter, never coefficients.
HomogeneitySystem homogeneity_system(const PresentedAlgebra& alg);

/// "2*w_x + w_z2 = 2*w_z1"
std::string format_equation(const HomogeneitySystem& sys, const HomogeneityEquation& eq);

/// Proof that no grading has every weight >= 1: nonnegative multipliers
/// lambda on the constraints w_i >= 1 and multipliers y on the equations with
/// sum_i lambda_i w_i = sum_e y_e (equation e), so sum lambda_i w_i vanishes on
/// every grading while w >= 1 would force it to be >= sum lambda_i > 0.
struct InfeasibilityCertificate {
  std::vector<Scalar> lambda;  // over Q, one per variable, >= 0
  std::vector<Scalar> y;       // over Q, one per equation
  /// A variable with lambda > 0: it is forced <= 0 once all others are >= 1.
  std::size_t forced_variable = 0;
};

struct GradingCone {
  HomogeneitySystem system;
  /// Primitive integer vectors (stored over Q) spanning the solution space.
  std::vector<std::vector<Scalar>> basis;
  std::size_t dimension = 0;
  bool has_positive = false;
  std::optional<WeightVector> sample_positive;
  std::optional<InfeasibilityCertificate> certificate;
};

/// Solution space by exact elimination; positivity (all w_i >= 1) by exact
/// Fourier-Motzkin elimination over the solution-space coordinates.
GradingCone solve_grading_cone(const HomogeneitySystem& sys);

/// Evaluates the original equations directly.
bool contains_weight(const GradingCone& cone, std::span<const std::int64_t> w);
bool contains_weight(const HomogeneitySystem& sys, std::span<const std::int64_t> w);

/// Re-derives the contradiction from the certificate alone.
bool verify_certificate(const HomogeneitySystem& sys, const InfeasibilityCertificate& cert);

/// Divides by the gcd of the absolute values of the entries.
WeightVector primitive_normalize(std::span<const std::int64_t> w);

}  // namespace gradalg

#endif  // GRADALG_GRADING_SOLVER_HPP
