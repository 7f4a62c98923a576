// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_PRESENTATION_HPP
#define GRADALG_PRESENTATION_HPP

#include <string>
#include <string_view>

#include "gradalg/graded.hpp"

namespace gradalg {

/// Line-oriented presentation file:
///
///     field: Q            (or F<p>, e.g. F7)
///     vars: x y z
///     weights: 6 10 15    (optional)
///     rel: x^5 + y^3 + z^2
///     rel: ...            (zero or more)
///
/// Blank lines and lines starting with '#' are ignored. Errors carry
/// "line N" (plus the column for polynomial errors).
PresentedAlgebra parse_presentation(std::string_view text);

/// Canonical text; parse_presentation(print_presentation(a)) == a.
std::string print_presentation(const PresentedAlgebra& alg);

}  // namespace gradalg

#endif  // GRADALG_PRESENTATION_HPP
