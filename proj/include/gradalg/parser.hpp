// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_PARSER_HPP
#define GRADALG_PARSER_HPP

#include <string_view>

#include "gradalg/polynomial.hpp"

namespace gradalg {

/// Parses a polynomial over `ring`.
///
/// Grammar (whitespace is insignificant):
///
///     expr    := [+|-] term { (+|-) term }
///     term    := factor { [*] factor }
///     factor  := primary [ ^ integer ]
///     primary := integer [ / integer ] | identifier | ( expr )
///
/// Coefficients `a/b` are accepted over F_p as a * b^{-1}. Errors are
/// InputError with location "column N" (1-based).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace gradalg

#endif  // GRADALG_PARSER_HPP
