// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_REPORT_HPP
#define GRADALG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradalg/bk.hpp"
#include "gradalg/graded.hpp"

namespace gradalg::report {

using Json = nlohmann::ordered_json;

/// Every builder validates its result against the report schema and throws
/// InvariantError on mismatch.
Json grading(const PresentedAlgebra& alg);
Json signature(const PresentedAlgebra& alg, std::int64_t bound);
Json hilbert(const PresentedAlgebra& alg, std::int64_t upto);
Json tangent(const PresentedAlgebra& alg, const std::vector<Scalar>& point);
Json bk(const BkData& data);
Json irreducible(const PresentedAlgebra& alg, const std::string& element, std::int64_t bound);

/// Empty when valid, otherwise a description of the first violation.
std::string schema_violation(const Json& report);
void validate(const Json& report);

/// Two-space indentation plus a trailing newline.
std::string dump(const Json& report);

}  // namespace gradalg::report

#endif  // GRADALG_REPORT_HPP
