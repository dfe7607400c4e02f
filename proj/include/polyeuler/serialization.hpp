#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyeuler/identity_suite.hpp"
#include "polyeuler/polynomial.hpp"

namespace polyeuler {

using Json = nlohmann::ordered_json;

/// Nested arrays [x-degree][lambda-degree] of "p/q" strings. Zero is [].
Json polynomial_to_json(const XLambdaPoly& p);
/// Inverse of polynomial_to_json; throws ParseError on malformed input.
XLambdaPoly polynomial_from_json(const Json& j);

/// Monomial rendering for CSV cells, e.g. "x^2 - 1/2*lambda*x + 3".
/// Terms run by decreasing x-degree, then decreasing lambda-degree.
std::string polynomial_to_monomials(const XLambdaPoly& p);

Json report_to_json(const IdentityReport& r);
Json summary_to_json(const SuiteSummary& s);

/// {"header": ..., "reports": [...], "summary": {...}}. Only the header
/// carries timing data.
Json suite_to_json(const SuiteResult& result, const Json& header);

/// One line per report: id,variant,class,must_pass,verdict,n_min,n_max,k,failure_n,failure_k
std::string suite_to_csv(const SuiteResult& result);

/// CSV field quoting (only when needed).
std::string csv_field(const std::string& s);

}  // namespace polyeuler
