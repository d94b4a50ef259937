#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "germdeform/classify.hpp"

namespace germdeform {

using json = nlohmann::json;

/// Serializes with sorted keys, two-space indentation, scalar arrays on one
/// line and floating point values printed with 15 significant digits.
std::string dump_json(const json& j);

json complex_to_json(cplx c);
/// Accepts [re, im] or a bare number.
cplx complex_from_json(const json& j);
std::vector<cplx> complex_list_from_json(const json& j);
json complex_list_to_json(std::span<const cplx> v);

/// Terms [[a, b, re, im], ...] (im optional).
std::vector<Term> terms_from_json(const json& j);
json terms_to_json(const BiPoly& p);

/// Germ from {"terms": ..., "delta1"?, "delta2"?}; order_override > 0 replaces the jet order.
Germ germ_from_json(const json& j, int order_override = 0);
/// Optional "basis": list of term lists.
std::optional<std::vector<BiPoly>> basis_from_json(const json& j);

/// F from [[a, b, k, re, im], ...].
TriPoly tripoly_from_json(const json& j);

json analyze_to_json(const Germ& g, const QuotientData& q);
json family_to_json(const UniversalFamily& fam);
json fiber_report_to_json(const FiberReport& rep);
FiberReport fiber_report_from_json(const json& j);
json classify_result_to_json(const ClassifyResult& res, const PullbackReport& pull);

}  // namespace germdeform
