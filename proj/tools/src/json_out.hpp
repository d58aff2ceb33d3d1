#pragma once

#include <json.hpp>

#include "dnc/algebra.hpp"
#include "dnc/representation.hpp"
#include "dnc/verify.hpp"

namespace dnc::cli {

using nlohmann::json;

/// {"expression": ..., "terms": [{"monomial": ..., "coefficient": ...}]}.
/// Coefficients are evaluated to complex numbers when the angles are numeric.
json element_json(const Signature& sig, const ExactElement& x);

/// {"(k1,...,kn)": coefficient}
json state_json(const Signature& sig, const ExactState& v);

std::string coefficient_text(const Signature& sig, const PhasePolynomial& c);

json report_json(const Report& r);

} // namespace dnc::cli
