#pragma once

#include <string_view>

#include <json.hpp>

#include "cohomdet/forms.hpp"
#include "cohomdet/gluing.hpp"
#include "cohomdet/int_matrix.hpp"

namespace cohomdet {

using Json = nlohmann::ordered_json;

/// Parses JSON text, turning syntax errors into ParseError.
Json parse_json_text(std::string_view text);

/// {"kind": "closed"|"boundary"|"massey", "n": .., "m": .. (massey), "entries": [{"idx": [..], "val": ..}]}
/// Indices are 1-based, omitted entries are 0, duplicates are rejected.
/// The tensor is validated for its kind; unknown keys are ignored.
Form form_from_json(const Json& j);
/// Nonzero entries in index order.
Json form_to_json(const Form& f);

/// Array of integer rows.
IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

GluingInstance instance_from_json(const Json& j);
Json instance_to_json(const GluingInstance& inst);

/// lhs/rhs as canonical polynomial text, verdict "pass" or "fail".
Json report_to_json(const GluingReport& r);

/// True when the document describes a gluing instance rather than a tensor.
bool is_instance_json(const Json& j);

}  // namespace cohomdet
