#pragma once

#include <json.hpp>

#include "vqr/properties.hpp"
#include "vqr/realism.hpp"
#include "vqr/states.hpp"

namespace vqr {

using Json = nlohmann::ordered_json;

/// [[re, im], ...] row-major.
Json matrix_to_json(const Matrix& m);
/// Throws ParseError unless `j` is a list of dim*dim [re, im] pairs.
Matrix matrix_from_json(const Json& j, std::size_t dim);

/// {dims, entries}.
Json state_to_json(const DensityMatrix& rho);
/// Validates the state; ParseError on malformed JSON.
DensityMatrix state_from_json(const Json& j);

/// {subsystem, local_dim, eigenvalues, projectors: [entries, ...]}.
Json observable_to_json(const Observable& a);
/// Accepts the form above, or {subsystem, dims: [d], entries} holding a
/// Hermitian local operator whose spectral projectors are used.
Observable observable_from_json(const Json& j);

/// {kind, params, r_value, r_max, delta_i, vqr_detected}; unverified_axioms is
/// added for L_p kinds.
Json realism_report_to_json(const RealismReport& report, const Json& params = Json::object());

/// {kind, property, trials, violations, worst_case, example_seed}.
Json property_report_to_json(const PropertyReport& report);

}  // namespace vqr
