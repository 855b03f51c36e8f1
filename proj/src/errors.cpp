#include "degenlab/errors.hpp"

namespace degenlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_range: return "invalid-range";
        case ErrorCode::truncation_dominated: return "truncation-dominated";
        case ErrorCode::divergent_constant: return "divergent-constant";
        case ErrorCode::no_real_gap: return "no-real-gap";
        case ErrorCode::endpoint_theta: return "endpoint-theta";
        case ErrorCode::singular_system: return "singular-system";
        case ErrorCode::singular_step: return "singular-step";
        case ErrorCode::undefined_ratio: return "undefined-ratio";
        case ErrorCode::grid_too_shallow: return "grid-too-shallow";
        case ErrorCode::oscillatory_quadrature: return "oscillatory-quadrature";
        case ErrorCode::support_violation: return "support-violation";
        case ErrorCode::config_invalid: return "config-invalid";
        case ErrorCode::schema_violation: return "schema-violation";
        case ErrorCode::io_failure: return "io-failure";
    }
    return "unknown";
}

} // namespace degenlab
