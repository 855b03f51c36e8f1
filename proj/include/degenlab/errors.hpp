#pragma once

#include <stdexcept>
#include <string>

namespace degenlab {

// Error families used across the library. The CLI maps families to exit
// codes (config -> 2, numerical -> 3, io -> 4); the C API maps them to
// dgl_status values.
enum class ErrorCode {
    invalid_range,
    truncation_dominated,
    divergent_constant,
    no_real_gap,
    endpoint_theta,
    singular_system,
    singular_step,
    undefined_ratio,
    grid_too_shallow,
    oscillatory_quadrature,
    support_violation,
    config_invalid,
    schema_violation,
    io_failure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

    bool is_config() const { return code_ == ErrorCode::config_invalid; }
    bool is_io() const {
        return code_ == ErrorCode::io_failure || code_ == ErrorCode::schema_violation;
    }

private:
    ErrorCode code_;
};

} // namespace degenlab
