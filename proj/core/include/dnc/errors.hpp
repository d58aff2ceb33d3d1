#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnc {

enum class ErrorCode {
    zero_input,
    incompatible_signatures,
    truncation_overflow,
    bounds_exceeded,
    not_in_projection_algebra,
    precondition_violated,
    invalid_signature,
    syntax_error,
    index_out_of_range,
    unitary_only,
    config_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code identifies the
/// failure class; the message carries the offending inputs.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure at a byte offset of the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error(ErrorCode::syntax_error, message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace dnc
