#include "dnc/errors.hpp"

#include <complex>
#include <sstream>

#include "dnc/coefficient.hpp"

namespace dnc {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::zero_input: return "ZeroInput";
    case ErrorCode::incompatible_signatures: return "IncompatibleSignatures";
    case ErrorCode::truncation_overflow: return "TruncationOverflow";
    case ErrorCode::bounds_exceeded: return "BoundsExceeded";
    case ErrorCode::not_in_projection_algebra: return "NotInProjectionAlgebra";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::invalid_signature: return "InvalidSignature";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::unitary_only: return "UnitaryOnly";
    case ErrorCode::config_error: return "ConfigError";
    }
    return "Unknown";
}

std::string CoefficientTraits<std::complex<double>>::to_string(const std::complex<double>& c) {
    std::ostringstream os;
    os.precision(17);
    os << c.real();
    if (c.imag() >= 0) os << '+';
    os << c.imag() << 'i';
    return os.str();
}

} // namespace dnc
