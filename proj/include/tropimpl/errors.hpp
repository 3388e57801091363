#pragma once

#include <stdexcept>
#include <string>

namespace tropimpl {

enum class ErrorCode {
    Parse,
    DimensionMismatch,
    SpanMismatch,
    RankDeficient,
    RowSpanMissingOnes,
    LatticeMismatch,
    LatticeEnumerationTooLarge,
    LoopyMatroid,
    NonDivisibleDegree,
    InvalidArgument,
    ReconstructionFailed,
    GenericityExhausted,
    OracleInconsistent,
    SamplingExhausted,
    KernelTooBig,
    KernelEmpty,
    VerificationFailed,
    ShiftSearchFailed,
};

// Stable machine-readable name, used in CLI error JSON.
const char* error_name(ErrorCode code);

// Exit code class: 3 for precondition violations, 4 for computation failures.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace tropimpl
