#include "tropimpl/errors.hpp"

namespace tropimpl {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "parse";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::SpanMismatch: return "span_mismatch";
        case ErrorCode::RankDeficient: return "rank_deficient";
        case ErrorCode::RowSpanMissingOnes: return "row_span_missing_ones";
        case ErrorCode::LatticeMismatch: return "lattice_mismatch";
        case ErrorCode::LatticeEnumerationTooLarge: return "lattice_enumeration_too_large";
        case ErrorCode::LoopyMatroid: return "loopy_matroid";
        case ErrorCode::NonDivisibleDegree: return "non_divisible_degree";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::ReconstructionFailed: return "reconstruction_failed";
        case ErrorCode::GenericityExhausted: return "genericity_exhausted";
        case ErrorCode::OracleInconsistent: return "oracle_inconsistent";
        case ErrorCode::SamplingExhausted: return "sampling_exhausted";
        case ErrorCode::KernelTooBig: return "kernel_too_big";
        case ErrorCode::KernelEmpty: return "kernel_empty";
        case ErrorCode::VerificationFailed: return "verification_failed";
        case ErrorCode::ShiftSearchFailed: return "shift_search_failed";
    }
    return "unknown";
}

int error_exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
            return 2;
        case ErrorCode::DimensionMismatch:
        case ErrorCode::SpanMismatch:
        case ErrorCode::RankDeficient:
        case ErrorCode::RowSpanMissingOnes:
        case ErrorCode::LatticeMismatch:
        case ErrorCode::LatticeEnumerationTooLarge:
        case ErrorCode::LoopyMatroid:
        case ErrorCode::InvalidArgument:
            return 3;
        default:
            return 4;
    }
}

}  // namespace tropimpl
