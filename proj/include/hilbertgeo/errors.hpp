#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbertgeo {

enum class ErrorCode {
    InvalidArgument,
    DegenerateConfiguration,
    InfiniteValue,
    NotCollinear,
    IdenticalPoints,
    IdenticalLines,
    SingularMap,
    InvalidDomain,
    PointsOutsideDomain,
    NotOnBoundary,
    NoUniqueTangent,
    DegenerateTangents,
    RegionOutsideDomain,
    VertexOnEdgeEndpoint,
    EdgeMismatch,
    NonPositiveCoordinate,
    DomainError,
    NonConvergence,
    GenusTooSmall,
    TauLengthMismatch,
    NonNegativeChi,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every library failure. The code identifies the failure
/// class so callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when an iterative numeric routine exhausts its budget. Carries the
/// best estimate reached so far.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, double partial_value, double error_estimate)
        : Error(ErrorCode::NonConvergence, what),
          partial_value_(partial_value),
          error_estimate_(error_estimate) {}

    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_value_;
    double error_estimate_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace hilbertgeo
