#include "hilbertgeo/errors.hpp"

namespace hilbertgeo {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::InfiniteValue: return "InfiniteValue";
        case ErrorCode::NotCollinear: return "NotCollinear";
        case ErrorCode::IdenticalPoints: return "IdenticalPoints";
        case ErrorCode::IdenticalLines: return "IdenticalLines";
        case ErrorCode::SingularMap: return "SingularMap";
        case ErrorCode::InvalidDomain: return "InvalidDomain";
        case ErrorCode::PointsOutsideDomain: return "PointsOutsideDomain";
        case ErrorCode::NotOnBoundary: return "NotOnBoundary";
        case ErrorCode::NoUniqueTangent: return "NoUniqueTangent";
        case ErrorCode::DegenerateTangents: return "DegenerateTangents";
        case ErrorCode::RegionOutsideDomain: return "RegionOutsideDomain";
        case ErrorCode::VertexOnEdgeEndpoint: return "VertexOnEdgeEndpoint";
        case ErrorCode::EdgeMismatch: return "EdgeMismatch";
        case ErrorCode::NonPositiveCoordinate: return "NonPositiveCoordinate";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::GenusTooSmall: return "GenusTooSmall";
        case ErrorCode::TauLengthMismatch: return "TauLengthMismatch";
        case ErrorCode::NonNegativeChi: return "NonNegativeChi";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace hilbertgeo
