#ifndef QCWAVE_ERROR_HPP
#define QCWAVE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcwave {

enum class ErrorCode {
    NonPositiveModulus,
    NegativeCoupling,
    CouplingTooStrong,
    NonPositiveDensity,
    NonPositiveFrequency,
    DomainError,
    SourceCoincidesWithField,
    NonUnitNormal,
    SourceOnBoundary,
    SourceOutsideHalfPlane,
    PointOutsideHalfPlane,
    InvalidIncidenceAngle,
    InvalidAmplitude,
    StencilOutOfDomain,
    RadiusTooLarge,
    InvalidArgument,
    PreconditionViolated,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveModulus: return "NonPositiveModulus";
        case ErrorCode::NegativeCoupling: return "NegativeCoupling";
        case ErrorCode::CouplingTooStrong: return "CouplingTooStrong";
        case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
        case ErrorCode::NonPositiveFrequency: return "NonPositiveFrequency";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SourceCoincidesWithField: return "SourceCoincidesWithField";
        case ErrorCode::NonUnitNormal: return "NonUnitNormal";
        case ErrorCode::SourceOnBoundary: return "SourceOnBoundary";
        case ErrorCode::SourceOutsideHalfPlane: return "SourceOutsideHalfPlane";
        case ErrorCode::PointOutsideHalfPlane: return "PointOutsideHalfPlane";
        case ErrorCode::InvalidIncidenceAngle: return "InvalidIncidenceAngle";
        case ErrorCode::InvalidAmplitude: return "InvalidAmplitude";
        case ErrorCode::StencilOutOfDomain: return "StencilOutOfDomain";
        case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qcwave

#endif  // QCWAVE_ERROR_HPP
