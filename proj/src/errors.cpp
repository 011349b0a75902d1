#include "haal/errors.hpp"

namespace haal {

const char* errc_name(Errc e)
{
    switch (e) {
    case Errc::BlockPatternMismatch: return "BlockPatternMismatch";
    case Errc::NotQuaternionLinear: return "NotQuaternionLinear";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotDeltaMember: return "NotDeltaMember";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::NonMonic: return "NonMonic";
    case Errc::SignPatternViolation: return "SignPatternViolation";
    case Errc::CommonRoot: return "CommonRoot";
    case Errc::NotConjugate: return "NotConjugate";
    case Errc::HeisenbergExcluded: return "HeisenbergExcluded";
    case Errc::NoAnticommutingL: return "NoAnticommutingL";
    case Errc::UnsupportedSpectrum: return "UnsupportedSpectrum";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos)
{
}

}  // namespace haal
