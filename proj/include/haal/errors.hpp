#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace haal {

enum class Errc {
    BlockPatternMismatch,
    NotQuaternionLinear,
    NotNilpotent,
    IndexOutOfRange,
    DimensionMismatch,
    InvalidParams,
    ZeroPolynomial,
    NotDeltaMember,
    NonUnitConstantTerm,
    NonMonic,
    SignPatternViolation,
    CommonRoot,
    NotConjugate,
    HeisenbergExcluded,
    NoAnticommutingL,
    UnsupportedSpectrum,
};

const char* errc_name(Errc e);

// Domain error: the input was well-formed but violates a mathematical precondition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Malformed textual input; position is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace haal
