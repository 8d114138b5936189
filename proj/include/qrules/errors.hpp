/*
   Copyright 2026 The qrules Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QRULES_ERRORS_HPP
#define QRULES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qrules {

enum class Errc {
    NonPrimeModulus,
    UnsupportedNesting,
    MixedContexts,
    NotInvertible,
    InvalidIndex,
    InexactDivision,
    DivisionByZero,
    RequiresField,
    BothZero,
    IndexOutOfBound,
    InconsistentRule,
    AffineSumNotOne,
    NotCanonical,
    MissingPrimeValue,
    RangeTooSmall,
    DimensionMismatch,
    ParseError,
    NegativeExponent,
    RationalOverNonField,
    DegreeCapExceeded,
    InvalidSpec,
    InvariantViolation,
};

inline std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::UnsupportedNesting: return "UnsupportedNesting";
    case Errc::MixedContexts: return "MixedContexts";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RequiresField: return "RequiresField";
    case Errc::BothZero: return "BothZero";
    case Errc::IndexOutOfBound: return "IndexOutOfBound";
    case Errc::InconsistentRule: return "InconsistentRule";
    case Errc::AffineSumNotOne: return "AffineSumNotOne";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::MissingPrimeValue: return "MissingPrimeValue";
    case Errc::RangeTooSmall: return "RangeTooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::RationalOverNonField: return "RationalOverNonField";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

    Errc code() const noexcept { return code_; }
    /// The message without the leading code name.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t offset, const std::string& what)
        : Error(code, what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace qrules

#endif // QRULES_ERRORS_HPP
