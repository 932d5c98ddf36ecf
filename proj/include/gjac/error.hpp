/*
   Copyright 2026 The gjac Authors

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

#ifndef GJAC_ERROR_HPP
#define GJAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gjac {

enum class ErrorKind {
    InsufficientMoments,
    AllZero,
    DegreeCapExceeded,
    EmptyPFraction,
    NotEnoughTerms,
    OutOfRange,
    NotMonic,
    NotNormalized,
    SupportTooWide,
    BadRange,
    PoleAtLambda,
    TruncationTooShallow,
    BadIndex,
    NotPeriodic,
    Parse,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InsufficientMoments: return "InsufficientMoments";
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::EmptyPFraction: return "EmptyPFraction";
        case ErrorKind::NotEnoughTerms: return "NotEnoughTerms";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::SupportTooWide: return "SupportTooWide";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::PoleAtLambda: return "PoleAtLambda";
        case ErrorKind::TruncationTooShallow: return "TruncationTooShallow";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::NotPeriodic: return "NotPeriodic";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gjac

#endif  // GJAC_ERROR_HPP
