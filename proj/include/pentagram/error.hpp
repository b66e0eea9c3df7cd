// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentagram {

enum class ErrorCode {
    MalformedLabel,
    IdentityNotAPoint,
    NonCommuting,
    DegeneratePair,
    DuplicatePoint,
    ProductNotScalar,
    NotASubspace,
    UnclassifiablePlane,
    BadIntersection,
    RepeatedMeetPoint,
    EvenParity,
    EvenParityConfigurationFound,
    UnknownSignature,
    MissingType,
    SelectorOutOfRange,
    BadCache,
    BadGoldenTable,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedLabel: return "MalformedLabel";
        case ErrorCode::IdentityNotAPoint: return "IdentityNotAPoint";
        case ErrorCode::NonCommuting: return "NonCommuting";
        case ErrorCode::DegeneratePair: return "DegeneratePair";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::ProductNotScalar: return "ProductNotScalar";
        case ErrorCode::NotASubspace: return "NotASubspace";
        case ErrorCode::UnclassifiablePlane: return "UnclassifiablePlane";
        case ErrorCode::BadIntersection: return "BadIntersection";
        case ErrorCode::RepeatedMeetPoint: return "RepeatedMeetPoint";
        case ErrorCode::EvenParity: return "EvenParity";
        case ErrorCode::EvenParityConfigurationFound: return "EvenParityConfigurationFound";
        case ErrorCode::UnknownSignature: return "UnknownSignature";
        case ErrorCode::MissingType: return "MissingType";
        case ErrorCode::SelectorOutOfRange: return "SelectorOutOfRange";
        case ErrorCode::BadCache: return "BadCache";
        case ErrorCode::BadGoldenTable: return "BadGoldenTable";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can dispatch on the kind of failure rather than on text.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace pentagram
