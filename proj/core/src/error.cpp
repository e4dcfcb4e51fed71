/*
   Copyright 2026 The windcert Authors

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

#include "windcert/error.hpp"

namespace windcert {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::InvalidSamples: return "InvalidSamples";
        case ErrorCode::TruncationMismatch: return "TruncationMismatch";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
        case ErrorCode::PhaseUnresolved: return "PhaseUnresolved";
        case ErrorCode::NonIntegerTotal: return "NonIntegerTotal";
        case ErrorCode::NotAnalytic: return "NotAnalytic";
        case ErrorCode::RankUnstable: return "RankUnstable";
        case ErrorCode::NoRationalModel: return "NoRationalModel";
        case ErrorCode::DegenerateFit: return "DegenerateFit";
        case ErrorCode::RootFindingFailed: return "RootFindingFailed";
        case ErrorCode::InsufficientSmoothness: return "InsufficientSmoothness";
        case ErrorCode::NodeOffCircle: return "NodeOffCircle";
        case ErrorCode::NodeValueZero: return "NodeValueZero";
        case ErrorCode::TruncationOverflow: return "TruncationOverflow";
        case ErrorCode::UnknownCase: return "UnknownCase";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace windcert
