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

#ifndef WINDCERT_ERROR_HPP
#define WINDCERT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace windcert {

/// Failure categories raised by the library. Each maps to one
/// user-visible condition; the CLI turns them into exit codes.
enum class ErrorCode {
    InvalidGrid,
    InvalidSamples,
    TruncationMismatch,
    DegreeTooHigh,
    ZeroOnBoundary,
    PhaseUnresolved,
    NonIntegerTotal,
    NotAnalytic,
    RankUnstable,
    NoRationalModel,
    DegenerateFit,
    RootFindingFailed,
    InsufficientSmoothness,
    NodeOffCircle,
    NodeValueZero,
    TruncationOverflow,
    UnknownCase,
    BadParams,
    BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace windcert

#endif  // WINDCERT_ERROR_HPP
