/*
 * Copyright 2026 The qcpc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcpc {

enum class ErrorKind {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    FieldMismatch,
    DivisionByZero,
    NoSuchRoot,
    BothZero,
    NotCoprime,
    CoefficientNotInBaseField,
    NotADivisor,
    NonPrefixPattern,
    MessageDegreeTooLarge,
    DegreeOverflow,
    IndexOutOfRange,
    DimensionMismatch,
    ParamMismatch,
    NotOneLevel,
    RankMismatch,
    TooLarge,
    ShapeMismatch,
    Parse,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::CoefficientNotInBaseField: return "CoefficientNotInBaseField";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::NonPrefixPattern: return "NonPrefixPattern";
        case ErrorKind::MessageDegreeTooLarge: return "MessageDegreeTooLarge";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ParamMismatch: return "ParamMismatch";
        case ErrorKind::NotOneLevel: return "NotOneLevel";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the CLI)
/// can dispatch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qcpc
