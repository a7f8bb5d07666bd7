/*
   Copyright 2026 The pcanon Authors

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

#ifndef PCANON_ERROR_HPP
#define PCANON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcanon {

/// Every failure the library can report. The names returned by error_name()
/// are part of the CLI contract and must stay stable.
enum class ErrorCode {
    MixedFields,
    NumericFieldUnsupported,
    ZeroPolynomial,
    NonMonic,
    DegreeZero,
    NonSplitField,
    NotPrime,
    HorizonTooSmall,
    CharPositive,
    NotConjugateSymmetric,
    EmptyInput,
    OrderTooLarge,
    CharacteristicMismatch,
    AnnihilatorMismatch,
    InsufficientData,
    SingularMatrix,
    PrincipalUndefined,
    ZeroLogClash,
    BranchArity,
    NotReal,
    DimensionMismatch,
    DivisionByZero,
    InvalidArgument,
    ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

   private:
    ErrorCode code_;
};

}  // namespace pcanon

#endif
