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

#include "pcanon/error.hpp"

namespace pcanon {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::NumericFieldUnsupported: return "NumericFieldUnsupported";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NonMonic: return "NonMonic";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::NonSplitField: return "NonSplitField";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
        case ErrorCode::CharPositive: return "CharPositive";
        case ErrorCode::NotConjugateSymmetric: return "NotConjugateSymmetric";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
        case ErrorCode::AnnihilatorMismatch: return "AnnihilatorMismatch";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::PrincipalUndefined: return "PrincipalUndefined";
        case ErrorCode::ZeroLogClash: return "ZeroLogClash";
        case ErrorCode::BranchArity: return "BranchArity";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace pcanon
