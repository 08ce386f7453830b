/*
   Copyright 2026 The ffhyp Authors

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

#ifndef FFHYP_ERROR_HPP
#define FFHYP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffhyp {

enum class Errc {
    InvalidArgument,
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    NoRoot,
    BudgetExceeded,
    PoleAtPoint,
    NonzeroDegree,
    Unfactorable,
    FieldTooSmall,
    PoleOnConductor,
    SupportMeetsConductor,
    ZeroConductor,
    ZeroAlphaBeta,
    ZeroAlpha,
    WrongRegime,
    UndefinedRegime,
    DegenerateFunctional,
    BadDegree,
    RelationFails,
    NonGenericBasepoint,
    Degenerate,
    SolveFailed,
    NoDecomposition,
    VanishingDeterminant,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::NoRoot: return "NoRoot";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::NonzeroDegree: return "NonzeroDegree";
        case Errc::Unfactorable: return "Unfactorable";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::PoleOnConductor: return "PoleOnConductor";
        case Errc::SupportMeetsConductor: return "SupportMeetsConductor";
        case Errc::ZeroConductor: return "ZeroConductor";
        case Errc::ZeroAlphaBeta: return "ZeroAlphaBeta";
        case Errc::ZeroAlpha: return "ZeroAlpha";
        case Errc::WrongRegime: return "WrongRegime";
        case Errc::UndefinedRegime: return "UndefinedRegime";
        case Errc::DegenerateFunctional: return "DegenerateFunctional";
        case Errc::BadDegree: return "BadDegree";
        case Errc::RelationFails: return "RelationFails";
        case Errc::NonGenericBasepoint: return "NonGenericBasepoint";
        case Errc::Degenerate: return "Degenerate";
        case Errc::SolveFailed: return "SolveFailed";
        case Errc::NoDecomposition: return "NoDecomposition";
        case Errc::VanishingDeterminant: return "VanishingDeterminant";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ffhyp

#endif
