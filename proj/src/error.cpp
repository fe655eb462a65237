// Copyright 2026 The fewweight Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fewweight/error.hpp"

namespace fewweight {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::EvenP: return "EvenP";
    case Errc::SizeOverflow: return "SizeOverflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::ClosedFormInapplicable: return "ClosedFormInapplicable";
    case Errc::OddQuotientUnsupported: return "OddQuotientUnsupported";
    case Errc::OddCaseUnsupported: return "OddCaseUnsupported";
    case Errc::OddM: return "OddM";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::UncoveredCase: return "UncoveredCase";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fewweight
