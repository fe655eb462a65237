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


#ifndef FEWWEIGHT_CASE_KEYS_HPP
#define FEWWEIGHT_CASE_KEYS_HPP

#include <cstdint>

namespace fewweight {

struct CaseKeys {
  unsigned alpha = 0;    // gcd(m, e)
  unsigned ell = 0;      // m / 2
  unsigned epsilon = 0;  // 0 if ell/alpha is odd, alpha otherwise
  unsigned m_p = 0;      // m mod p
  bool m_over_alpha_even = false;
  bool ell_over_alpha_even = false;
};

// Throws OddM for odd m.
CaseKeys case_keys(std::uint64_t q, unsigned m, unsigned e, unsigned p);

// q^k for k >= 0; throws SizeOverflow past int64.
std::int64_t ipow(std::uint64_t q, int k);

}  // namespace fewweight

#endif  // FEWWEIGHT_CASE_KEYS_HPP
