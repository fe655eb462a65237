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


#include "fewweight/case_keys.hpp"

#include <numeric>
#include <string>

#include "fewweight/error.hpp"

namespace fewweight {

CaseKeys case_keys(std::uint64_t q, unsigned m, unsigned e, unsigned p) {
  (void)q;
  if (m % 2 != 0) throw Error(Errc::OddM, "m = " + std::to_string(m) + " is odd");
  if (e == 0) throw Error(Errc::InvalidArgument, "e must be >= 1");
  CaseKeys k;
  k.alpha = std::gcd(m, e);
  k.ell = m / 2;
  k.m_p = m % p;
  k.m_over_alpha_even = (m / k.alpha) % 2 == 0;
  k.ell_over_alpha_even = k.m_over_alpha_even && (k.ell / k.alpha) % 2 == 0;
  k.epsilon = k.ell_over_alpha_even ? k.alpha : 0;
  return k;
}

std::int64_t ipow(std::uint64_t q, int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > INT64_MAX / static_cast<std::int64_t>(q)) throw Error(Errc::SizeOverflow, "integer power overflow");
    r *= static_cast<std::int64_t>(q);
  }
  return r;
}

}  // namespace fewweight
